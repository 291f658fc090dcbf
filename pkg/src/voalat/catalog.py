"""The frozen catalog of 46 lattice pairs behind the ten cyclic classes.

Every entry describes one pair (L, U) of even lattices with U = sqrt(ell) L*
and L = sqrt(ell) U*.  The description is purely combinatorial: a semisimple
Lie structure (simple factors with levels), a direct sum of rescaled root
lattice summands, and glue class coordinates over the summand discriminant
groups.  build() reconstructs the pair together with the embedded rescaled
root lattice Q inside L*, whose cokernel invariants and root data downstream
checks compare against the stored expectations.

Entries are stored in data/entries.txt, one line each, and are produced by
tools/freeze_catalog.py; the parser here is intentionally strict so that a
corrupted data file fails loudly rather than building a wrong lattice.
"""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import exactmat as em
from . import lattice as lat

CLASSES = ("2A", "3B", "2C", "4C", "5B", "6E", "6G", "7B", "8E", "10F")

# Level ell of the pair: U = sqrt(ell) L*.
CLASS_LEVEL = {
    "2A": 2, "3B": 3, "2C": 4, "4C": 4, "5B": 5,
    "6E": 6, "6G": 12, "7B": 7, "8E": 8, "10F": 20,
}

# Rank of the coinvariant lattice of the underlying isometry; the rank law
# says rank(L) = 24 - this.
CLASS_COINVARIANT_RANK = {
    "2A": 8, "3B": 12, "2C": 12, "4C": 14, "5B": 16,
    "6E": 16, "6G": 18, "7B": 18, "8E": 18, "10F": 20,
}

# Invariant factors of the discriminant group of L, identical within a class.
CLASS_DISC = {
    "2A": (2,) * 10,
    "3B": (3,) * 8,
    "2C": (2,) * 10 + (4, 4),
    "4C": (2, 2, 4, 4, 4, 4, 4, 4),
    "5B": (5,) * 6,
    "6E": (6,) * 6,
    "6G": (2, 6, 6, 6, 12, 12),
    "7B": (7,) * 5,
    "8E": (2, 4, 8, 8, 8, 8),
    "10F": (10, 10, 20, 20),
}


def class_rank(cls):
    return 24 - CLASS_COINVARIANT_RANK[cls]


def lie_dim(family, rank):
    """Dimension of the simple Lie algebra with this root system."""
    if family == "A":
        return rank * (rank + 2)
    if family in ("B", "C"):
        return rank * (2 * rank + 1)
    if family == "D":
        return rank * (2 * rank - 1)
    if family == "E":
        return {6: 78, 7: 133, 8: 248}[rank]
    if family == "F":
        return 52
    if family == "G":
        return 14
    raise ValueError(family)


def dual_coxeter(family, rank):
    if family == "A":
        return rank + 1
    if family == "B":
        return 2 * rank - 1
    if family == "C":
        return rank + 1
    if family == "D":
        return 2 * rank - 2
    if family == "E":
        return {6: 12, 7: 18, 8: 30}[rank]
    if family == "F":
        return 9
    if family == "G":
        return 4
    raise ValueError(family)


def weyl_minus_one(family, rank):
    """Whether -1 lies in the Weyl group of this simple type."""
    if family == "A":
        return rank == 1
    if family in ("B", "C", "F", "G"):
        return True
    if family == "D":
        return rank % 2 == 0
    if family == "E":
        return rank != 6
    raise ValueError(family)


def long_summands(family, rank):
    """The long-root sublattice as a list of (family, rank) A-D-E summands."""
    if family in ("A", "D", "E"):
        return ((family, rank),)
    if family == "B":
        return (("D", rank),)
    if family == "C":
        return (("A", 1),) * rank
    if family == "F":
        return (("D", 4),)
    if family == "G":
        return (("A", 2),)
    raise ValueError(family)


def d_pattern(n):
    """Rows of the standard D_n basis over an orthonormal frame."""
    if n < 2:
        raise ValueError("D_n pattern needs n >= 2")
    rows = []
    for i in range(n - 1):
        r = [0] * n
        r[i] = 1
        r[i + 1] = -1
        rows.append(r)
    r = [0] * n
    r[n - 2] = 1
    r[n - 1] = 1
    rows.append(r)
    got = em.mat_mul(rows, em.transpose(rows))
    if not em.mat_eq(got, lat.standard_lattice("D", n).gram):
        raise ArithmeticError("D_%d pattern does not match the catalog basis" % n)
    return rows


def full_over_long(family, rank):
    """Basis of the full root lattice over its long-root summand basis.

    Rows are rational; long roots keep norm 2, so the full lattice of a
    non-simply-laced type is a genuinely finer lattice (shorter vectors).
    """
    if family in ("A", "D", "E"):
        return em.mat_frac(em.identity(rank))
    if family == "B":
        return em.mat_inv(d_pattern(rank))
    if family == "C":
        return em.scalar_mul(Fraction(1, 2), em.mat_frac(d_pattern(rank)))
    if family == "F":
        m = [[Fraction(1), Fraction(0), Fraction(0), Fraction(0)],
             [Fraction(0), Fraction(1), Fraction(0), Fraction(0)],
             [Fraction(0), Fraction(0), Fraction(1), Fraction(0)],
             [Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)]]
        return em.mat_mul(m, em.mat_inv(d_pattern(4)))
    if family == "G":
        return [[Fraction(-1, 3), Fraction(1, 3)], [Fraction(1), Fraction(0)]]
    raise ValueError(family)


def disc_reps(gram):
    """Generators of dual/primal for an integral gram matrix.

    Returns (divisors, rows): invariant factors > 1 in ascending order and,
    for each, a rational coordinate row over the lattice basis representing
    a generator of that cyclic factor.
    """
    g = em.mat_int(gram)
    d, _, v = em.snf(g)
    pre = em.mat_inv(em.mat_mul(g, v))
    divisors = []
    rows = []
    for i in range(len(g)):
        if d[i][i] > 1:
            divisors.append(d[i][i])
            rows.append(list(pre[i]))
    return divisors, rows


@dataclass(frozen=True)
class LieComp:
    family: str
    rank: int
    level: int
    mult: int = 1


@dataclass(frozen=True)
class Summand:
    family: str
    rank: int
    scale: int


@dataclass(frozen=True)
class Entry:
    no: int
    cls: str
    lie: tuple
    mode: str
    sums: tuple
    gens: tuple
    kv: tuple
    out_order: int
    ol_order: int
    ru: str

    @property
    def level(self):
        return CLASS_LEVEL[self.cls]

    def lie_string(self):
        toks = []
        for c in self.lie:
            t = "%s%d.%d" % (c.family, c.rank, c.level)
            toks.append(t if c.mult == 1 else "%sx%d" % (t, c.mult))
        return ",".join(toks)


def dim_v1(entry):
    """Dimension of the semisimple Lie algebra recorded for the entry."""
    return sum(c.mult * lie_dim(c.family, c.rank) for c in entry.lie)


def parse_lie(s):
    out = []
    for tok in s.split(","):
        mult = 1
        if "x" in tok:
            tok, m = tok.split("x")
            mult = int(m)
        fam = tok[0]
        body = tok[1:]
        rank, level = body.split(".")
        if fam not in "ABCDEFG":
            raise ValueError("bad family in %r" % tok)
        out.append(LieComp(fam, int(rank), int(level), mult))
    return tuple(out)


def parse_sums(s):
    out = []
    for tok in s.split(","):
        mult = 1
        if "x" in tok:
            tok, m = tok.split("x")
            mult = int(m)
        fam = tok[0]
        rank, scale = tok[1:].split("*")
        if fam not in ("A", "D", "E"):
            raise ValueError("summand family must be A, D or E: %r" % tok)
        out.extend([Summand(fam, int(rank), int(scale))] * mult)
    return tuple(out)


def parse_gens(s):
    if s == "-":
        return ()
    gens = []
    for gtok in s.split(";"):
        slots = []
        for stok in gtok.split(","):
            if stok == "-":
                slots.append(())
            else:
                slots.append(tuple(int(x) for x in stok.split(".")))
        gens.append(tuple(slots))
    return tuple(gens)


def parse_ints(s):
    return () if s == "-" else tuple(int(x) for x in s.split("."))


def parse_entry_line(line):
    parts = line.split("|")
    if len(parts) != 10:
        raise ValueError("entry line needs 10 fields, got %d" % len(parts))
    no = int(parts[0])
    cls = parts[1]
    if cls not in CLASSES:
        raise ValueError("unknown class %r" % cls)
    e = Entry(
        no=no,
        cls=cls,
        lie=parse_lie(parts[2]),
        mode=parts[3],
        sums=parse_sums(parts[4]),
        gens=parse_gens(parts[5]),
        kv=parse_ints(parts[6]),
        out_order=int(parts[7]),
        ol_order=int(parts[8]),
        ru=parts[9],
    )
    if e.mode not in ("U", "L"):
        raise ValueError("mode must be U or L")
    for g in e.gens:
        if len(g) != len(e.sums):
            raise ValueError("entry %d: generator has %d slots, needs %d"
                             % (no, len(g), len(e.sums)))
    return e


def data_path():
    return Path(__file__).resolve().parent / "data" / "entries.txt"


_ENTRIES = None


def load_entries(path=None):
    """All catalog entries keyed by entry number."""
    global _ENTRIES
    if path is None and _ENTRIES is not None:
        return _ENTRIES
    p = Path(path) if path is not None else data_path()
    out = {}
    for line in p.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        e = parse_entry_line(line)
        if e.no in out:
            raise ValueError("duplicate entry %d" % e.no)
        out[e.no] = e
    if path is None:
        _ENTRIES = out
    return out


def entries_of_class(cls, path=None):
    return [e for e in load_entries(path).values() if e.cls == cls]


def summand_model(s):
    return lat.rescale(lat.standard_lattice(s.family, s.rank), s.scale)


@dataclass(frozen=True)
class SimpleCurrentGroup:
    """The group of simple current modules of one simple affine factor.

    divisors are the invariant factors of the group (empty means trivial),
    labels name one generator per divisor, and gammas are the integer
    matrices of the outer symmetries acting on generator coordinates
    (taken mod the divisors).
    """
    family: str
    rank: int
    level: int
    divisors: tuple
    labels: tuple
    gammas: tuple

    @property
    def order(self):
        n = 1
        for d in self.divisors:
            n *= d
        return n


def _cyclic(div, label, invert):
    gammas = (((1,),),) if not invert else (((1,),), ((-1,),))
    return (div,), (label,), gammas


# All six invertible 2x2 matrices over F_2; triality permutes the three
# nonzero classes of the D_4 discriminant group arbitrarily.
_GL2F2 = (((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)),
          ((1, 0), (1, 1)), ((0, 1), (1, 1)), ((1, 1), (1, 0)))


def simple_current_group(family, rank, level):
    """Simple current group, generator labels and outer action for one factor."""
    if level < 1:
        raise ValueError("level must be positive")
    if family == "A":
        if rank == 1:
            d, lab, g = _cyclic(2, "kL1", False)
        else:
            d, lab, g = _cyclic(rank + 1, "kL1", True)
    elif family == "B":
        if rank < 2:
            raise ValueError("B_n needs n >= 2")
        d, lab, g = _cyclic(2, "kL1", False)
    elif family == "C":
        if rank < 2:
            raise ValueError("C_n needs n >= 2")
        d, lab, g = _cyclic(2, "kLn", False)
    elif family == "D":
        if rank < 4:
            raise ValueError("D_n needs n >= 4 here")
        if rank == 4:
            d, lab, g = (2, 2), ("s", "c"), _GL2F2
        elif rank % 2 == 0:
            d, lab, g = (2, 2), ("s", "c"), (_GL2F2[0], _GL2F2[1])
        else:
            d, lab, g = _cyclic(4, "s", True)
    elif family == "E":
        if rank == 6:
            d, lab, g = _cyclic(3, "kL1", True)
        elif rank == 7:
            d, lab, g = _cyclic(2, "kL6", False)
        elif rank == 8:
            if level == 2:
                d, lab, g = _cyclic(2, "g", False)
            else:
                d, lab, g = (), (), (((),),)
        else:
            raise ValueError("E_n needs n in 6,7,8")
    elif family in ("F", "G"):
        d, lab, g = (), (), (((),),)
    else:
        raise ValueError("unknown family %r" % (family,))
    return SimpleCurrentGroup(family, rank, level, d, lab, g)


def _e1_over_d_basis(n):
    # e1 = b1 + ... + b_{n-2} + (b_{n-1} + b_n)/2 in the standard D_n basis
    row = [Fraction(1)] * (n - 2) + [Fraction(1, 2), Fraction(1, 2)]
    return row


def _current_gen_rows(family, rank):
    """Coordinate rows (over the long-root summand basis) of the group
    generators named by simple_current_group, one row per divisor."""
    if family == "A":
        inv = em.mat_inv(lat.standard_lattice("A", rank).gram)
        return [list(inv[0])]
    if family == "B":
        return [_e1_over_d_basis(rank)]
    if family == "C":
        return [[Fraction(1, 2)] * rank]
    if family == "D":
        inv = em.mat_inv(lat.standard_lattice("D", rank).gram)
        if rank % 2 == 0:
            return [list(inv[rank - 2]), list(inv[rank - 1])]
        return [list(inv[rank - 1])]
    if family == "E":
        if rank == 8:
            raise NotImplementedError("E8 currents have no lattice class")
        inv = em.mat_inv(lat.standard_lattice("E", rank).gram)
        for row in inv:
            if not all(x.denominator == 1 for x in map(Fraction, row)):
                return [list(row)]
        raise ArithmeticError("E_%d dual basis has no fractional row" % rank)
    if family in ("F", "G"):
        return []
    raise ValueError(family)


@dataclass(frozen=True)
class ScSlot:
    """One copy of a simple affine factor with its summand positions."""
    lie_index: int
    copy: int
    scg: SimpleCurrentGroup
    summand_range: tuple
    gen_rows: tuple

    def element_row(self, coords, width):
        """Ambient coordinate row (over the whole summand basis) of the
        group element with the given generator coordinates."""
        row = [Fraction(0)] * width
        lo = self.summand_range[0]
        for j, g in zip(coords, self.gen_rows):
            for k, x in enumerate(g):
                row[lo + k] += j * Fraction(x)
        return row

    def elements(self):
        out = [()]
        for d in self.scg.divisors:
            out = [c + (j,) for c in out for j in range(d)]
        return [tuple(c) for c in out]


def sc_slots(entry):
    """Simple current slots of the entry, one per simple factor copy.

    Current classes embed canonically in the discriminant group of the
    summand block at any scale (the generator coordinate rows over the
    root basis do not depend on the scale).  The summand scale is still
    checked against the structure: level itself in L mode, ell/level in
    U mode.  Returns (slots, total basis width).
    """
    cols = []
    col = 0
    for s in entry.sums:
        cols.append((col, col + s.rank))
        col += s.rank
    width_all = col
    pos = 0
    res = []
    sums = list(entry.sums)
    ell = entry.level
    for li, c in enumerate(entry.lie):
        need = long_summands(c.family, c.rank)
        for copy in range(c.mult):
            got = tuple((s.family, s.rank) for s in sums[pos:pos + len(need)])
            if got != need:
                raise ArithmeticError(
                    "entry %d: summands out of phase with the Lie structure"
                    % entry.no)
            trivial = simple_current_group(c.family, c.rank,
                                           c.level).divisors == ()
            if not trivial:
                if entry.mode == "L":
                    want = c.level
                elif ell % c.level == 0:
                    want = ell // c.level
                else:
                    want = -1
                for s in sums[pos:pos + len(need)]:
                    if s.scale != want:
                        raise ArithmeticError(
                            "entry %d: summand scale differs from the level"
                            % entry.no)
            lo = cols[pos][0]
            hi = cols[pos + len(need) - 1][1]
            scg = simple_current_group(c.family, c.rank, c.level)
            if scg.divisors == ():
                gen_rows = ()
            else:
                gen_rows = tuple(tuple(r)
                                 for r in _current_gen_rows(c.family, c.rank))
            for r in gen_rows:
                if len(r) != hi - lo:
                    raise ArithmeticError("generator row width mismatch")
            res.append(ScSlot(li, copy, scg, (lo, hi), gen_rows))
            pos += len(need)
    if pos != len(sums):
        raise ArithmeticError("entry %d: unused summands" % entry.no)
    return tuple(res), width_all


def slots_from_lie(lie):
    """Simple current slots for a bare level-one ADE structure.

    Used for the unimodular rows of the catalog's companion table, where
    the summands are the root lattices themselves.  Returns the same
    (slots, width) shape as sc_slots.
    """
    res = []
    col = 0
    for li, c in enumerate(lie):
        if c.family not in ("A", "D", "E"):
            raise ValueError("only ADE factors occur here, got %r" % c.family)
        for copy in range(c.mult):
            scg = simple_current_group(c.family, c.rank, c.level)
            if scg.divisors == ():
                gen_rows = ()
            else:
                gen_rows = tuple(tuple(r)
                                 for r in _current_gen_rows(c.family, c.rank))
            res.append(ScSlot(li, copy, scg, (col, col + c.rank), gen_rows))
            col += c.rank
    return tuple(res), col


def slot_class_coords(slot, row):
    """Generator coordinates of a class given by a rational coordinate row
    over the slot's summand basis; None if the row is not in the group."""
    for coords in slot.elements():
        diff = list(row)
        for j, g in zip(coords, slot.gen_rows):
            for k, x in enumerate(g):
                diff[k] -= j * Fraction(x)
        if all(Fraction(x).denominator == 1 for x in diff):
            return coords
    return None


def parse_sc_token(slot, tok):
    """Glue-code file token for one slot -> generator coordinates."""
    d = slot.scg.divisors
    if d == ():
        if tok not in ("0", "-"):
            raise ValueError("slot has a trivial current group, got %r" % tok)
        return ()
    if d == (2, 2):
        m = {"0": (0, 0), "v": (1, 1), "s": (1, 0), "c": (0, 1)}
        if tok not in m:
            raise ValueError("even D slot token must be 0/v/s/c, got %r" % tok)
        return m[tok]
    if len(d) != 1:
        raise ValueError("unhandled current group shape %r" % (d,))
    if d == (4,) and tok in ("v", "s", "c"):
        return ({"s": 1, "v": 2, "c": 3}[tok],)
    try:
        j = int(tok)
    except ValueError:
        raise ValueError("expected an integer token, got %r" % tok)
    return (j % d[0],)


def format_sc_token(slot, coords):
    d = slot.scg.divisors
    if d == ():
        return "0"
    if d == (2, 2):
        return {(0, 0): "0", (1, 1): "v", (1, 0): "s", (0, 1): "c"}[tuple(coords)]
    return str(coords[0] % d[0])


def glue_slots(no):
    """Simple current slots for any numbered row of the big table.

    Catalog entries resolve through sc_slots; the unimodular rows carry
    their Lie structure in the companion data file.
    """
    entries = load_entries()
    if no in entries:
        return sc_slots(entries[no])
    for row in load_lattice_cases():
        if row[0] == no:
            if row[1] == "-":
                raise ValueError("row %d has no simple factors" % no)
            return slots_from_lie(parse_lie(row[1]))
    raise ValueError("unknown table row %d" % no)


def load_glue_codes(path):
    """Parse an external glue-code file: lines `no|tok,tok,...;...`.

    Tokens follow parse_sc_token, one per simple factor copy; a bare `-`
    generator list means the trivial code.  Returns {row_no: tuple of
    generator coordinate tuples}.
    """
    out = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        no_s, gens_s = line.split("|", 1)
        no = int(no_s)
        slots, _ = glue_slots(no)
        gens = []
        if gens_s.strip() != "-":
            for gtok in gens_s.split(";"):
                toks = [t.strip() for t in gtok.split(",")]
                if len(toks) != len(slots):
                    raise ValueError(
                        "entry %d: generator has %d tokens, needs %d"
                        % (no, len(toks), len(slots)))
                gens.append(tuple(parse_sc_token(s, t)
                                  for s, t in zip(slots, toks)))
        if no in out:
            raise ValueError("duplicate glue-code row for entry %d" % no)
        out[no] = tuple(gens)
    return out


def lattice_cases_path():
    return Path(__file__).resolve().parent / "data" / "lattice_cases.txt"


def load_lattice_cases(path=None):
    """The 24 rows of the big K/Out table whose VOA comes from an even
    unimodular lattice.

    Each row is (no, lie, out label, k label) sorted by no, where lie is
    the weight-one Lie structure in the catalog's syntax ("-" for the
    rank-24 torus row) and the labels are stored display strings."""
    p = Path(path) if path is not None else lattice_cases_path()
    rows = []
    for line in p.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        no, lie, out_lab, k_lab = line.split("|")
        rows.append((int(no), lie, out_lab, k_lab))
    return sorted(rows)


def lie_summands(entry):
    """Expected summand sequence implied by the Lie structure (L mode)."""
    out = []
    for c in entry.lie:
        for _ in range(c.mult):
            for fam, rank in long_summands(c.family, c.rank):
                out.append(Summand(fam, rank, c.level))
    return tuple(out)


class Built:
    """A reconstructed catalog entry."""

    __slots__ = ("entry", "sum_lat", "glue_emb", "L", "U",
                 "qtilde_emb", "kv")

    def __init__(self, entry, sum_lat, glue_emb, big_l, big_u, qtilde_emb):
        self.entry = entry
        self.sum_lat = sum_lat
        self.glue_emb = glue_emb
        self.L = big_l
        self.U = big_u
        self.qtilde_emb = qtilde_emb
        self.kv = tuple(lat.quotient_invariants(qtilde_emb))

    @property
    def root_rows(self):
        """Rows of the rescaled root lattice over the basis of U."""
        return self.qtilde_emb.rows


def assemble_glue_rows(entry, slot_lats):
    """Rational coordinate rows for the entry's glue generators."""
    reps = []
    offs = []
    off = 0
    for sl in slot_lats:
        divs, rows = disc_reps(sl.gram)
        reps.append((divs, rows))
        offs.append(off)
        off += sl.rank
    total = off
    out = []
    for g in entry.gens:
        row = [Fraction(0)] * total
        for si, coords in enumerate(g):
            divs, rows = reps[si]
            if not coords:
                continue
            if len(coords) != len(divs):
                raise ValueError(
                    "entry %d: slot %d wants %d coordinates, got %d"
                    % (entry.no, si, len(divs), len(coords)))
            for c, r in zip(coords, rows):
                if c:
                    for j, x in enumerate(r):
                        row[offs[si] + j] += c * x
        out.append(row)
    return out


def block_diag_frac(blocks):
    n = sum(len(b) for b in blocks)
    m = sum(len(b[0]) for b in blocks)
    out = [[Fraction(0)] * m for _ in range(n)]
    ro = co = 0
    for b in blocks:
        for i, r in enumerate(b):
            for j, x in enumerate(r):
                out[ro + i][co + j] = Fraction(x)
        ro += len(b)
        co += len(b[0])
    return out


def build(entry):
    """Reconstruct the lattice pair and embedded root lattice of an entry."""
    slot_lats = [summand_model(s) for s in entry.sums]
    sum_lat = lat.direct_sum(*slot_lats)
    rows = assemble_glue_rows(entry, slot_lats)
    if rows:
        big, emb = lat.glue_extend(sum_lat, rows)
    else:
        big, emb = sum_lat, lat.Embedding(sum_lat, sum_lat,
                                          em.identity(sum_lat.rank))
    ell = entry.level
    if not lat.is_even(big):
        raise ArithmeticError("entry %d: glued lattice is not even" % entry.no)
    if entry.mode == "U":
        big_u = big
        big_l = lat.rescale(lat.dual(big_u), ell)
        qlat = lat.rescale(sum_lat, Fraction(1, ell))
        qrows = emb.rows
    else:
        big_l = big
        big_u = lat.rescale(lat.dual(big_l), ell)
        if lie_summands(entry) != entry.sums:
            raise ArithmeticError(
                "entry %d: summands do not match the Lie structure" % entry.no)
        blocks = []
        for c in entry.lie:
            f = full_over_long(c.family, c.rank)
            f = em.scalar_mul(Fraction(1, c.level), f)
            blocks.extend([f] * c.mult)
        q_over_sum = block_diag_frac(blocks)
        qgram = em.mat_mul(em.mat_mul(q_over_sum, sum_lat.gram),
                           em.transpose(q_over_sum))
        qlat = lat.Lattice(qgram)
        qrows = em.mat_mul(em.mat_mul(q_over_sum, em.mat_frac(emb.rows)),
                           em.mat_frac(big_l.gram))
        if not em.is_integral(qrows):
            raise ArithmeticError(
                "entry %d: root lattice rows are not integral over the dual"
                % entry.no)
        qrows = em.mat_int(qrows)
    if not lat.is_even(big_l) or not lat.is_even(big_u):
        raise ArithmeticError("entry %d: pair is not even" % entry.no)
    qemb = lat.Embedding(qlat, lat.dual(big_l), qrows)
    return Built(entry, sum_lat, emb, big_l, big_u, qemb)
