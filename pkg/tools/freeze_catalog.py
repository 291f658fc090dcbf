"""Produce src/voalat/data/entries.txt from first principles.

For every catalog entry this script either verifies a hand-derived glue
code or searches for one: the search space is the product of the summand
discriminant groups, candidates are totally isotropic subgroups of the
right order, and a candidate is accepted only if the glued lattice has the
expected determinant, level, discriminant invariants, cokernel invariants
and root system.  The accepted coordinates are frozen into the data file
together with the expected invariants used by the verification layer.

Run from the repository root:  python tools/freeze_catalog.py
"""

import math
import sys
import time
from dataclasses import replace
from fractions import Fraction
from itertools import product
from math import gcd
from pathlib import Path

from voalat import catalog as cat
from voalat import exactmat as em
from voalat import lattice as lat
from voalat import rootsys as rs
from voalat import shortvec as sv
from voalat.isometry import isometry

OUT_PATH = Path(__file__).resolve().parent.parent / "src" / "voalat" / "data" / "entries.txt"


def weyl(family, rank):
    return rs.weyl_order(family, rank)


# ---------------------------------------------------------------------------
# expected |O(L)| implied by the printed group structure, one per entry
# ---------------------------------------------------------------------------

OL = {
    # level 2, rank 16
    5: 2 ** 16 * 322560,
    16: 24 ** 4 * 2 ** 4 * 192,
    25: 192 ** 2 * 8 ** 4 * 48,
    26: 720 ** 2 * 36 * 8 * 8,
    31: 1920 ** 2 * 24 ** 2 * 8,
    33: 40320 * 24 * 48 ** 2 * 4,
    38: 384 ** 4 * 24,
    39: 23040 * 384 * 48 ** 2 * 2,
    40: 3628800 * 120 * 48 * 2,
    44: 51840 * 720 * 3840 * 2,
    47: weyl("D", 8) * weyl("B", 4) ** 2 * 2,
    48: 46080 ** 2 * 2 * 384,
    50: weyl("D", 9) * 40320 * 2,
    52: weyl("B", 8) * 1152 ** 2 * 2,
    53: weyl("E", 7) * weyl("B", 5) * 1152,
    56: weyl("B", 10) * weyl("B", 6),
    62: weyl("B", 8) * weyl("E", 8),
    # level 3, rank 12
    6: 67184640,
    17: 13271040,
    27: 52254720,
    32: 1074954240,
    34: 185794560,
    45: 4180377600,
    # level 4 (2C), rank 12: one order per isometry class
    2: 2 ** 12 * 479001600,
    12: 2 ** 12 * 479001600,
    23: 2 ** 12 * 479001600,
    29: 2 ** 12 * 479001600,
    41: 2 ** 12 * 479001600,
    57: 2 ** 12 * 479001600,
    13: 1152 * weyl("E", 8),
    22: 1152 * weyl("E", 8),
    36: 1152 * weyl("E", 8),
    # level 4 (4C), rank 10
    7: 1327104,
    18: 1290240,
    19: 1474560,
    28: 4976640,
    35: 30965760,
    # level 5, rank 8
    9: 115200,
    20: 184320,
    # level 6, rank 8
    8: 23040,
    21: 23040,
    # level 12, rank 6
    3: 13824,
    14: 13824,
    # level 7, rank 6
    11: 10080,
    # level 8, rank 6
    10: 7680,
    # level 20, rank 4
    4: 1152,
}

OUT_ORDER = {
    5: 322560, 16: 192, 25: 48, 26: 8, 31: 8, 33: 4, 38: 24, 39: 2,
    40: 2, 44: 2, 47: 2, 48: 2, 50: 2, 52: 2, 53: 1, 56: 1, 62: 1,
    6: 720, 17: 6, 27: 2, 32: 6, 34: 1, 45: 1,
    2: 95040, 12: 120, 23: 12, 29: 6, 41: 2, 57: 1, 13: 48, 22: 4, 36: 2,
    7: 24, 18: 2, 19: 2, 28: 1, 35: 1,
    9: 4, 20: 1, 8: 2, 21: 1, 11: 1, 10: 1, 3: 6, 14: 1, 4: 1,
}

KV = {
    5: (2, 2, 2, 2, 2), 16: (2, 2, 2, 4), 25: (2, 2, 2), 26: (3, 6),
    31: (4, 4), 33: (2, 4), 38: (2,), 39: (2, 2), 40: (10,), 44: (6,),
    47: (2, 2), 48: (2,), 50: (8,), 52: (), 53: (2,), 56: (2,), 62: (2,),
    6: (3,), 17: (2, 2, 2), 27: (3, 3), 32: (), 34: (4,), 45: (6,),
    2: (2,), 12: (2,), 23: (2,), 29: (2,), 41: (2,), 57: (2,),
    13: (3, 3), 22: (5,), 36: (3,),
    7: (2,), 18: (2, 2, 2), 19: (2, 2, 2), 28: (6,), 35: (2, 2),
    9: (), 20: (2, 2), 8: (2,), 21: (2,), 11: (), 10: (2,),
    3: (), 14: (3,), 4: (),
}

# Entries whose printed K column contradicts the determinant identity
# |L*/Qtilde|^2 = det(L) * det(Qtilde); the stored kv keeps the printed
# value as the downstream comparison target, while the build is verified
# against the arithmetically forced group here.
KV_ARITH = {19: (2, 2), 35: (4,)}

RU = {
    5: "A1^16",
    16: "A3^4+sqrt2A1^4",
    25: "D4^2+C2^4",
    26: "A5^2+C2+sqrt2A2^2",
    31: "D5^2+sqrt2A3^2",
    33: "A7+C3^2+sqrt2A3",
    38: "C4^4",
    39: "D6+C4+B3^2",
    40: "A9+B3+sqrt2A4",
    44: "E6+C5+sqrt2A5",
    47: "D8+B4^2",
    48: "C6^2+B4",
    50: "D9+sqrt2A7",
    52: "C8+F4^2",
    53: "E7+B5+F4",
    56: "C10+B6",
    62: "B8+E8",
    6: "A2^6",
    17: "A5+D4+sqrt3A1^3",
    27: "A8+sqrt3A2^2",
    32: "E6+G2^3",
    34: "D7+G2+sqrt3A3",
    45: "E7+sqrt3A5",
    9: "A4^2",
    20: "D6+sqrt5A1^2",
    11: "A6",
}

LIE = {
    2: "A1.4x12", 3: "D4.12,A2.6", 4: "C4.10", 5: "A1.2x16", 6: "A2.3x6",
    7: "A3.4x3,A1.2", 8: "A5.6,B2.3,A1.2", 9: "A4.5x2", 10: "D5.8,A1.2",
    11: "A6.7", 12: "B2.2x6", 13: "D4.4,A2.2x4", 14: "F4.6,A2.2",
    16: "A3.2x4,A1.1x4", 17: "A5.3,D4.3,A1.1x3", 18: "A7.4,A1.1x3",
    19: "D5.4,C3.2,A1.1x2", 20: "D6.5,A1.1x2", 21: "C5.3,G2.2,A1.1",
    22: "C4.2,A4.2x2", 23: "B3.2x4", 25: "D4.2x2,C2.1x4",
    26: "A5.2x2,C2.1,A2.1x2", 27: "A8.3,A2.1x2", 28: "E6.4,A2.1,B2.1",
    29: "B4.2x3", 31: "D5.2x2,A3.1x2", 32: "E6.3,G2.1x3",
    33: "A7.2,C3.1x2,A3.1", 34: "D7.3,A3.1,G2.1", 35: "C7.2,A3.1",
    36: "A8.2,F4.2", 38: "C4.1x4", 39: "D6.2,C4.1,B3.1x2",
    40: "A9.2,A4.1,B3.1", 41: "B6.2x2", 44: "E6.2,C5.1,A5.1",
    45: "E7.3,A5.1", 47: "D8.2,B4.1x2", 48: "C6.1x2,B4.1",
    50: "D9.2,A7.1", 52: "C8.1,F4.1x2", 53: "E7.2,B5.1,F4.1",
    56: "C10.1,B6.1", 57: "B12.2", 62: "B8.1,E8.2",
}

CLASS_OF = {
    2: "2C", 3: "6G", 4: "10F", 5: "2A", 6: "3B", 7: "4C", 8: "6E",
    9: "5B", 10: "8E", 11: "7B", 12: "2C", 13: "2C", 14: "6G", 16: "2A",
    17: "3B", 18: "4C", 19: "4C", 20: "5B", 21: "6E", 22: "2C", 23: "2C",
    25: "2A", 26: "2A", 27: "3B", 28: "4C", 29: "2C", 31: "2A", 32: "3B",
    33: "2A", 34: "3B", 35: "4C", 36: "2C", 38: "2A", 39: "2A", 40: "2A",
    41: "2C", 44: "2A", 45: "3B", 47: "2A", 48: "2A", 50: "2A", 52: "2A",
    53: "2A", 56: "2A", 57: "2C", 62: "2A",
}

# Summand lists for U-mode entries: spans of the root system components.
SUMS_U = {
    5: "A1*1x16",
    16: "A3*1x4,A1*2x4",
    25: "D4*1x2,A1*1x8",
    26: "A5*1x2,A1*1x2,A2*2x2",
    31: "D5*1x2,A3*2x2",
    33: "A7*1,D3*1x2,A3*2",
    38: "D4*1x4",
    39: "D6*1,D4*1,A1*1x6",
    40: "A9*1,A4*2,A1*1x3",
    44: "E6*1,A5*2,D5*1",
    47: "D8*1,A1*1x8",
    48: "D6*1x2,A1*1x4",
    50: "D9*1,A7*2",
    52: "D8*1,D4*1x2",
    53: "E7*1,A1*1x5,D4*1",
    56: "D10*1,A1*1x6",
    62: "A1*1x8,E8*1",
    6: "A2*1x6",
    17: "A5*1,D4*1,A1*3x3",
    27: "A8*1,A2*3x2",
    32: "E6*1,A2*1x3",
    34: "D7*1,A3*3,A2*1",
    45: "E7*1,A5*3",
    9: "A4*1x2",
    20: "D6*1,A1*5x2",
    11: "A6*1",
}

U_MODE = set(SUMS_U)

# Entries whose glue code is searched rather than derived by hand.
SEARCH = {16, 25, 26, 31, 33, 38, 39, 40, 44, 47, 48, 50, 53, 56,
          6, 17, 27, 34, 45, 20}

NO_GLUE = {52, 57, 9, 11, 32, 14}


# ---------------------------------------------------------------------------
# symbolic glue classes and coordinate conversion
# ---------------------------------------------------------------------------

def solve_left_int(rows, b):
    """Integer row z with z * rows = b, or None."""
    h, u = em.hnf(rows)
    z = [0] * len(h)
    rem = list(b)
    for i, row in enumerate(h):
        piv = next((j for j, x in enumerate(row) if x != 0), None)
        if piv is None:
            break
        if rem[piv] % row[piv] != 0:
            return None
        q = rem[piv] // row[piv]
        if q:
            rem = [x - q * y for x, y in zip(rem, row)]
            z[i] = q
    if any(rem):
        return None
    return [sum(z[i] * u[i][k] for i in range(len(z))) for k in range(len(u[0]))]


def class_coords(slot, row):
    """Coordinates of a discriminant class over the slot's generators."""
    divs, reps = cat.disc_reps(slot.gram)
    if not divs:
        if all(Fraction(x).denominator == 1 for x in row):
            return ()
        raise ValueError("nontrivial class in a unimodular slot")
    d = em.denominator_lcm([list(map(Fraction, r)) for r in reps]
                           + [list(map(Fraction, row))])
    m = [[int(Fraction(x) * d) for x in r] for r in reps]
    m += [[d if i == j else 0 for j in range(slot.rank)] for i in range(slot.rank)]
    b = [int(Fraction(x) * d) for x in row]
    z = solve_left_int(m, b)
    if z is None:
        raise ValueError("class row is not in the discriminant group")
    x = tuple(z[i] % divs[i] for i in range(len(divs)))
    # paranoia: the coordinates must reproduce the class
    back = [sum(x[i] * reps[i][j] for i in range(len(divs)))
            for j in range(slot.rank)]
    diff = [Fraction(a) - Fraction(c) for a, c in zip(back, row)]
    if not all(f.denominator == 1 for f in diff):
        raise ArithmeticError("coordinate conversion failed")
    return x


def e_over_basis(n, erow, pattern):
    """Coordinates of an orthonormal-frame vector over a D_n style basis."""
    inv = em.mat_inv(em.mat_frac(pattern))
    return [sum(Fraction(erow[i]) * inv[i][j] for i in range(n))
            for j in range(n)]


def dn_v_row(n):
    """Class of e_1 in the discriminant group of D_n."""
    pat = cat.d_pattern(n)
    e0 = [1] + [0] * (n - 1)
    return e_over_basis(n, e0, pat)


def dn_spinor_rows(n):
    """The two half-sum classes of D_n (n even), as basis coordinate rows."""
    pat = cat.d_pattern(n)
    s = [Fraction(1, 2)] * n
    c = [Fraction(1, 2)] * (n - 1) + [Fraction(-1, 2)]
    return e_over_basis(n, s, pat), e_over_basis(n, c, pat)


def an_gen_row(n):
    """A generator class of the cyclic discriminant group of A_n."""
    divs, reps = cat.disc_reps(lat.standard_lattice("A", n).gram)
    assert divs == [n + 1]
    return reps[0]


def gen_from_slots(sums, slot_lats, pieces):
    """One glue generator given {slot index: class row} pieces."""
    out = []
    for i, s in enumerate(sums):
        if i in pieces:
            out.append(class_coords(slot_lats[i], pieces[i]))
        else:
            divs, _ = cat.disc_reps(slot_lats[i].gram)
            out.append(())
    return tuple(out)


def seeded_gens(no, sums, slot_lats):
    """Hand-derived glue codes, as per-slot discriminant coordinates."""
    if no == 5:
        # length 16 first order Reed-Muller code on the A1 slots
        rows = []
        masks = [list(range(16))]
        for bit in range(4):
            masks.append([t for t in range(16) if (t >> bit) & 1])
        for mset in masks:
            rows.append(tuple((1,) if i in mset else () for i in range(16)))
        return rows
    if no == 62:
        return [tuple([(1,)] * 8 + [()])]
    if no == 2:
        gens = []
        for i in range(11):
            g = [()] * 12
            g[i] = (4,)
            g[i + 1] = (4,)
            gens.append(tuple(g))
        return gens
    if no == 12:
        v = (2, 2)
        gens = []
        for i in range(5):
            g = [()] * 6
            g[i] = v
            g[i + 1] = v
            gens.append(tuple(g))
        return gens
    if no == 23:
        v = dn_v_row(3)
        gens = []
        for i in range(3):
            gens.append(gen_from_slots(sums, slot_lats, {i: v, i + 1: v}))
        return gens
    if no == 29:
        v = dn_v_row(4)
        return [gen_from_slots(sums, slot_lats, {0: v, 1: v}),
                gen_from_slots(sums, slot_lats, {1: v, 2: v})]
    if no == 41:
        v = dn_v_row(6)
        return [gen_from_slots(sums, slot_lats, {0: v, 1: v})]
    if no == 13:
        s, c = dn_spinor_rows(4)
        a = an_gen_row(2)
        a2 = [2 * x for x in a]
        return [gen_from_slots(sums, slot_lats, {0: s}),
                gen_from_slots(sums, slot_lats, {0: c}),
                gen_from_slots(sums, slot_lats, {1: a, 2: a, 3: a}),
                gen_from_slots(sums, slot_lats, {2: a, 3: a2, 4: a})]
    if no == 22:
        half = [Fraction(1, 2)]
        a = an_gen_row(4)
        a2 = [2 * x for x in a]
        return [gen_from_slots(sums, slot_lats,
                               {0: half, 1: half, 2: half, 3: half,
                                4: a, 5: a2})]
    if no == 36:
        a = an_gen_row(8)
        a3 = [3 * x for x in a]
        return [gen_from_slots(sums, slot_lats, {0: a3})]
    if no == 7:
        a = an_gen_row(3)
        half = [Fraction(1, 2)]
        return [gen_from_slots(sums, slot_lats, {0: a, 3: half}),
                gen_from_slots(sums, slot_lats, {1: a, 3: half}),
                gen_from_slots(sums, slot_lats, {2: a, 3: half})]
    if no == 18:
        a = an_gen_row(7)
        half = [Fraction(1, 2)]
        return [gen_from_slots(sums, slot_lats, {0: a, 1: half})]
    if no == 19:
        s = cat.disc_reps(lat.standard_lattice("D", 5).gram)[1][0]
        half = [Fraction(1, 2)]
        return [gen_from_slots(sums, slot_lats, {0: s, 1: half, 2: half, 3: half}),
                gen_from_slots(sums, slot_lats, {1: half, 2: half, 3: half,
                                                 4: half, 5: half})]
    if no == 28:
        e = cat.disc_reps(lat.standard_lattice("E", 6).gram)[1][0]
        a = an_gen_row(2)
        return [gen_from_slots(sums, slot_lats, {0: e, 1: a})]
    if no == 35:
        a = an_gen_row(3)
        a2 = [2 * x for x in a]
        half = [Fraction(1, 2)]
        return [gen_from_slots(sums, slot_lats,
                               {i: half for i in range(7)} | {7: a2})]
    if no == 8:
        a = an_gen_row(5)
        half = [Fraction(1, 2)]
        v = [Fraction(1, 2), Fraction(1, 2)]
        return [gen_from_slots(sums, slot_lats, {0: a, 2: half}),
                gen_from_slots(sums, slot_lats, {1: v, 2: half})]
    if no == 21:
        a = an_gen_row(2)
        half = [Fraction(1, 2)]
        return [gen_from_slots(sums, slot_lats,
                               {i: half for i in range(5)} | {6: half})]
    if no == 3:
        s, c = dn_spinor_rows(4)
        a = an_gen_row(2)
        return [gen_from_slots(sums, slot_lats, {0: s}),
                gen_from_slots(sums, slot_lats, {0: c}),
                gen_from_slots(sums, slot_lats, {1: a})]
    if no == 10:
        s = cat.disc_reps(lat.standard_lattice("D", 5).gram)[1][0]
        return [gen_from_slots(sums, slot_lats, {0: s})]
    if no == 4:
        half = [Fraction(1, 2)]
        return [gen_from_slots(sums, slot_lats, {i: half for i in range(4)})]
    raise KeyError(no)


# ---------------------------------------------------------------------------
# isotropic subgroup search
# ---------------------------------------------------------------------------

def frac1(x):
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def slot_data(slot):
    """Per-class (q mod 1, capped coset minimum) for one summand.

    The coset minimum is exact below 4 and capped at 4 otherwise; the only
    consumers are the no-roots test (sum of minima equal to 2) and glue
    isotropy, and both are unaffected by the cap.
    """
    divs, reps = cat.disc_reps(slot.gram)
    table = {}
    keymap = {}
    for coords in product(*[range(d) for d in divs]):
        row = [sum(coords[i] * Fraction(reps[i][j]) for i in range(len(divs)))
               for j in range(slot.rank)]
        nrm = sum(row[i] * slot.gram[i][j] * row[j]
                  for i in range(slot.rank) for j in range(slot.rank))
        table[coords] = [frac1(Fraction(nrm) / 2), Fraction(4)]
        keymap[tuple(frac1(x) for x in row)] = coords
    table[tuple(0 for _ in divs)][1] = Fraction(0)
    ginv = em.mat_inv(slot.gram)
    for nrm, vec in sv.short_vectors(lat.dual(slot), 4):
        row = [sum(Fraction(vec[i]) * ginv[i][j] for i in range(len(vec)))
               for j in range(slot.rank)]
        coords = keymap[tuple(frac1(x) for x in row)]
        if Fraction(nrm) < table[coords][1]:
            table[coords][1] = Fraction(nrm)
    return divs, {k: (v[0], v[1]) for k, v in table.items()}


def element_order(coords_list, divs_list):
    o = 1
    for coords, divs in zip(coords_list, divs_list):
        for c, d in zip(coords, divs):
            if c:
                o = o * (d // gcd(c, d)) // gcd(o, d // gcd(c, d))
    return o


def add_elems(a, b, divs_list):
    return tuple(tuple((x + y) % d for x, y, d in zip(ca, cb, divs))
                 for ca, cb, divs in zip(a, b, divs_list))


def group_invariants(elems, divs_list):
    """Invariant factors (>1) of the subgroup given by its element set.

    Lift the elements to Z^width together with the relation lattice d Z^width
    and read the quotient structure off the transition matrix.
    """
    diag = [x for divs in divs_list for x in divs]
    width = len(diag)
    if width == 0 or len(elems) <= 1:
        return ()
    rows = []
    for e in elems:
        flat = []
        for coords in e:
            flat.extend(coords)
        rows.append(flat)
    rels = []
    for i, d in enumerate(diag):
        r = [0] * width
        r[i] = d
        rels.append(r)
    h, _ = em.hnf(rows + rels)
    basis = [r for r in h if any(x for x in r)]
    if len(basis) != width:
        raise ArithmeticError("degenerate subgroup lift")
    sol = em.mat_int(em.solve_left(basis, rels))
    inv = tuple(x for x in em.lattice_quotient_divisors(sol) if x > 1)
    size = 1
    for x in inv:
        size *= x
    if size != len(elems):
        raise ArithmeticError("invariant factors do not match the order")
    return inv


def inv_embeds(sub, target):
    """Whether an abelian group with invariants sub embeds into target."""
    primes = set()
    for x in sub + target:
        n, p = x, 2
        while n > 1:
            while n % p == 0:
                primes.add(p)
                n //= p
            p += 1
    for p in primes:
        se = sorted((val_p(x, p) for x in sub), reverse=True)
        te = sorted((val_p(x, p) for x in target), reverse=True)
        se = [e for e in se if e]
        te = [e for e in te if e]
        if len(se) > len(te):
            return False
        if any(a > b for a, b in zip(se, te)):
            return False
    return True


def val_p(n, p):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def search_glue(no, proto, slot_lats, order, verify):
    divs_list = []
    qtabs = []
    for sl in slot_lats:
        divs, table = slot_data(sl)
        divs_list.append(divs)
        qtabs.append(table)
    zero = tuple(tuple(0 for _ in d) for d in divs_list)

    # slots holding identical summands may be permuted, and each slot
    # supports the negation automorphism; the first generator can be
    # normalized under that action
    groups = {}
    for i, s in enumerate(proto.sums):
        groups.setdefault(s, []).append(i)
    groups = list(groups.values())

    def canonical(e):
        parts = list(e)
        for g in groups:
            vals = []
            for i in g:
                c = parts[i]
                n = tuple((d - x) % d for x, d in zip(c, divs_list[i]))
                vals.append(min(c, n))
            vals.sort()
            for i, v in zip(g, vals):
                parts[i] = v
        return tuple(parts)

    def describe(e):
        q = Fraction(0)
        cmin = Fraction(0)
        for coords, tab in zip(e, qtabs):
            eq, ec = tab[coords]
            q += eq
            cmin += ec
        return frac1(q), cmin

    pool = []
    for combo in product(*[list(tab.keys()) for tab in qtabs]):
        if combo == zero:
            continue
        if order % element_order(combo, divs_list) != 0:
            continue
        q, cmin = describe(combo)
        if q != 0 or cmin == 2:
            continue
        pool.append(combo)
    # low-order elements first: the torsion layers of the glue group are
    # then assembled before any higher-order extension is attempted
    pool.sort(key=lambda e: (element_order(e, divs_list), e))
    pool_set = set(pool)
    sys.stderr.write("  entry %d: pool %d of %s\n"
                     % (no, len(pool), [len(t) for t in qtabs]))

    def close(span, e):
        new = dict(span)
        queue = [e]
        while queue:
            x = queue.pop()
            if x in new:
                continue
            if x != zero and x not in pool_set:
                return None
            new[x] = True
            for y in list(new):
                s = add_elems(x, y, divs_list)
                if s not in new:
                    queue.append(s)
            if len(new) > order:
                return None
        return new

    found = []

    def dfs(span, start):
        if found:
            return
        if len(span) == order:
            if proto.mode == "U" and group_invariants(list(span),
                                                      divs_list) != proto.kv:
                return
            cand = replace(proto, gens=tuple(minimal_gens(span, divs_list)))
            if verify(cand):
                found.append(cand)
            return
        for i in range(start, len(pool)):
            e = pool[i]
            if e in span:
                continue
            new = close(span, e)
            if new is None or order % len(new) != 0:
                continue
            if proto.mode == "U" and not inv_embeds(
                    group_invariants(list(new), divs_list), proto.kv):
                continue
            dfs(new, i + 1)
            if found:
                return

    for e in pool:
        if canonical(e) != e:
            continue
        new = close({zero: True}, e)
        if new is None or order % len(new) != 0:
            continue
        if proto.mode == "U" and not inv_embeds(
                group_invariants(list(new), divs_list), proto.kv):
            continue
        dfs(new, 0)
        if found:
            break
    if not found:
        raise RuntimeError("entry %d: no glue code found" % no)
    return found[0]


def minimal_gens(span, divs_list):
    """A short deterministic generator chain for the subgroup."""
    zero = tuple(tuple(0 for _ in d) for d in divs_list)
    have = {zero}
    gens = []
    for e in sorted(span):
        if e in have:
            continue
        gens.append(e)
        queue = [e]
        while queue:
            x = queue.pop()
            if x in have:
                continue
            have.add(x)
            for y in list(have):
                s = add_elems(x, y, divs_list)
                if s not in have:
                    queue.append(s)
        if len(have) == len(span):
            break
    return gens


# ---------------------------------------------------------------------------
# verification of a candidate entry
# ---------------------------------------------------------------------------

def expected_det_u(cls):
    dl = 1
    for d in cat.CLASS_DISC[cls]:
        dl *= d
    return cat.CLASS_LEVEL[cls] ** cat.class_rank(cls) // dl


def full_verify(entry, quiet=False):
    try:
        b = cat.build(entry)
    except ArithmeticError:
        if not quiet:
            sys.stderr.write("  entry %d: candidate rejected\n" % entry.no)
        return None
    cls = entry.cls
    ell = cat.CLASS_LEVEL[cls]
    det_l = 1
    for d in cat.CLASS_DISC[cls]:
        det_l *= d
    ok = True
    if em.det(em.mat_int(b.L.gram)) != det_l:
        ok = False
    elif tuple(lat.disc_divisors(b.L)) != cat.CLASS_DISC[cls]:
        ok = False
    elif lat.level(b.L) != ell:
        ok = False
    elif b.kv != KV_ARITH.get(entry.no, entry.kv):
        ok = False
    elif entry.ru != "-" and rs.root_string(rs.root_system(b.U)) != entry.ru:
        ok = False
    if not ok and not quiet:
        sys.stderr.write("  entry %d: candidate rejected\n" % entry.no)
    return b if ok else None


def law_check(entry):
    """Quotient law linking |O(L)|, the Weyl order and |Out|."""
    cls = entry.cls
    if cls in ("2A", "6E"):
        style = 1
    elif cls in ("3B", "4C", "7B", "8E"):
        style = 2
    else:
        return None
    w = 1
    minus = True
    for c in entry.lie:
        w *= rs.weyl_order(c.family, c.rank) ** c.mult
        if not cat.weyl_minus_one(c.family, c.rank):
            minus = False
    if style == 1:
        denom = w
    else:
        denom = w if minus else 2 * w
    if entry.ol_order % denom or entry.ol_order // denom != entry.out_order:
        return ("law mismatch: ol=%d denom=%d out=%d"
                % (entry.ol_order, denom, entry.out_order))
    return None


# ---------------------------------------------------------------------------
# main
# ---------------------------------------------------------------------------

def make_proto(no):
    cls = CLASS_OF[no]
    lie = LIE[no]
    if no in U_MODE:
        mode = "U"
        sums = SUMS_U[no]
    else:
        mode = "L"
        lie_parsed = cat.parse_lie(lie)
        toks = []
        for c in lie_parsed:
            for _ in range(c.mult):
                for fam, rank in cat.long_summands(c.family, c.rank):
                    toks.append("%s%d*%d" % (fam, rank, c.level))
        sums = ",".join(toks)
    return cat.Entry(
        no=no, cls=cls, lie=cat.parse_lie(lie), mode=mode,
        sums=cat.parse_sums(sums), gens=(),
        kv=KV[no], out_order=OUT_ORDER[no], ol_order=OL[no],
        ru=RU.get(no, "-"))


def fmt_gens(gens):
    if not gens:
        return "-"
    toks = []
    for g in gens:
        slots = []
        for coords in g:
            if not coords or not any(coords):
                slots.append("-")
            else:
                slots.append(".".join(str(c) for c in coords))
        toks.append(",".join(slots))
    return ";".join(toks)


def fmt_sums(sums):
    toks = []
    i = 0
    while i < len(sums):
        j = i
        while j < len(sums) and sums[j] == sums[i]:
            j += 1
        t = "%s%d*%d" % (sums[i].family, sums[i].rank, sums[i].scale)
        toks.append(t if j - i == 1 else "%sx%d" % (t, j - i))
        i = j
    return ",".join(toks)


def entry_line(e):
    return "|".join([
        str(e.no), e.cls, e.lie_string(), e.mode, fmt_sums(e.sums),
        fmt_gens(e.gens),
        ".".join(str(x) for x in e.kv) if e.kv else "-",
        str(e.out_order), str(e.ol_order), e.ru])


def main(only=None):
    done = {}
    t0 = time.time()
    for no in sorted(CLASS_OF):
        if only and no not in only:
            continue
        proto = make_proto(no)
        slot_lats = [cat.summand_model(s) for s in proto.sums]
        if no in NO_GLUE:
            entry = proto
        elif no in SEARCH:
            detu = expected_det_u(proto.cls)
            dets = em.det(em.mat_int(lat.direct_sum(*slot_lats).gram))
            assert dets % detu == 0
            order = math.isqrt(dets // detu)
            assert order * order * detu == dets
            sys.stderr.write("entry %d (%s): searching order %d\n"
                             % (no, proto.cls, order))
            entry = search_glue(no, proto, slot_lats, order,
                                lambda c: full_verify(c, quiet=True) is not None)
        else:
            gens = seeded_gens(no, proto.sums, slot_lats)
            entry = replace(proto, gens=tuple(gens))
        built = full_verify(entry)
        if built is None:
            raise RuntimeError("entry %d failed verification" % no)
        warn = law_check(entry)
        note = "" if warn is None else "  ** " + warn
        sys.stderr.write("entry %d (%s) ok: det(L)=%d kv=%s%s\n"
                         % (no, entry.cls, em.det(em.mat_int(built.L.gram)),
                            entry.kv, note))
        done[no] = entry

    # isometry classes of the twelve-dimensional level 4 family
    ref_a = lat.rescale(lat.standard_lattice("D", 12), 2)
    ref_b = lat.direct_sum(lat.rescale(lat.standard_lattice("E", 8), 2),
                           lat.rescale(lat.standard_lattice("D", 4), 2))
    for no in (2, 12, 23, 29, 41, 57):
        if no not in done:
            continue
        b = cat.build(done[no])
        assert isometry(b.L, ref_a) is not None, no
        sys.stderr.write("entry %d: matches the D12 style class\n" % no)
    for no in (13, 22, 36):
        if no not in done:
            continue
        b = cat.build(done[no])
        assert isometry(b.L, ref_b) is not None, no
        sys.stderr.write("entry %d: matches the E8+D4 style class\n" % no)

    if only:
        sys.stderr.write("partial run, not writing the data file\n")
        return

    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    lines = ["# no|class|lie|mode|summands|glue|kv|out|ol|ru"]
    for no in sorted(done):
        lines.append(entry_line(done[no]))
    OUT_PATH.write_text("\n".join(lines) + "\n")
    sys.stderr.write("wrote %s (%d entries, %.1fs)\n"
                     % (OUT_PATH, len(done), time.time() - t0))

    # reload and rebuild everything once more through the public loader
    loaded = cat.load_entries(OUT_PATH)
    assert sorted(loaded) == sorted(done)
    for no, e in loaded.items():
        assert full_verify(e, quiet=True) is not None, no
    sys.stderr.write("reload check passed\n")


if __name__ == "__main__":
    main({int(a) for a in sys.argv[1:]} or None)
