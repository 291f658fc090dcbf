"""Lattices as rational Gram matrices, with sublattice embeddings.

A Lattice is its Gram matrix: the basis is implicit, coordinates are row
vectors.  Scale factors live inside the Gram, so sqrt(2)*D12 is represented
by 2*G(D12) and nothing here ever touches an irrational number.
"""

from fractions import Fraction

from . import exactmat as em


class Lattice:

    __slots__ = ("gram",)

    def __init__(self, gram):
        n = len(gram)
        for row in gram:
            if len(row) != n:
                raise ValueError("gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        self.gram = [list(row) for row in gram]

    @property
    def rank(self):
        return len(self.gram)

    def inner(self, x, y):
        g = self.gram
        return sum(x[i] * g[i][j] * y[j]
                   for i in range(len(x)) for j in range(len(y)) if g[i][j])

    def norm(self, x):
        return self.inner(x, x)

    def __eq__(self, other):
        return isinstance(other, Lattice) and em.mat_eq(self.gram, other.gram)

    def __hash__(self):
        return hash(to_text(self))

    def __repr__(self):
        return "Lattice(rank=%d, det=%s)" % (self.rank, det(self))


class Embedding:
    """A finite or full-rank sublattice: rows express sub's basis over sup's."""

    __slots__ = ("sub", "sup", "rows")

    def __init__(self, sub, sup, rows):
        self.sub = sub
        self.sup = sup
        self.rows = [list(r) for r in rows]
        got = em.mat_mul(em.mat_mul(self.rows, sup.gram), em.transpose(self.rows))
        if not em.mat_eq(got, sub.gram):
            raise ValueError("rows do not realize the stated gram matrix")

    def __repr__(self):
        return "Embedding(%d -> %d)" % (self.sub.rank, self.sup.rank)


def det(l):
    return em.det(l.gram)


def is_integral_lattice(l):
    return em.is_integral(l.gram)


def is_even(l):
    if not is_integral_lattice(l):
        return False
    return all(l.gram[i][i] % 2 == 0 for i in range(l.rank))


def standard_lattice(family, rank):
    """Gram matrix of A_n, D_n, E_6/7/8 (root basis) or Z_n."""
    if family == "Z":
        return Lattice(em.identity(rank))
    if family == "A":
        if rank < 1:
            raise ValueError("A_n needs n >= 1")
        g = [[2 if i == j else (-1 if abs(i - j) == 1 else 0)
              for j in range(rank)] for i in range(rank)]
        return Lattice(g)
    if family == "D":
        if rank < 2:
            raise ValueError("D_n needs n >= 2")
        # e1-e2, ..., e_{n-1}-e_n, e_{n-1}+e_n
        g = em.zeros(rank, rank)
        for i in range(rank):
            g[i][i] = 2
        for i in range(rank - 2):
            g[i][i + 1] = g[i + 1][i] = -1
        if rank >= 3:
            g[rank - 3][rank - 1] = g[rank - 1][rank - 3] = -1
        return Lattice(g)
    if family == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E_n needs n in 6,7,8")
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if rank >= 7:
            edges.append((6, 7))
        if rank == 8:
            edges.append((7, 8))
        g = em.zeros(rank, rank)
        for i in range(rank):
            g[i][i] = 2
        for a, b in edges:
            g[a - 1][b - 1] = g[b - 1][a - 1] = -1
        return Lattice(g)
    raise ValueError("unknown family %r" % (family,))


def rescale(l, c):
    c = Fraction(c)
    if c <= 0:
        raise ValueError("scale must be positive")
    g = em.scalar_mul(c, l.gram)
    out = []
    for row in g:
        out.append([int(x) if isinstance(x, Fraction) and x.denominator == 1 else x
                    for x in row])
    return Lattice(out)


def dual(l):
    """Dual lattice in its own (dual) basis."""
    return Lattice(em.mat_inv(l.gram))


def dual_embedding(l):
    """l sitting inside dual(l); coordinates of basis vectors are gram rows."""
    return Embedding(l, dual(l), em.mat_int(l.gram) if em.is_integral(l.gram) else l.gram)


def direct_sum(*ls):
    n = sum(l.rank for l in ls)
    g = em.zeros(n, n)
    off = 0
    for l in ls:
        r = l.rank
        for i in range(r):
            for j in range(r):
                g[off + i][off + j] = l.gram[i][j]
        off += r
    return Lattice(g)


def block_embedding(embs):
    """Direct sum of embeddings, block diagonal rows."""
    sub = direct_sum(*[e.sub for e in embs])
    sup = direct_sum(*[e.sup for e in embs])
    rows = em.zeros(sub.rank, sup.rank)
    ro = co = 0
    for e in embs:
        for i, r in enumerate(e.rows):
            for j, x in enumerate(r):
                rows[ro + i][co + j] = x
        ro += e.sub.rank
        co += e.sup.rank
    return Embedding(sub, sup, rows)


def glue_extend(l, glue_rows):
    """Overlattice generated by l and the given rational coordinate rows.

    Returns (big, emb) where emb places l inside big.  The result must be
    an integral lattice; raises ValueError if the glue vectors do not pair
    integrally with each other or with l.
    """
    n = l.rank
    stack = [[Fraction(x) for x in row] for row in glue_rows]
    stack.extend(em.mat_frac(em.identity(n)))
    d = em.denominator_lcm(stack)
    mint = [[int(x * d) for x in row] for row in stack]
    h, _ = em.hnf(mint)
    rows = [r for r in h if any(x != 0 for x in r)]
    if len(rows) != n:
        raise ValueError("glue vectors leave the rational span of the lattice")
    basis = [[Fraction(x, d) for x in row] for row in rows]
    gram = em.mat_mul(em.mat_mul(basis, l.gram), em.transpose(basis))
    if not em.is_integral(gram):
        raise ValueError("glue classes do not pair integrally")
    gram = em.mat_int(gram)
    big = Lattice(gram)
    emb_rows = em.solve_left(basis, em.mat_frac(em.identity(n)))
    if not em.is_integral(emb_rows):
        raise ValueError("internal: old basis not integral over new")
    return big, Embedding(l, big, em.mat_int(emb_rows))


def level(l):
    """Smallest ell >= 1 such that ell * gram(dual(l)) is even integral."""
    if not is_even(l):
        raise ValueError("level is defined here for even lattices")
    ginv = em.mat_inv(l.gram)
    l0 = em.denominator_lcm(ginv)
    diag_even = all((x * l0).numerator % 2 == 0 for x in
                    (ginv[i][i] for i in range(l.rank)))
    return l0 if diag_even else 2 * l0


def disc_divisors(l):
    """Invariant factors (>1) of dual(l)/l for an integral lattice."""
    if not em.is_integral(l.gram):
        raise ValueError("discriminant group needs an integral lattice")
    return [x for x in em.snf_diagonal(em.mat_int(l.gram)) if x > 1]


def quotient_invariants(emb):
    """Invariant factors (>1, plus 0s for free rank) of sup/sub."""
    if not em.is_integral(emb.rows):
        raise ValueError("embedding rows must be integral for a quotient")
    return em.lattice_quotient_divisors(em.mat_int(emb.rows))


def sublattice(sup, rows):
    gram = em.mat_mul(em.mat_mul(rows, sup.gram), em.transpose(rows))
    out = []
    for row in gram:
        out.append([int(x) if isinstance(x, Fraction) and x.denominator == 1 else x
                    for x in row])
    sub = Lattice(out)
    return sub, Embedding(sub, sup, rows)


def _fmt(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def to_text(l):
    lines = ["lattice 1", "rank %d" % l.rank]
    for row in l.gram:
        lines.append(" ".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def from_text(s):
    lines = [ln for ln in s.strip().splitlines()]
    if not lines or lines[0].strip() != "lattice 1":
        raise ValueError("bad lattice header")
    n = int(lines[1].split()[1])
    gram = []
    for ln in lines[2:2 + n]:
        row = []
        for tok in ln.split():
            if "/" in tok:
                a, b = tok.split("/")
                row.append(Fraction(int(a), int(b)))
            else:
                row.append(int(tok))
        gram.append(row)
    return Lattice(gram)
