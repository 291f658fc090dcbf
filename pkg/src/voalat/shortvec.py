"""Short vector enumeration with exact rational arithmetic.

LLL works on the Gram matrix alone and returns the unimodular transform;
Fincke-Pohst enumerates norms through an exact Cholesky decomposition, so
results are provably complete (no floating point anywhere).
"""

from fractions import Fraction

from . import exactmat as em


class BoundTooLarge(Exception):
    """Raised when an enumeration would exceed the vector-count cap."""


def _gso(gram):
    """Gram-Schmidt data from a Gram matrix: (B, mu), both exact."""
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = Fraction(gram[i][j])
            for k in range(j):
                s -= mu[j][k] * mu[i][k] * b[k]
            mu[i][j] = s / b[j]
        s = Fraction(gram[i][i])
        for k in range(i):
            s -= mu[i][k] * mu[i][k] * b[k]
        b[i] = s
        if b[i] <= 0:
            raise ValueError("gram matrix is not positive definite")
    return b, mu


def _round_nearest(x):
    # floor(x + 1/2): nearest integer, exact halves rounded up; deterministic
    x = Fraction(x)
    return (2 * x.numerator + x.denominator) // (2 * x.denominator)


def lll_reduce(gram, delta=Fraction(3, 4)):
    """LLL-reduce a positive definite rational Gram matrix.

    Returns (g2, u) with g2 = u * gram * u^T, u unimodular with int entries.
    """
    n = len(gram)
    g = em.mat_frac(gram)
    u = em.identity(n)

    def row_op(i, r, j):
        # row_i -= r * row_j on the quadratic form and the transform
        for t in range(n):
            u[i][t] -= r * u[j][t]
        for t in range(n):
            g[i][t] -= r * g[j][t]
        for t in range(n):
            g[t][i] -= r * g[t][j]

    def swap(i, j):
        u[i], u[j] = u[j], u[i]
        g[i], g[j] = g[j], g[i]
        for t in range(n):
            g[t][i], g[t][j] = g[t][j], g[t][i]

    b, mu = _gso(g)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            if 2 * abs(mu[k][j]) > 1:
                r = _round_nearest(mu[k][j])
                row_op(k, r, j)
                b, mu = _gso(g)
        if b[k] >= (delta - mu[k][k - 1] ** 2) * b[k - 1]:
            k += 1
        else:
            swap(k, k - 1)
            b, mu = _gso(g)
            k = max(k - 1, 1)
    out = []
    for row in g:
        out.append([int(x) if x.denominator == 1 else x for x in row])
    return out, u


def _enumerate(gram, bound, cap):
    """All nonzero x with x gram x^T <= bound, one per +-pair, reduced coords."""
    n = len(gram)
    b, mu = _gso(gram)
    bound = Fraction(bound)
    found = []
    x = [0] * n

    def recurse(i, rem):
        # rem = remaining norm budget for coordinates 0..i
        if i < 0:
            if any(x):
                found.append(tuple(x))
                if len(found) > cap:
                    raise BoundTooLarge("more than %d vector pairs" % cap)
            return
        c = sum(mu[j][i] * x[j] for j in range(i + 1, n))
        # (x_i + c)^2 <= rem / b_i; walk outward from the center
        limit = rem / b[i]
        x0 = _round_nearest(-c)
        t = x0
        while (t + c) ** 2 <= limit:
            x[i] = t
            recurse(i - 1, rem - b[i] * (t + c) ** 2)
            t += 1
        t = x0 - 1
        while (t + c) ** 2 <= limit:
            x[i] = t
            recurse(i - 1, rem - b[i] * (t + c) ** 2)
            t -= 1
        x[i] = 0

    recurse(n - 1, bound)
    # canonical representative per +-pair: first nonzero entry positive
    seen = set()
    out = []
    for v in found:
        w = v
        for e in v:
            if e:
                if e < 0:
                    w = tuple(-y for y in v)
                break
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


def short_vectors(l, bound, cap=10 ** 6):
    """Vectors of l with 0 < norm <= bound, one per +-pair.

    Returns [(norm, coords)] sorted by (norm, coords); coords are in l's own
    basis.  Raises BoundTooLarge past cap pairs, checked during enumeration.
    """
    g2, u = lll_reduce(l.gram)
    reduced = _enumerate(g2, bound, cap)
    out = []
    for x in reduced:
        v = tuple(sum(x[i] * u[i][t] for i in range(len(x))) for t in range(len(x)))
        for e in v:
            if e:
                if e < 0:
                    v = tuple(-y for y in v)
                break
        nrm = l.norm(v)
        if isinstance(nrm, Fraction) and nrm.denominator == 1:
            nrm = int(nrm)
        out.append((nrm, v))
    out.sort(key=lambda t: (t[0], t[1]))
    return out


def vectors_of_norm(l, m, cap=10 ** 6):
    return [v for nrm, v in short_vectors(l, m, cap) if nrm == m]


def min_norm(l, cap=10 ** 6):
    g2, _ = lll_reduce(l.gram)
    start = min(g2[i][i] for i in range(l.rank))
    vs = short_vectors(l, start, cap)
    return vs[0][0]
