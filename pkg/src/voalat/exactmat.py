"""Exact integer and rational matrix algebra.

Matrices are lists of lists with int or Fraction entries.  Everything here
is deterministic: pivot choices break ties by position, never by hash order.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def copy_mat(a):
    return [row[:] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    if k == 0:
        return [[] for _ in range(n)]
    p = len(b[0])
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scalar_mul(c, a):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
               for ra, rb in zip(a, b))


def is_integral(a):
    for row in a:
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                return False
    return True


def mat_int(a):
    """Cast to plain ints, raising on a genuine fraction."""
    out = []
    for row in a:
        r = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("matrix entry %s is not an integer" % (x,))
                r.append(int(x))
            else:
                r.append(int(x))
        out.append(r)
    return out


def mat_frac(a):
    return [[Fraction(x) for x in row] for row in a]


def denominator_lcm(a):
    d = 1
    for row in a:
        for x in row:
            if isinstance(x, Fraction):
                q = x.denominator
                g = _gcd(d, q)
                d = d // g * q
    return d


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def det(a):
    """Exact determinant via fraction-free style elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = mat_frac(a)
    sign = 1
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    if out.denominator == 1:
        return int(out)
    return out


def mat_inv(a):
    """Rational inverse; raises ValueError on a singular matrix."""
    n = len(a)
    m = mat_frac(a)
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        f = m[c][c]
        m[c] = [x / f for x in m[c]]
        inv[c] = [x / f for x in inv[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[c])]
    return [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in inv]


def solve_left(a, b):
    """Solve x a = b for x, with a square invertible; rows of b solved at once."""
    return mat_mul(b, mat_inv(a))


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def snf(a):
    """Smith normal form of an integer matrix.

    Returns (d, u, v) with u*a*v = d, u and v unimodular, d diagonal with
    nonnegative entries and d[i] | d[i+1].
    """
    a = mat_int(a)
    m, n = len(a), (len(a[0]) if a else 0)
    d = copy_mat(a)
    u = identity(m)
    v = identity(n)
    t = 0
    while t < m and t < n:
        # pick smallest-|x| nonzero entry in the trailing block, tie by position
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            _swap_rows(d, t, i0)
            _swap_rows(u, t, i0)
        if j0 != t:
            _swap_cols(d, t, j0)
            _swap_cols(v, t, j0)
        dirty = False
        for i in range(t + 1, m):
            if d[i][t] != 0:
                q = d[i][t] // d[t][t]
                if q:
                    d[i] = [x - q * y for x, y in zip(d[i], d[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if d[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if d[t][j] != 0:
                q = d[t][j] // d[t][t]
                if q:
                    for i in range(m):
                        d[i][j] -= q * d[i][t]
                    for i in range(n):
                        v[i][j] -= q * v[i][t]
                if d[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility: d[t][t] must divide the rest of the block
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            d[t] = [x + y for x, y in zip(d[t], d[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def snf_diagonal(a):
    d, _, _ = snf(a)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        out.append(d[i][i])
    return out


def hnf(a):
    """Row Hermite normal form of an integer matrix.

    Returns (h, u) with u*a = h, u unimodular, pivots positive, and entries
    above each pivot reduced into [0, pivot).  Zero rows sink to the bottom.
    """
    a = mat_int(a)
    m, n = len(a), (len(a[0]) if a else 0)
    h = copy_mat(a)
    u = identity(m)
    r = 0
    for c in range(n):
        if r >= m:
            break
        while True:
            piv = None
            best = None
            for i in range(r, m):
                x = h[i][c]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = i
            if piv is None:
                break
            if piv != r:
                _swap_rows(h, r, piv)
                _swap_rows(u, r, piv)
            done = True
            for i in range(r + 1, m):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    if q:
                        h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                        u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if best is None:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def kernel_int(a):
    """Basis of the left integer kernel {x : x a = 0}, saturated in Z^m."""
    h, u = hnf(a)
    out = []
    for i, row in enumerate(h):
        if all(x == 0 for x in row):
            out.append(u[i][:])
    return out


def lattice_quotient_divisors(t):
    """Elementary divisors (>1) of coker(Z^m --t--> Z^n) for integer t.

    t has full row rank m <= n interpretively: rows of t generate a subgroup
    of Z^n; returns the invariant factors of Z^n / row-span with 1s dropped,
    including 0s for free rank if the span is not finite index.
    """
    n = len(t[0]) if t else 0
    diag = snf_diagonal(t)
    rank = sum(1 for x in diag if x != 0)
    out = [x for x in diag if x not in (0, 1)]
    out.extend([0] * (n - rank))
    return out
