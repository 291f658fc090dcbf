"""Finite quadratic modules (discriminant forms) with exact invariants.

A module is carried in Smith normal form coordinates: tuples z modulo the
invariant factor vector, with q(z) = z * Q * z^T mod 1 for a rational Q.
Gauss sums are evaluated in Z[zeta_M] as polynomials reduced modulo the
M-th cyclotomic polynomial, so equality tests are exact, never numeric.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from . import exactmat as em


class FiniteQuadraticModule:

    def __init__(self, divisors, qmat, snf_v=None, snf_vinv=None, full_divisors=None,
                 active=None):
        self.divisors = tuple(int(d) for d in divisors)
        self.qmat = [[Fraction(x) for x in row] for row in qmat]
        # SNF bookkeeping so lattice isometries can be pushed to this module
        self.snf_v = snf_v
        self.snf_vinv = snf_vinv
        self.full_divisors = full_divisors
        self.active = active
        self._multiset = None

    @property
    def order(self):
        n = 1
        for d in self.divisors:
            n *= d
        return n

    @property
    def exponent(self):
        return self.divisors[-1] if self.divisors else 1

    def q(self, z):
        k = len(self.divisors)
        s = Fraction(0)
        for i in range(k):
            row = self.qmat[i]
            zi = z[i]
            if zi:
                for j in range(k):
                    if z[j]:
                        s += zi * row[j] * z[j]
        return s % 1

    def b(self, z, w):
        zw = tuple(x + y for x, y in zip(z, w))
        return (self.q(zw) - self.q(z) - self.q(w)) % 1

    def elements(self):
        from itertools import product
        return product(*[range(d) for d in self.divisors])

    def q_multiset(self):
        """Counts of each q value over the whole module, exact."""
        if self._multiset is not None:
            return self._multiset
        k = len(self.divisors)
        if k == 0:
            self._multiset = ((Fraction(0), 1),)
            return self._multiset
        den = 1
        for row in self.qmat:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        a = np.array([[int(x * den) for x in row] for row in self.qmat],
                     dtype=np.int64)
        grids = np.meshgrid(*[np.arange(d, dtype=np.int64) for d in self.divisors],
                            indexing="ij")
        z = np.stack([g.ravel() for g in grids], axis=1)
        vals = ((z @ a) * z).sum(axis=1) % den
        counts = np.bincount(vals, minlength=den)
        out = tuple((Fraction(int(v), den), int(c))
                    for v, c in enumerate(counts) if c)
        self._multiset = out
        return out

    def negate(self):
        return FiniteQuadraticModule(self.divisors,
                                     [[-x for x in row] for row in self.qmat])

    def gauss_sum(self, m=1):
        """Sum of e(m q(x)) over the module, as a reduced cyclotomic element."""
        M = self._cyc_order()
        coeffs = [0] * M
        for qv, cnt in self.q_multiset():
            e = int(qv * m * M) % M
            coeffs[e] += cnt
        return cyc_reduce(coeffs, M), M

    def _cyc_order(self):
        N = 8
        for qv, _ in self.q_multiset():
            d = qv.denominator
            N = N * d // gcd(N, d)
        for p in _odd_prime_divisors(self.order):
            if N % p:
                N *= p
        return N

    def gauss_sum_arg(self):
        """s in Z/8 with sum e(q(x)) = sqrt(|D|) * zeta_8^s; raises if none."""
        g, M = self.gauss_sum(1)
        r, f = _square_split(self.order)
        root = [0] * M
        root[0] = r
        root = cyc_reduce(root, M)
        for p in sorted(_prime_divisors(f)):
            root = cyc_mul(root, _sqrt_prime(p, M), M)
        for s in range(8):
            z8 = [0] * M
            z8[(s * M // 8) % M] = 1
            cand = cyc_mul(root, cyc_reduce(z8, M), M)
            if cand == g:
                return s
        raise ValueError("gauss sum is not sqrt(|D|) times an 8th root of unity")

    def fingerprint(self):
        """Isometry invariant: (divisors, q multiset, per-scale Gauss sums)."""
        gs = []
        e = self.exponent
        for m in sorted(_divisors(e)):
            red, M = self.gauss_sum(m)
            gs.append((m, M, tuple(red)))
        return ("fqm1", self.divisors, self.q_multiset(), tuple(gs))


def disc_module(l):
    """Discriminant module dual(l)/l of an integral lattice."""
    g = em.mat_int(l.gram)
    n = len(g)
    d, _, v = em.snf(g)
    vinv = em.mat_int(em.mat_inv(v))
    full = [d[i][i] for i in range(n)]
    active = [i for i in range(n) if full[i] > 1]
    ginv = em.mat_inv(g)
    # q(z) = 1/2 * (z vinv) ginv (z vinv)^T on SNF coordinates
    qfull = em.scalar_mul(Fraction(1, 2),
                          em.mat_mul(em.mat_mul(vinv, ginv), em.transpose(vinv)))
    qred = [[qfull[i][j] for j in active] for i in active]
    return FiniteQuadraticModule([full[i] for i in active], qred,
                                 snf_v=v, snf_vinv=vinv, full_divisors=full,
                                 active=active)


def milgram_ok(l):
    """Even positive definite l must satisfy arg = rank mod 8."""
    return disc_module(l).gauss_sum_arg() == l.rank % 8


# cyclotomic arithmetic: elements of Z[zeta_M] as coefficient lists reduced
# modulo Phi_M, length phi(M)

@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients of Phi_n, ascending degree."""
    # (x^n - 1) divided by the product of Phi_d for proper divisors d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d == n:
            continue
        poly = _poly_div_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def _poly_div_exact(num, den):
    num = list(num)
    den = list(den)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[i] = q
        if q:
            for j, dc in enumerate(den):
                num[i + j] -= q * dc
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyc_reduce(coeffs, M):
    """Reduce a coefficient list (mod x^M - 1 allowed) modulo Phi_M."""
    c = list(coeffs)
    if len(c) < M:
        c += [0] * (M - len(c))
    phi = list(cyclotomic_poly(M))
    deg = len(phi) - 1
    for i in range(len(c) - 1, deg - 1, -1):
        q = c[i]
        if q:
            c[i] = 0
            for j in range(deg):
                c[i - deg + j] -= q * phi[j]
    return tuple(c[:deg])


def cyc_mul(a, b, M):
    deg = len(cyclotomic_poly(M)) - 1
    out = [0] * (2 * deg)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return cyc_reduce(out, M)


def _sqrt_prime(p, M):
    """sqrt(p) as an element of Z[zeta_M]; needs p | M (p odd) or 8 | M (p=2)."""
    if p == 2:
        if M % 8:
            raise ValueError("sqrt(2) needs 8 | M")
        c = [0] * M
        c[M // 8] += 1
        c[M - M // 8] += 1
        return cyc_reduce(c, M)
    if M % p:
        raise ValueError("sqrt(%d) needs %d | M" % (p, p))
    c = [0] * M
    for k in range(p):
        c[(k * k % p) * (M // p) % M] += 1
    g = cyc_reduce(c, M)   # quadratic Gauss sum: sqrt(p) or i*sqrt(p)
    if p % 4 == 1:
        return g
    # p = 3 mod 4: g = i sqrt(p), so multiply by -i = zeta_4^3
    mi = [0] * M
    mi[3 * M // 4] = 1
    return cyc_mul(g, cyc_reduce(mi, M), M)


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _odd_prime_divisors(n):
    return [p for p in _prime_divisors(n) if p != 2]


def _square_split(n):
    """n = r^2 * f with f squarefree; returns (r, f)."""
    r, f = 1, 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            r *= d ** (e // 2)
            if e % 2:
                f *= d
        d += 1
    if n > 1:
        f *= n
    return r, f
