from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from voalat import exactmat as em


def unimodular(u):
    return em.det(u) in (1, -1)


def test_snf_diag_2_3():
    d, u, v = em.snf([[2, 0], [0, 3]])
    assert [d[0][0], d[1][1]] == [1, 6]
    assert unimodular(u) and unimodular(v)
    assert em.mat_eq(em.mat_mul(em.mat_mul(u, [[2, 0], [0, 3]]), v), d)


def test_snf_divisor_chain():
    a = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    d, u, v = em.snf(a)
    diag = [d[i][i] for i in range(3)]
    # det 624, entry gcd 2, 2x2 minor gcd 4
    assert diag == [2, 2, 156]
    assert em.mat_eq(em.mat_mul(em.mat_mul(u, a), v), d)


def test_hnf_small():
    a = [[2, 0], [1, 1]]
    h, u = em.hnf(a)
    assert h == [[1, 1], [0, 2]]
    assert unimodular(u)
    assert em.mat_eq(em.mat_mul(u, a), h)


def test_inverse_a2_cartan():
    inv = em.mat_inv([[2, -1], [-1, 2]])
    assert inv == [[Fraction(2, 3), Fraction(1, 3)],
                   [Fraction(1, 3), Fraction(2, 3)]]


def test_inverse_singular():
    with pytest.raises(ValueError):
        em.mat_inv([[1, 2], [2, 4]])


def test_kernel_int_saturated():
    k = em.kernel_int([[2], [3]])
    assert len(k) == 1
    x = k[0]
    assert 2 * x[0] + 3 * x[1] == 0
    # saturated generator, not a multiple
    assert abs(x[0]) == 3 and abs(x[1]) == 2


def test_quotient_divisors():
    # index 4 sublattice 2Z x 2Z of Z^2
    assert em.lattice_quotient_divisors([[2, 0], [0, 2]]) == [2, 2]
    # Z^2 / <(1,1)> is free of rank 1
    assert em.lattice_quotient_divisors([[1, 1]]) == [0]


def test_det_int():
    assert em.det([[2, 1], [1, 2]]) == 3
    assert em.det([[1, 2], [2, 4]]) == 0


mats = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-20, 20), min_size=n, max_size=n),
        min_size=n, max_size=n))


@settings(max_examples=60, deadline=None)
@given(mats)
def test_snf_properties(a):
    d, u, v = em.snf(a)
    n = len(a)
    assert unimodular(u) and unimodular(v)
    assert em.mat_eq(em.mat_mul(em.mat_mul(u, a), v), d)
    diag = [d[i][i] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0
        assert diag[i] >= 0
    for i in range(n - 1):
        if diag[i + 1] != 0:
            assert diag[i] != 0 and diag[i + 1] % diag[i] == 0


@settings(max_examples=60, deadline=None)
@given(mats)
def test_hnf_properties(a):
    h, u = em.hnf(a)
    assert unimodular(u)
    assert em.mat_eq(em.mat_mul(u, a), h)
    n = len(a)
    pivots = []
    for i in range(n):
        nz = [j for j in range(n) if h[i][j] != 0]
        if not nz:
            continue
        p = nz[0]
        assert h[i][p] > 0
        if pivots:
            assert p > pivots[-1][1]
        for k in range(i):
            assert 0 <= h[k][p] < h[i][p]
        pivots.append((i, p))


@settings(max_examples=40, deadline=None)
@given(mats)
def test_inverse_roundtrip(a):
    d = em.det(a)
    if d == 0:
        return
    inv = em.mat_inv(a)
    assert em.mat_eq(em.mat_mul(a, inv), em.mat_frac(em.identity(len(a))))
