from fractions import Fraction

import pytest

from voalat import lattice as lat
from voalat import qform as qf


def test_disc_a1():
    m = qf.disc_module(lat.Lattice([[2]]))
    assert m.divisors == (2,)
    assert dict(m.q_multiset()) == {Fraction(0): 1, Fraction(1, 4): 1}
    assert m.gauss_sum_arg() == 1


def test_disc_a2():
    m = qf.disc_module(lat.standard_lattice("A", 2))
    assert m.divisors == (3,)
    assert dict(m.q_multiset()) == {Fraction(0): 1, Fraction(1, 3): 2}
    assert m.gauss_sum_arg() == 2


def test_disc_e8_trivial():
    m = qf.disc_module(lat.standard_lattice("E", 8))
    assert m.divisors == ()
    assert m.order == 1
    assert m.gauss_sum_arg() == 0


def test_milgram_on_standard():
    for fam, rk in [("A", 1), ("A", 2), ("A", 5), ("D", 4), ("D", 9),
                    ("E", 6), ("E", 7), ("E", 8), ("Z", 3)]:
        l = lat.standard_lattice(fam, rk)
        if lat.is_even(l):
            assert qf.milgram_ok(l), (fam, rk)


def test_milgram_rescaled():
    for c in (2, 3, 5):
        l = lat.rescale(lat.standard_lattice("A", 2), c)
        assert qf.milgram_ok(l)


def test_negate_arg():
    m = qf.disc_module(lat.standard_lattice("A", 2))
    assert m.negate().gauss_sum_arg() == (8 - 2) % 8


def test_two_c_fingerprint_pair():
    l1 = lat.rescale(lat.standard_lattice("D", 12), 2)
    l2 = lat.direct_sum(lat.rescale(lat.standard_lattice("E", 8), 2),
                        lat.rescale(lat.standard_lattice("D", 4), 2))
    f1 = qf.disc_module(l1).fingerprint()
    f2 = qf.disc_module(l2).fingerprint()
    assert f1 == f2
    # but a wrong-scale module must differ
    l3 = lat.rescale(lat.standard_lattice("D", 12), 1)
    assert qf.disc_module(l3).fingerprint() != f1


def test_fingerprint_invariance_under_basis_change():
    from voalat import exactmat as em
    a = lat.standard_lattice("D", 4)
    u = [[1, 1, 0, 0], [0, 1, 0, 0], [0, 1, 1, 0], [1, 0, 1, 1]]
    assert em.det(u) in (1, -1)
    b = lat.Lattice(em.mat_mul(em.mat_mul(u, a.gram), em.transpose(u)))
    assert qf.disc_module(a).fingerprint() == qf.disc_module(b).fingerprint()


def test_cyclotomic_identities():
    assert qf.cyclotomic_poly(1) == (-1, 1)
    assert qf.cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    # sqrt(2)^2 = 2 in Z[zeta_8]
    s = qf._sqrt_prime(2, 8)
    sq = qf.cyc_mul(s, s, 8)
    assert sq == qf.cyc_reduce([2], 8)
    # sqrt(3)^2 = 3 in Z[zeta_24]
    s = qf._sqrt_prime(3, 24)
    assert qf.cyc_mul(s, s, 24) == qf.cyc_reduce([3], 24)
    # sqrt(5)^2 = 5, sqrt(7)^2 = 7
    s = qf._sqrt_prime(5, 40)
    assert qf.cyc_mul(s, s, 40) == qf.cyc_reduce([5], 40)
    s = qf._sqrt_prime(7, 56)
    assert qf.cyc_mul(s, s, 56) == qf.cyc_reduce([7], 56)


def test_gauss_arg_5b_style():
    # sqrt5 A4 has disc Z_5^... level 5 case exercises odd sqrt extraction
    l = lat.rescale(lat.standard_lattice("A", 4), 5)
    m = qf.disc_module(l)
    assert m.gauss_sum_arg() == 4 % 8
