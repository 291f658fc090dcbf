from fractions import Fraction

import pytest

from voalat import exactmat as em
from voalat import lattice as lat


def test_standard_dets():
    assert lat.det(lat.standard_lattice("A", 2)) == 3
    assert lat.det(lat.standard_lattice("A", 7)) == 8
    assert lat.det(lat.standard_lattice("D", 4)) == 4
    assert lat.det(lat.standard_lattice("D", 12)) == 4
    assert lat.det(lat.standard_lattice("E", 6)) == 3
    assert lat.det(lat.standard_lattice("E", 7)) == 2
    assert lat.det(lat.standard_lattice("E", 8)) == 1
    assert lat.det(lat.standard_lattice("Z", 5)) == 1


def test_d2_and_d3():
    d2 = lat.standard_lattice("D", 2)
    assert d2.gram == [[2, 0], [0, 2]]
    d3 = lat.standard_lattice("D", 3)
    # D3 = A3 up to basis relabeling: same det, even, 12 norm-2 vectors
    assert lat.det(d3) == 4
    assert lat.is_even(d3)


def test_rescale_dual_level():
    d12 = lat.standard_lattice("D", 12)
    l = lat.rescale(d12, 2)
    assert lat.det(l) == 2 ** 12 * 4
    assert lat.level(l) == 4
    u = lat.rescale(lat.dual(l), 4)
    assert lat.is_even(u)
    # U = sqrt2 * D12dual; 2 * gram(dual(U)) is the D12 Cartan, so level 2
    assert lat.level(u) == 2
    assert lat.det(u) == 4 ** 12 // lat.det(l)


def test_level_e8_a1():
    assert lat.level(lat.standard_lattice("E", 8)) == 1
    a1 = lat.Lattice([[2]])
    assert lat.level(a1) == 4


def test_disc_divisors():
    assert lat.disc_divisors(lat.standard_lattice("A", 3)) == [4]
    assert lat.disc_divisors(lat.standard_lattice("D", 4)) == [2, 2]
    l = lat.rescale(lat.standard_lattice("D", 12), 2)
    assert lat.disc_divisors(l) == [2] * 10 + [4, 4]


def test_glue_extend_d4_to_z4():
    # D4 + v-class (e1) gives Z^4 rescaled by... D4 in its root basis:
    # glue by the vector class of norm 1? use 2*glue to stay even: glue s.
    d4 = lat.standard_lattice("D", 4)
    winv = em.mat_inv(d4.gram)
    # fundamental weight w4 = last row of inverse gram times... class of order 2
    s = winv[3]
    big, emb = lat.glue_extend(d4, [s])
    assert lat.det(big) == 1
    assert emb.sub == d4
    assert lat.quotient_invariants(emb) == [2]


def test_glue_rejects_nonintegral_pairing():
    a1 = lat.Lattice([[2]])
    with pytest.raises(ValueError):
        lat.glue_extend(a1, [[Fraction(1, 2)]])


def test_direct_sum_and_blocks():
    a = lat.standard_lattice("A", 2)
    b = lat.Lattice([[4]])
    s = lat.direct_sum(a, b)
    assert s.rank == 3
    assert lat.det(s) == 12
    e1 = lat.dual_embedding(a)
    e2 = lat.Embedding(b, b, [[1]])
    be = lat.block_embedding([lat.Embedding(a, a, em.identity(2)), e2])
    assert be.sub.rank == 3


def test_quotient_invariants_dual():
    a2 = lat.standard_lattice("A", 2)
    emb = lat.dual_embedding(a2)
    assert lat.quotient_invariants(emb) == [3]


def test_text_roundtrip():
    l = lat.rescale(lat.dual(lat.standard_lattice("A", 2)), 1)
    s = lat.to_text(l)
    l2 = lat.from_text(s)
    assert l == l2
    assert "2/3" in s


def test_embedding_validates():
    a1 = lat.Lattice([[2]])
    with pytest.raises(ValueError):
        lat.Embedding(a1, lat.Lattice([[4]]), [[1]])
