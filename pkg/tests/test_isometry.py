"""Automorphism and isometry oracles: classical orders and known identities."""

import os

import pytest

from voalat import exactmat as em
from voalat import isometry as iso
from voalat import lattice as lat


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("VOALAT_CACHE", str(tmp_path))


def test_aut_order_a2():
    # O(A2) = W(G2) = 12: the hexagonal lattice
    assert iso.aut_order(lat.standard_lattice("A", 2)) == 12


def test_aut_order_a1():
    assert iso.aut_order(lat.standard_lattice("A", 1)) == 2


def test_aut_order_d4():
    # O(D4) = W(F4): triality on top of W(D4) = 192
    assert iso.aut_order(lat.standard_lattice("D", 4)) == 1152


def test_aut_order_e6():
    # O(E6) = W(E6) x {+-1}
    assert iso.aut_order(lat.standard_lattice("E", 6)) == 2 * 51840


def test_aut_order_e8():
    assert iso.aut_order(lat.standard_lattice("E", 8)) == 696729600


def test_aut_order_scale_invariant():
    d4 = lat.standard_lattice("D", 4)
    gens, order = iso.automorphism_gens(lat.rescale(d4, 3), cache=False)
    assert order == 1152


def test_aut_order_zn():
    # signed permutations of Z^3
    z3 = lat.Lattice([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert iso.aut_order(z3) == 48


def test_gens_preserve_gram():
    l = lat.standard_lattice("D", 5)
    gens, order = iso.automorphism_gens(l, cache=False)
    assert order == 2 ** 5 * 120  # W(B5): D5 with the diagram flip
    for g in gens:
        assert em.mat_eq(em.mat_mul(em.mat_mul(g, l.gram), em.transpose(g)),
                         l.gram)
        assert em.det(g) in (1, -1)


def test_isometry_a3_d3():
    a3 = lat.standard_lattice("A", 3)
    d3 = lat.standard_lattice("D", 3)
    m = iso.isometry(a3, d3)
    assert m is not None
    assert em.mat_eq(em.mat_mul(em.mat_mul(m, d3.gram), em.transpose(m)),
                     a3.gram)


def test_isometry_rejects_different_theta():
    a4 = lat.standard_lattice("A", 4)
    z4 = lat.Lattice([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert iso.isometry(a4, z4) is None


def test_isometry_rescaled_pair():
    d4 = lat.standard_lattice("D", 4)
    m = iso.isometry(lat.rescale(d4, 2), lat.rescale(d4, 2))
    assert m is not None


def test_non_isometric_same_det():
    # A1 x A1 vs the norm-2 square lattice share det 4 but differ in theta
    a1a1 = lat.Lattice([[2, 0], [0, 2]])
    other = lat.Lattice([[2, 1], [1, 2]])  # A2, det 3: cheap reject
    assert iso.isometry(a1a1, other) is None


def test_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("VOALAT_CACHE", str(tmp_path / "c"))
    l = lat.standard_lattice("A", 3)
    gens1, o1 = iso.automorphism_gens(l)
    assert iso.cache_stat()["entries"] == 1
    gens2, o2 = iso.automorphism_gens(l)
    assert o1 == o2 == 2 * 24  # W(A3) x diagram flip
    assert [em.mat_int(g) for g in gens1] == [em.mat_int(g) for g in gens2]
    assert iso.cache_clear() == 1
    assert iso.cache_stat()["entries"] == 0


def test_cache_rejects_corrupt(tmp_path, monkeypatch):
    monkeypatch.setenv("VOALAT_CACHE", str(tmp_path / "c2"))
    l = lat.standard_lattice("A", 2)
    _, o1 = iso.automorphism_gens(l)
    d = iso.cache_dir()
    name = [n for n in os.listdir(d) if n.startswith("aut_")][0]
    with open(os.path.join(d, name), "w") as f:
        f.write('{"order": 999, "gens": [[[1, 1], [0, 1]]]}')
    _, o2 = iso.automorphism_gens(l)  # recomputed, not trusted
    assert o2 == 12


def test_dual_transfer():
    # transpose-inverse of an automorphism preserves the dual gram
    l = lat.rescale(lat.standard_lattice("D", 4), 2)
    gens, order = iso.automorphism_gens(l, cache=False)
    ld = lat.dual(l)
    for g in gens:
        h = em.transpose(em.mat_inv(g))
        assert em.mat_eq(em.mat_mul(em.mat_mul(h, ld.gram), em.transpose(h)),
                         ld.gram)
