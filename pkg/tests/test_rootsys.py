from fractions import Fraction

import pytest

from voalat import lattice as lat
from voalat import rootsys as rs


def rstring(l):
    return rs.root_string(rs.root_system(l))


def test_ade_strings():
    assert rstring(lat.standard_lattice("E", 8)) == "E8"
    assert rstring(lat.standard_lattice("E", 7)) == "E7"
    assert rstring(lat.standard_lattice("E", 6)) == "E6"
    assert rstring(lat.standard_lattice("A", 1)) == "A1"


def test_reflective_hulls():
    # extra reflective norm-4 vectors: D_4 has all 24 (triality, hull F_4),
    # D_n>=5 and A_3=D_3 only +-2e_i (hull C_n); hexagonal A_2 gives G_2
    assert rstring(lat.standard_lattice("D", 4)) == "F4"
    assert rstring(lat.standard_lattice("D", 5)) == "C5"
    assert rstring(lat.standard_lattice("A", 3)) == "C3"
    assert rstring(lat.standard_lattice("A", 2)) == "G2"


def test_b_pattern():
    # sqrt2 Z^n: 2n shorts of norm 2, 2n(n-1) reflective longs of norm 4
    l = lat.rescale(lat.standard_lattice("Z", 3), 2)
    assert rstring(l) == "B3"
    l8 = lat.rescale(lat.standard_lattice("Z", 8), 2)
    assert rstring(l8) == "B8"


def test_b2_prints_c2():
    l = lat.rescale(lat.standard_lattice("Z", 2), 2)
    assert rstring(l) == "C2"


def test_scaled_components():
    l = lat.rescale(lat.standard_lattice("A", 1), 2)
    assert rstring(l) == "sqrt2A1"
    s = lat.direct_sum(lat.rescale(lat.standard_lattice("A", 1), 2),
                       lat.rescale(lat.standard_lattice("A", 1), 3))
    assert rstring(s) == "sqrt2A1+sqrt3A1"


def test_multiplicity_grouping():
    l = lat.direct_sum(lat.standard_lattice("E", 6), lat.standard_lattice("E", 6))
    assert rstring(l) == "E6^2"


def test_parse_round_trip():
    s = "D4^2+C2^4"
    ms = rs.parse_root_string(s)
    assert ms == {("D", 4, 1): 2, ("C", 2, 1): 4}
    ms2 = rs.parse_root_string("E8+sqrt2A3^4+sqrt10D4")
    assert ms2 == {("E", 8, 1): 1, ("A", 3, 2): 4, ("D", 4, 10): 1}


def test_prime_level_shortcut_agrees():
    for l in [lat.standard_lattice("A", 2),
              lat.standard_lattice("D", 4),
              lat.rescale(lat.standard_lattice("A", 1), 1),
              lat.direct_sum(lat.standard_lattice("A", 2),
                             lat.rescale(lat.standard_lattice("A", 2), 3))]:
        ell = lat.level(l)
        if ell not in (2, 3, 5, 7):
            continue
        assert sorted(rs.roots(l)) == sorted(rs.roots_prime_level(l))


def test_weyl_orders():
    assert rs.weyl_order("A", 4) == 120
    assert rs.weyl_order("B", 4) == 384
    assert rs.weyl_order("C", 10) == 2 ** 10 * 3628800
    assert rs.weyl_order("D", 4) == 192
    assert rs.weyl_order("E", 8) == 696729600
    assert rs.weyl_order("F", 4) == 1152
    assert rs.weyl_order("G", 2) == 12


def test_aut_orders():
    assert rs.rootsys_aut_order("A", 1) == 2
    assert rs.rootsys_aut_order("A", 2) == 12
    assert rs.rootsys_aut_order("D", 4) == 1152
    assert rs.rootsys_aut_order("D", 6) == 2 ** 6 * 720 * 2 // 2
    assert rs.rootsys_aut_order("E", 6) == 2 * 51840
    assert rs.rootsys_aut_order("E", 8) == 696729600


def comp_of(l):
    cs = rs.root_system(l)
    assert len(cs) == 1
    return cs[0]


def test_minus_one_membership():
    rs._MINUS_ONE.clear()
    assert rs.minus_one_in_weyl(comp_of(lat.standard_lattice("A", 1)))
    a2 = comp_of(lat.standard_lattice("A", 2))  # classifies as G2, -1 in W
    assert a2.family == "G"
    assert rs.minus_one_in_weyl(a2)
    # true A_2 component: restrict to the norm 2 roots by hand
    l = lat.standard_lattice("A", 2)
    roots2 = [v for n, v in rs.roots(l) if n == 2]
    a2true = rs.Component("A", 2, 1, roots2, gram=l.gram)
    assert not rs.minus_one_in_weyl(a2true)
    d4roots = [v for n, v in rs.roots(lat.standard_lattice("D", 4)) if n == 2]
    d4 = rs.Component("D", 4, 1, d4roots, gram=lat.standard_lattice("D", 4).gram)
    assert rs.minus_one_in_weyl(d4)
    d5roots = [v for n, v in rs.roots(lat.standard_lattice("D", 5)) if n == 2]
    d5 = rs.Component("D", 5, 1, d5roots, gram=lat.standard_lattice("D", 5).gram)
    assert not rs.minus_one_in_weyl(d5)
    assert not rs.minus_one_in_weyl(comp_of(lat.standard_lattice("E", 6)))
    assert rs.minus_one_in_weyl(comp_of(lat.standard_lattice("E", 7)))


def test_weyl_group_order_computed():
    g = rs.weyl_group_on_roots(comp_of(lat.standard_lattice("E", 6)))
    assert g.order() == 51840
    d4roots = [v for n, v in rs.roots(lat.standard_lattice("D", 4)) if n == 2]
    d4 = rs.Component("D", 4, 1, d4roots, gram=lat.standard_lattice("D", 4).gram)
    assert rs.weyl_group_on_roots(d4).order() == 192
