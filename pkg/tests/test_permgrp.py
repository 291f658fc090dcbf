import numpy as np
from hypothesis import given, settings, strategies as st

from voalat import permgrp as pg


def perm(images):
    return np.array(images, dtype=np.int32)


def test_symmetric_orders():
    for n in (2, 3, 5, 8, 12):
        g = pg.PermGroup(pg.symmetric_group_gens(n), n)
        want = 1
        for k in range(2, n + 1):
            want *= k
        assert g.order() == want


def test_trivial_and_identity():
    g = pg.PermGroup([], 5)
    assert g.order() == 1
    g2 = pg.PermGroup([pg.identity_perm(4)], 4)
    assert g2.order() == 1
    assert g2.contains(pg.identity_perm(4))
    assert not g2.contains(perm([1, 0, 2, 3]))


def test_klein_four():
    a = perm([1, 0, 3, 2])
    b = perm([2, 3, 0, 1])
    g = pg.PermGroup([a, b], 4)
    assert g.order() == 4
    assert g.contains(perm([3, 2, 1, 0]))
    assert not g.contains(perm([0, 1, 3, 2]))


def test_alternating_vs_symmetric():
    # 3-cycles generate A_4
    a = perm([1, 2, 0, 3])
    b = perm([0, 2, 3, 1])
    g = pg.PermGroup([a, b], 4)
    assert g.order() == 12
    assert not g.contains(perm([1, 0, 2, 3]))


def test_orbits_and_stabilizer():
    g = pg.PermGroup(pg.symmetric_group_gens(12), 12)
    assert g.orbits() == [list(range(12))]
    assert g.stabilizer_order(0) == g.order() // 12
    h = pg.PermGroup([perm([1, 0, 2, 3, 4]), perm([0, 1, 3, 2, 4])], 5)
    assert h.orbits() == [[0, 1], [2, 3], [4]]
    assert h.order() == 4


def test_stabilizer_gens_generate_stabilizer():
    g = pg.PermGroup(pg.symmetric_group_gens(6), 6)
    sgens = g.stabilizer_gens(0)
    s = pg.PermGroup(sgens, 6)
    assert s.order() == 120
    for p in sgens:
        assert p[0] == 0


def test_action_closure():
    # Z_4 acting on itself by +1
    pts, perms = pg.action_closure([1], [0], lambda m, p: (p + m) % 4)
    assert pts == [0, 1, 2, 3]
    g = pg.PermGroup(perms, 4)
    assert g.order() == 4


@settings(max_examples=30, deadline=None)
@given(st.lists(st.permutations(list(range(6))), min_size=1, max_size=3))
def test_order_divides_and_membership(gen_lists):
    gens = [perm(g) for g in gen_lists]
    g = pg.PermGroup(gens, 6)
    n = g.order()
    assert 720 % n == 0
    for a in gens:
        assert g.contains(a)
        for b in gens:
            assert g.contains(pg.compose(a, b))
    assert g.contains(pg.identity_perm(6))
