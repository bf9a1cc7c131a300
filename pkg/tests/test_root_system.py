"""Root-system construction checked against independent data.

Counts, Coxeter numbers, and highest-root marks come from the standard
tables; closure properties are checked structurally.
"""

import pytest
from hypothesis import given, settings, strategies as st

from wmfposets.root_system import (
    RootSystemError,
    SimpleType,
    all_simple_types,
    bourbaki_alias,
    build_root_system,
    cartan_determinant,
    cartan_matrix,
    root_order_edges,
)

KNOWN = {
    # type: (#positive roots, h, h*, highest-root coords)
    "A3": (6, 4, 4, (1, 1, 1)),
    "B3": (9, 6, 5, (1, 2, 2)),
    "C3": (9, 6, 4, (2, 2, 1)),
    "D4": (12, 6, 6, (1, 2, 1, 1)),
    "E6": (36, 12, 12, (1, 2, 3, 2, 1, 2)),
    "E7": (63, 18, 18, (1, 2, 3, 4, 3, 2, 2)),
    "E8": (120, 30, 30, (2, 3, 4, 5, 6, 4, 2, 3)),
    "F4": (24, 12, 9, (2, 4, 3, 2)),
    "G2": (6, 6, 4, (3, 2)),
}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_known_data(name):
    rs = build_root_system(SimpleType.parse(name))
    count, h, hstar, theta = KNOWN[name]
    assert len(rs.positive_roots) == count
    assert rs.coxeter == h
    assert rs.dual_coxeter == hstar
    assert rs.highest_root == theta
    assert sum(theta) == h - 1


DETERMINANTS = {"A5": 6, "B4": 2, "C4": 2, "D5": 4, "E6": 3, "E7": 2,
                "E8": 1, "F4": 1, "G2": 1}


@pytest.mark.parametrize("name", sorted(DETERMINANTS))
def test_cartan_determinant(name):
    assert cartan_determinant(SimpleType.parse(name)) == DETERMINANTS[name]


def test_inadmissible_types():
    for bad in ["D3", "E5", "F5", "G3", "H4", "A0"]:
        with pytest.raises(RootSystemError):
            SimpleType.parse(bad)


def test_b2_short_root_pairings():
    """In B2 the short root alpha_1 + alpha_2 pairs to (1, 0)."""
    rs = build_root_system(SimpleType("B", 2))
    assert rs.pairings((1, 1)) == (1, 0)
    assert not rs.is_long(2) and rs.is_long(1)


def test_c_type_long_row():
    # C_n: alpha_n long, so column n of the Cartan matrix carries the -2
    # in the row of the short neighbor alpha_{n-1}.
    m = cartan_matrix(SimpleType("C", 4))
    assert m[2][3] == -2 and m[3][2] == -1


def test_f4_short_vertices():
    rs = build_root_system(SimpleType("F", 4))
    assert [rs.is_long(i) for i in (1, 2, 3, 4)] == [False, False, True, True]


def test_bourbaki_alias_is_bijection():
    for name in ("A4", "B4", "D5", "E6", "E7", "E8", "F4", "G2"):
        stype = SimpleType.parse(name)
        alias = bourbaki_alias(stype)
        assert sorted(alias) == list(range(1, stype.rank + 1))
        assert sorted(alias.values()) == list(range(1, stype.rank + 1))
    assert bourbaki_alias(SimpleType("F", 4)) == {1: 4, 2: 3, 3: 2, 4: 1}
    # E6: our branch leaf alpha_6 is Bourbaki's alpha_2
    assert bourbaki_alias(SimpleType("E", 6))[6] == 2


@pytest.mark.parametrize("stype", all_simple_types(8))
def test_count_and_closure(stype):
    rs = build_root_system(stype)
    n, h = rs.rank, rs.coxeter
    assert 2 * len(rs.positive_roots) == n * h
    # closure is idempotent: gamma + alpha_i is a root only if already known
    present = rs.root_set()
    for gamma in rs.positive_roots:
        pair = rs.pairings(gamma)
        for i in range(n):
            p = 0
            down = list(gamma)
            while True:
                down[i] -= 1
                if down[i] < 0 or tuple(down) not in present:
                    break
                p += 1
            up = list(gamma)
            up[i] += 1
            if pair[i] - p < 0:
                assert tuple(up) in present
            else:
                assert tuple(up) not in present


@pytest.mark.parametrize("stype", all_simple_types(6))
def test_root_order_edge_labels(stype):
    rs = build_root_system(stype)
    present = rs.root_set()
    for gamma, beta, i in root_order_edges(rs):
        assert gamma in present and beta in present
        diff = tuple(a - b for a, b in zip(gamma, beta))
        assert diff == rs.simple_root(i)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(all_simple_types(8)), st.data())
def test_coroot_pairing_integrality(stype, data):
    """<gamma, delta^vee> is an integer in {-3..3} for roots gamma, delta."""
    rs = build_root_system(stype)
    gamma = data.draw(st.sampled_from(rs.positive_roots))
    delta = data.draw(st.sampled_from(rs.positive_roots))
    val = rs.coroot_pairing(rs.pairings(gamma), delta)
    assert val.denominator == 1
    if gamma != delta:
        assert -3 <= val <= 3
    else:
        assert val == 2


def test_weight_coords_roundtrip():
    rs = build_root_system(SimpleType("E", 6))
    for gamma in rs.positive_roots:
        assert rs.weight_coords(rs.pairings(gamma)) == gamma
    # the first fundamental weight of E6 is not in the root lattice
    with pytest.raises(RootSystemError):
        rs.weight_coords((1, 0, 0, 0, 0, 0))
