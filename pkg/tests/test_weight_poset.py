"""Weight posets against combinatorial oracles and closed-form data."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from wmfposets.root_system import SimpleType, build_root_system
from wmfposets.weight_poset import (
    build_poset,
    cartesian_product,
    irrep_poset,
    irrep_weights,
    is_wmf,
    model_compositions,
    model_spin_b,
    model_spin_d,
    model_subsets,
    model_vector,
    poly_derivative_at_one,
    poly_eval,
    poly_mul,
    tensor_poset,
    weyl_dimension,
)


def fund(n, m):
    return tuple(1 if i == m - 1 else 0 for i in range(n))


@pytest.mark.parametrize("n,m", [(3, 1), (4, 2), (5, 3), (7, 4)])
def test_weyl_dimension_binomial(n, m):
    rs = build_root_system(SimpleType("A", n))
    assert weyl_dimension(rs, fund(n, m)) == comb(n + 1, m)


def test_weyl_dimension_adjoint():
    # dim of the adjoint = n + #roots
    cases = [("A4", (1, 0, 0, 1), 24), ("G2", (0, 1), 14),
             ("E8", fund(8, 1), 248), ("F4", (0, 0, 0, 1), 52)]
    for name, lam, dim in cases:
        rs = build_root_system(SimpleType.parse(name))
        assert weyl_dimension(rs, lam) == dim


def test_wmf_negative_adjoint():
    # the A2 adjoint has a double zero weight: 8 > 7 distinct weights
    rs = build_root_system(SimpleType("A", 2))
    assert not is_wmf(rs, (1, 1))
    assert len(irrep_weights(rs, (1, 1))) == 7


@pytest.mark.parametrize("n,m", [(2, 1), (4, 2), (6, 3), (7, 4)])
def test_subset_model_oracle(n, m):
    rs = build_root_system(SimpleType("A", n))
    assert irrep_weights(rs, fund(n, m)) == model_subsets(n, m)


@pytest.mark.parametrize("n,m", [(1, 5), (2, 3), (3, 4)])
def test_composition_model_oracle(n, m):
    rs = build_root_system(SimpleType("A", n))
    lam = tuple(m if i == 0 else 0 for i in range(n))
    assert irrep_weights(rs, lam) == model_compositions(n, m)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_spin_models(n):
    assert irrep_weights(build_root_system(SimpleType("B", n)),
                         fund(n, n)) == model_spin_b(n)
    assert irrep_weights(build_root_system(SimpleType("D", n + 1)),
                         fund(n + 1, n + 1)) == model_spin_d(n + 1)


@pytest.mark.parametrize("name", ["B4", "C4", "D5"])
def test_vector_models(name):
    stype = SimpleType.parse(name)
    rs = build_root_system(stype)
    assert irrep_weights(rs, fund(stype.rank, 1)) == model_vector(stype)


SPORADIC = [
    ("C3", (0, 0, 1), 14, 17, (1, 9, 4)),
    ("E6", fund(6, 1), 27, 36, (1, 16, 10)),
    ("E7", fund(7, 1), 56, 84, (1, 27, 27, 1)),
    ("G2", (1, 0), 7, 6, (1, 6)),
]


@pytest.mark.parametrize("name,lam,dim,edges,poly", SPORADIC)
def test_sporadic_posets(name, lam, dim, edges, poly):
    p = irrep_poset(SimpleType.parse(name), lam)
    assert (len(p), p.num_edges) == (dim, edges)
    assert p.covering_polynomial("upper") == poly
    assert p.covering_polynomial("lower") == poly
    assert poly_eval(poly, 1) == dim
    assert poly_derivative_at_one(poly) == edges


def test_poset_determinism():
    p1 = irrep_poset(SimpleType("A", 3), (0, 1, 0))
    p2 = irrep_poset(SimpleType("A", 3), (0, 1, 0))
    assert p1.elements == p2.elements and p1.edges == p2.edges
    # unique top element first
    assert p1.elements[0] == (0, 1, 0)


def test_edges_are_simple_root_differences():
    p = irrep_poset(SimpleType("C", 3), (0, 0, 1))
    rs = build_root_system(SimpleType("C", 3))
    for u, v, lab in p.edges:
        diff = tuple(a - b for a, b in zip(p.elements[u], p.elements[v]))
        assert diff == rs.cartan_column(lab)


def test_cartesian_product_counts():
    p1 = irrep_poset(SimpleType("C", 3), (0, 0, 1))
    p2 = irrep_poset(SimpleType("A", 2), (1, 0))
    prod = cartesian_product(p1, p2)
    assert len(prod) == 14 * 3
    assert prod.num_edges == 14 * 2 + 3 * 17
    assert prod.ratio() == p1.ratio() + p2.ratio()
    assert prod.covering_polynomial("upper") == poly_mul(
        p1.covering_polynomial("upper"), p2.covering_polynomial("upper")
    )
    # independent rederivation from the product weight set
    direct = build_poset(prod.ambient, prod.elements)
    assert set(direct.elements) == set(prod.elements)
    edge_pairs = {(prod.elements[u], prod.elements[v]) for u, v, _ in prod.edges}
    direct_pairs = {(direct.elements[u], direct.elements[v])
                    for u, v, _ in direct.edges}
    assert edge_pairs == direct_pairs


def test_tensor_poset_labels_shift():
    p = tensor_poset([(SimpleType("A", 2), (1, 0)), (SimpleType("A", 1), (1,))])
    labels = {lab for _, _, lab in p.edges}
    assert labels == {1, 2, 3}
    assert p.total_rank == 3


WMF_CATALOG_SAMPLE = [
    ("A5", fund(5, 3)),
    ("B4", fund(4, 4)),
    ("C4", fund(4, 1)),
    ("D5", fund(5, 5)),
    ("A3", (3, 0, 0)),
]


@pytest.mark.parametrize("name,lam", WMF_CATALOG_SAMPLE)
def test_polynomial_evaluations(name, lam):
    p = irrep_poset(SimpleType.parse(name), lam)
    k = p.covering_polynomial("upper")
    kk = p.covering_polynomial("lower")
    assert poly_eval(k, 1) == len(p) == poly_eval(kk, 1)
    assert poly_derivative_at_one(k) == p.num_edges
    assert k == kk


def test_json_shape():
    p = irrep_poset(SimpleType("A", 1), (1,))
    d = p.to_json_dict()
    assert d["ambient"] == ["A1"]
    assert d["elements"] == [[1], [-1]]
    assert d["edges"] == [[0, 1, 1]]


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 3))
def test_product_formula_property(n, m, k):
    m = min(m, n)
    p1 = irrep_poset(SimpleType("A", n), fund(n, m))
    lam = tuple(k if i == 0 else 0 for i in range(2))
    p2 = irrep_poset(SimpleType("A", 2), lam)
    prod = cartesian_product(p1, p2)
    assert prod.num_edges == len(p1) * p2.num_edges + len(p2) * p1.num_edges
    assert prod.ratio() == p1.ratio() + p2.ratio()


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7))
def test_connectedness_property(n, m):
    m = min(m, n)
    p = irrep_poset(SimpleType("A", n), fund(n, m))
    assert len(p.connected_components()) == 1
    assert Fraction(p.num_edges, len(p)) == p.ratio()
