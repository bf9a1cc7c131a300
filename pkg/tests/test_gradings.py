"""Gradings from colored diagrams: spot values and structural checks."""

import pytest

from wmfposets.catalog_verify import edge_filter_equivalence
from wmfposets.gradings import (
    ColoredDiagram,
    extended_diagram,
    grading_report,
    minimal_nilpotent_grading,
    periodic_grading,
    z_grading,
)
from wmfposets.root_system import RootSystemError, SimpleType, build_root_system


def test_extended_diagram_marks():
    ed = extended_diagram(SimpleType("E", 8))
    assert ed.marks == (2, 3, 4, 5, 6, 4, 2, 3)
    assert sum(ed.marks) + 1 == 30
    # the affine node attaches where the pairing with theta is nonzero
    assert [i + 1 for i, a in enumerate(ed.attach) if a] == [1]


def test_colored_diagram_validation():
    with pytest.raises(RootSystemError):
        ColoredDiagram("usual", SimpleType("A", 3), (0,))
    with pytest.raises(RootSystemError):
        ColoredDiagram("usual", SimpleType("A", 3), ())
    with pytest.raises(RootSystemError):
        ColoredDiagram("extended", SimpleType("A", 3), (4, 5))
    cd = ColoredDiagram("extended", SimpleType("A", 3), (2, 0, 2))
    assert cd.colored == (0, 2)


def test_z_grading_e8_alpha4():
    rs = build_root_system(SimpleType("E", 8))
    zg = z_grading(rs, (4,))
    assert {str(t) for t, _ in zg.ideals} == {"A3", "A4"}
    assert (zg.dim(1), zg.edge_count(1), zg.defect()) == (40, 78, 2)
    assert zg.max_degree == 5


def test_z_grading_ideals_classification():
    rs = build_root_system(SimpleType("E", 8))
    # removing alpha_2 leaves A1 x E6
    zg = z_grading(rs, (2,))
    assert sorted(str(t) for t, _ in zg.ideals) == ["A1", "E6"]
    rs = build_root_system(SimpleType("F", 4))
    zg = z_grading(rs, (3,))
    assert sorted(str(t) for t, _ in zg.ideals) == ["A1", "A2"]


def test_grading_dimension_bookkeeping():
    rs = build_root_system(SimpleType("D", 5))
    for i in (1, 3, 5):
        zg = z_grading(rs, (i,))
        total = zg.dim(0) + 2 * sum(zg.dim(d) for d in zg.pieces)
        assert total == rs.rank + 2 * len(rs.positive_roots)


def test_short_grading_defect_is_coxeter():
    rs = build_root_system(SimpleType("C", 5))
    zg = z_grading(rs, (5,))
    assert zg.max_degree == 1
    assert (zg.dim(1), zg.edge_count(1)) == (15, 20)
    assert zg.defect() == rs.coxeter == 10


def test_minimal_nilpotent():
    rs = build_root_system(SimpleType("E", 8))
    zg = minimal_nilpotent_grading(rs)
    assert zg.max_degree == 2
    assert (zg.dim(1), zg.edge_count(1)) == (56, 84)
    assert zg.piece_coords[2] == (rs.highest_root,)
    with pytest.raises(RootSystemError):
        minimal_nilpotent_grading(build_root_system(SimpleType("A", 1)))


def test_periodic_rejects_trivial_order():
    rs = build_root_system(SimpleType("A", 3))
    with pytest.raises(RootSystemError):
        periodic_grading(rs, (1,))        # mark 1: order would be 1


def test_periodic_e8_order5():
    rs = build_root_system(SimpleType("E", 8))
    pg = periodic_grading(rs, (4,))
    assert pg.order == 5
    for r in range(1, 5):
        assert (pg.dim(r), pg.edge_count(r)) == (50, 100)
        assert pg.defect(r) == 0
    assert pg.g0_semisimple
    assert {str(t) for t, _ in pg.ideals} == {"A4"}


def test_periodic_affine_label_edges():
    # with the affine node uncolored, label 0 edges (via -theta) appear
    rs = build_root_system(SimpleType("D", 6))
    pg = periodic_grading(rs, (2,))
    labels = {lab for _, _, lab in pg.pieces[1].edges}
    assert 0 in labels
    assert pg.defect() == 0


def test_periodic_colored_affine_node():
    rs = build_root_system(SimpleType("A", 4))
    pg = periodic_grading(rs, (0, 2))
    assert pg.order == 2
    labels = {lab for _, _, lab in pg.pieces[1].edges}
    assert 0 not in labels


@pytest.mark.parametrize("name,colored", [
    ("A4", (2,)), ("B3", (1, 3)), ("C3", (2,)), ("D4", (2,)), ("G2", (1,)),
])
def test_edge_filter_equivalence(name, colored):
    assert edge_filter_equivalence(SimpleType.parse(name), colored)


def test_grading_report_shape():
    rs = build_root_system(SimpleType("A", 3))
    rep = grading_report(z_grading(rs, (2,)), identities=["sum=kh"])
    assert rep["diagram"] == "usual" and rep["type"] == "A3"
    assert rep["max_degree"] == 1 and rep["sum"] == 4
    assert rep["identities"] == ["sum=kh"]
    rep = grading_report(periodic_grading(rs, (1, 3)))
    assert rep["order"] == 2 and "max_degree" not in rep
