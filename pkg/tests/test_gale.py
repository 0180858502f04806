from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from galehull import (
    classify,
    enumerate_faces,
    fvector,
    gale_transform,
    hull_dimension,
    incidence_system,
    neighborliness,
    relint_contains_zero,
    simpliciality_check,
    three_color,
)
from galehull.errors import DimensionMismatch, TheoremViolation
from galehull.gale import IncidenceSystem
from galehull.polytopes import coloring_from_assignment

F = Fraction


def test_incidence_vector_of_cube_top_face(cube_analysis):
    # face 0 of the cube is the top square [0,1,2,3]
    assert cube_analysis.system.vectors[0] == (1, 1, 1, 1, 0, 0, 0, 0)


def test_class_sum_is_all_ones(cube_analysis):
    s = cube_analysis.system
    ones = (1,) * 8
    for slot in range(3):
        members = s.class_indices(slot)
        total = tuple(sum(s.vectors[i][v] for i in members) for v in range(8))
        assert total == ones


def test_incidence_column_sums(prism6_analysis):
    s = prism6_analysis.system
    assert len(s.vectors) == 8
    assert all(len(v) == 12 for v in s.vectors)
    for v in range(12):
        assert sum(vec[v] for vec in s.vectors) == 3


def test_hull_dimension_theorem(cube_analysis, prism6_analysis, trunc_oct_analysis):
    assert hull_dimension(cube_analysis.system) == 3          # equal classes: n-1
    assert hull_dimension(prism6_analysis.system) == 6        # otherwise: n
    assert hull_dimension(trunc_oct_analysis.system) == 12


def test_hull_dimension_violation_is_detected(cube):
    # an improper "coloring" with unequal class sizes predicts dim n = 4,
    # the actual hull has dimension 3
    fake = coloring_from_assignment((1, 2, 2, 3, 3, 3), 1)
    s = IncidenceSystem(
        vectors=tuple(
            tuple(1 if v in set(face) else 0 for v in range(8)) for face in cube.faces
        ),
        coloring=fake,
        n=4,
    )
    with pytest.raises(TheoremViolation):
        hull_dimension(s)


def test_gale_transform_residuals_are_zero(prism6_analysis):
    s, g = prism6_analysis.system, prism6_analysis.diagram
    npts = s.n + 2
    for b in range(g.ambient):
        assert sum(g.points[j][b] for j in range(npts)) == 0
        for v in range(2 * s.n):
            assert sum(s.vectors[j][v] * g.points[j][b] for j in range(npts)) == 0


def test_gale_diagram_cube(cube_analysis):
    g = cube_analysis.diagram
    assert g.ambient == 2 and len(g.points) == 6
    rays = {}
    for j, norm in enumerate(g.normalized):
        rays.setdefault(norm, []).append(g.colors[j])
    assert len(rays) == 3
    for norm, colors in rays.items():
        assert len(colors) == 2 and len(set(colors)) == 1
    assert relint_contains_zero(g.points)


def test_gale_diagram_hexagonal_prism(prism6_analysis):
    g = prism6_analysis.diagram
    s = prism6_analysis.system
    assert g.ambient == 1
    values = [g.normalized[j][0] for j in range(8)]
    hexagons = s.class_indices(0)
    assert all(values[j] == 0 for j in hexagons)
    nonzero = sorted(values[j] for j in range(8) if j not in hexagons)
    assert nonzero == [-1, -1, -1, 1, 1, 1]


def test_classify_structures(prism6_analysis, prism8_analysis, trunc_oct_analysis):
    assert prism6_analysis.report.hull_type == "II"
    assert prism6_analysis.report.structure == "2-fold 6-pyramid over C(6,4)"
    assert prism8_analysis.report.hull_type == "II"
    assert prism8_analysis.report.sorted_sizes == (2, 4, 4)
    assert trunc_oct_analysis.report.hull_type == "III"
    assert trunc_oct_analysis.report.structure == "6-fold 12-pyramid over C(8,6)"


def test_classify_cube_type_four(cube_analysis):
    r = cube_analysis.report
    assert r.hull_type == "IV" and r.dim == 3 and r.k is None
    assert cube_analysis.neighborly == r.sorted_sizes[1] - 1 == 1


def test_classify_stable_under_permuting_tied_classes(cube):
    base = three_color(cube)
    # swap the labels of two tied classes; sizes and type must not move
    swap = {1: 2, 2: 1, 3: 3}
    swapped = coloring_from_assignment(
        tuple(swap[c] for c in base.colors), base.essential_colorings
    )
    s = incidence_system(cube, swapped)
    g = gale_transform(s)
    r = classify(s, g)
    assert r.hull_type == "IV" and r.sorted_sizes == (2, 2, 2)
    lattice = enumerate_faces(s, g, r)
    assert fvector(lattice) == (6, 12, 8)


def test_relint_contains_zero_one_dim():
    assert relint_contains_zero([(1,), (-1,)])
    assert not relint_contains_zero([(1,), (0,)])
    assert relint_contains_zero([(0,), (0,)])
    assert not relint_contains_zero([])
    assert not relint_contains_zero([(2,), (1,), (0,)])
    assert relint_contains_zero([(2,), (-1,), (0,)])


def test_relint_contains_zero_two_dim():
    assert relint_contains_zero([(1, 1), (-1, 0), (0, -1)])
    assert not relint_contains_zero([(1, 0), (0, 1)])
    assert relint_contains_zero([(1, 0), (-1, 0)])
    assert relint_contains_zero([(2, 0), (-1, 0)])
    assert not relint_contains_zero([(1, 1), (-1, 0)])
    assert relint_contains_zero([(0, 0)])
    assert not relint_contains_zero([(1, 1), (2, 2), (-1, -1), (1, 0)])
    assert relint_contains_zero([(F(1, 3), F(1, 2)), (F(-1, 3), F(-1, 2))])


def test_relint_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        relint_contains_zero([(1, 0), (1,)])


def test_enumerate_faces_cube(cube_analysis):
    lattice = cube_analysis.lattice
    assert lattice.dim == 3
    # three pairwise non-opposite faces span a facet; prism(4) opposite
    # pairs are (0,1), (2,4), (3,5)
    assert lattice.faces.get(frozenset({0, 2, 3})) == 2
    assert frozenset({0, 1}) not in lattice.faces
    assert fvector(lattice) == (6, 12, 8)


def test_enumerate_faces_vertices_and_empty(prism6_analysis):
    lattice = prism6_analysis.lattice
    assert lattice.faces[frozenset()] == -1
    assert lattice.faces[lattice.top] == 6
    assert lattice.vertex_indices == tuple(range(8))


def test_chain_family_above_equal_classes(prism6_analysis):
    # faces containing both +-1 classes are exactly base + proper apex subsets
    s = prism6_analysis.system
    base = frozenset(s.class_indices(1)) | frozenset(s.class_indices(2))
    apexes = frozenset(s.class_indices(0))
    containing = {
        f for f in prism6_analysis.lattice.proper_faces() if base <= f
    }
    expected = {
        base | frozenset(a)
        for size in range(len(apexes))
        for a in combinations(sorted(apexes), size)
    }
    assert containing == expected


def test_chain_family_above_equal_classes_big_apex(trunc_oct_analysis):
    # same family when the apex class is the largest one
    s = trunc_oct_analysis.system
    base = frozenset(s.class_indices(0)) | frozenset(s.class_indices(1))
    apexes = frozenset(s.class_indices(2))
    containing = {
        f for f in trunc_oct_analysis.lattice.proper_faces() if base <= f
    }
    expected = {
        base | frozenset(a)
        for size in range(len(apexes))
        for a in combinations(sorted(apexes), size)
    }
    assert containing == expected


def test_classify_rejects_corrupted_diagram(prism6_analysis):
    from dataclasses import replace

    from galehull.errors import DiagramMismatch
    from galehull.gale import GaleDiagram

    g = prism6_analysis.diagram
    pts = list(g.points)
    hexagons = prism6_analysis.system.class_indices(0)
    pts[hexagons[0]] = (Fraction(5),)  # zero-class point moved off zero
    bad = GaleDiagram(
        points=tuple(pts),
        normalized=g.normalized,
        colors=g.colors,
        ambient=g.ambient,
    )
    with pytest.raises(DiagramMismatch):
        classify(prism6_analysis.system, bad)


def test_enumerate_rejects_inconsistent_diagram(prism6_analysis):
    from galehull.errors import CriterionMismatch
    from galehull.gale import GaleDiagram

    g = prism6_analysis.diagram
    belts = prism6_analysis.system.class_indices(1)
    pts = list(g.points)
    pts[belts[0]] = (-pts[belts[0]][0],)  # one belt vertex flips sign
    bad = GaleDiagram(
        points=tuple(pts),
        normalized=g.normalized,
        colors=g.colors,
        ambient=g.ambient,
    )
    with pytest.raises(CriterionMismatch):
        enumerate_faces(prism6_analysis.system, bad, prism6_analysis.report)


def test_fvector_prism6_matches_reference(prism6_analysis):
    from galehull import cyclic_facets, pyramid

    ref = pyramid(cyclic_facets(6, 4), 2)
    assert fvector(prism6_analysis.lattice) == fvector(ref)


def test_simpliciality(cube_analysis, prism6_analysis):
    assert simpliciality_check(cube_analysis.lattice) is True
    assert simpliciality_check(prism6_analysis.lattice) is False
    # prediction hook raises when the type disagrees
    with pytest.raises(TheoremViolation):
        simpliciality_check(prism6_analysis.lattice, cube_analysis.report)


def test_neighborliness_known_values(cube_analysis):
    from galehull import cyclic_facets, oracle_lattice

    assert neighborliness(cube_analysis.lattice) == 1
    assert neighborliness(cyclic_facets(6, 4)) == 2
    simplex = oracle_lattice([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert neighborliness(simplex) == 3


def test_lattice_intersection_closed(cube_analysis):
    faces = set(cube_analysis.lattice.faces)
    for a in faces:
        for b in faces:
            assert (a & b) in faces


def test_lattice_json_dump_golden():
    import json

    from galehull import cyclic_facets, lattice_to_json

    dump = lattice_to_json(cyclic_facets(4, 2))
    assert dump == {
        "dim": 2,
        "faces": [
            {"vertices": [], "dim": -1},
            {"vertices": [0], "dim": 0},
            {"vertices": [1], "dim": 0},
            {"vertices": [2], "dim": 0},
            {"vertices": [3], "dim": 0},
            {"vertices": [0, 1], "dim": 1},
            {"vertices": [0, 3], "dim": 1},
            {"vertices": [1, 2], "dim": 1},
            {"vertices": [2, 3], "dim": 1},
            {"vertices": [0, 1, 2, 3], "dim": 2},
        ],
    }
    json.dumps(dump)  # serializable as-is


def test_lattice_json_dump_deterministic(prism6_analysis):
    from galehull import lattice_to_json

    once = lattice_to_json(prism6_analysis.lattice)
    again = lattice_to_json(prism6_analysis.lattice)
    assert once == again
