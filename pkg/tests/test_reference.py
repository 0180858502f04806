from __future__ import annotations

from itertools import combinations

import pytest

from galehull import (
    cyclic_facets,
    fvector,
    lattice_isomorphic,
    neighborliness,
    oracle_lattice,
    pyramid,
    simpliciality_check,
    tkn_model,
    type4_model,
)
from galehull.errors import BadParameters


def _criterion_faces(v):
    """Independent count of C(v, v-2) faces via the two-parity-class rule:
    a subset is a face iff it contains neither parity class entirely."""
    odd = frozenset(range(0, v, 2))
    even = frozenset(range(1, v, 2))
    out = set()
    for size in range(v):
        for sub in combinations(range(v), size):
            s = frozenset(sub)
            if not (odd <= s) and not (even <= s):
                out.add(s)
    return out


def test_cyclic_c64_fvector_and_faces():
    lat = cyclic_facets(6, 4)
    assert fvector(lat) == (6, 15, 18, 9)
    expected = _criterion_faces(6)
    assert set(lat.proper_faces()) | {frozenset()} == expected | {frozenset()}
    assert lat.faces[frozenset()] == -1


def test_cyclic_c42_is_square():
    lat = cyclic_facets(4, 2)
    facets = {f for f, d in lat.faces.items() if d == 1}
    assert facets == {
        frozenset({0, 1}),
        frozenset({1, 2}),
        frozenset({2, 3}),
        frozenset({0, 3}),
    }
    assert fvector(lat) == (4, 4)


def test_cyclic_neighborliness_family():
    for m in (2, 3, 4):
        lat = cyclic_facets(2 * m, 2 * m - 2)
        assert simpliciality_check(lat)
        assert neighborliness(lat) == m - 1
        facets = [f for f, d in lat.faces.items() if d == lat.dim - 1]
        assert all(len(f) == 2 * m - 2 for f in facets)


def test_cyclic_bad_parameters():
    with pytest.raises(BadParameters):
        cyclic_facets(4, 4)
    with pytest.raises(BadParameters):
        cyclic_facets(3, 1)


def test_pyramid_square_gives_square_pyramid():
    lat = pyramid(cyclic_facets(4, 2), 1)
    assert lat.dim == 3
    assert fvector(lat) == (5, 8, 5)
    assert not simpliciality_check(lat)


def test_pyramid_zero_apexes_is_identity():
    base = cyclic_facets(6, 4)
    lat = pyramid(base, 0)
    assert lat.faces == base.faces
    assert lat.dim == base.dim


def test_pyramid_fvector_recurrence():
    # one apex: dim-j faces are base faces of dim j (full base included,
    # it becomes a facet) plus cones over base faces of dim j-1
    from collections import Counter

    base = cyclic_facets(6, 4)
    pyr = pyramid(base, 1)
    fp = fvector(pyr)
    count = Counter(base.faces.values())  # includes dim -1 and the full base
    for j in range(pyr.dim):
        assert fp[j] == count[j] + count[j - 1]


def test_pyramid_roles():
    lat = pyramid(cyclic_facets(4, 2), 2)
    assert lat.roles["apexes"] == (4, 5)
    assert set(lat.roles["cycle"]) | set(lat.roles["apexes"]) == set(range(6))


def test_tkn_model_facets():
    for n, k in ((4, 1), (4, 2), (5, 2)):
        lat = tkn_model(n, k)
        assert len(lat.top) == n + 2
        assert simpliciality_check(lat)
        facets = [f for f, d in lat.faces.items() if d == n - 1]
        assert len(facets) == (k + 1) * (n + 1 - k)
        a = set(lat.roles["classA"])
        b = set(lat.roles["classB"])
        # facets are complements of one A-vertex and one B-vertex
        assert {frozenset(set(range(n + 2)) - {x, y}) for x in a for y in b} == set(
            facets
        )


def test_tkn_class_is_not_a_face():
    lat = tkn_model(4, 1)
    assert frozenset(lat.roles["classA"]) not in lat.faces


def test_tkn_bad_parameters():
    with pytest.raises(BadParameters):
        tkn_model(4, 0)
    with pytest.raises(BadParameters):
        tkn_model(4, 3)


def test_type4_model_octahedron():
    lat = type4_model(2)
    assert len(lat.top) == 6 and lat.dim == 3
    assert fvector(lat) == (6, 12, 8)
    assert simpliciality_check(lat)
    assert neighborliness(lat) == 1
    for cls in ("class1", "class2", "class3"):
        assert frozenset(lat.roles[cls]) not in lat.faces


def test_type4_every_small_subset_is_a_face():
    m = 3
    lat = type4_model(m)
    assert neighborliness(lat) == m - 1
    for sub in combinations(range(3 * m), m - 1):
        assert frozenset(sub) in lat.faces


def test_type4_bad_parameters():
    with pytest.raises(BadParameters):
        type4_model(1)


def test_isomorphism_reflexive_and_symmetric():
    lats = [cyclic_facets(6, 4), pyramid(cyclic_facets(4, 2), 1), type4_model(2)]
    for lat in lats:
        ident = lattice_isomorphic(lat, lat)
        assert ident is not None
    a, b = type4_model(2), oracle_lattice(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    )
    fwd = lattice_isomorphic(a, b)
    back = lattice_isomorphic(b, a)
    assert fwd is not None and back is not None


def test_isomorphism_witness_is_face_bijection():
    a = type4_model(2)
    b = oracle_lattice(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    )
    phi = lattice_isomorphic(a, b)
    mapped = {
        frozenset(phi[v] for v in f): d for f, d in a.faces.items() if f != a.top
    }
    expected = {f: d for f, d in b.faces.items() if f != b.top}
    assert mapped == expected


def test_non_isomorphic_simpliciality_differs():
    assert lattice_isomorphic(cyclic_facets(6, 4), pyramid(cyclic_facets(4, 2), 2)) is None


def test_non_isomorphic_different_dims():
    assert lattice_isomorphic(cyclic_facets(6, 4), cyclic_facets(6, 2)) is None
