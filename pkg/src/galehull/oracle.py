"""Independent brute-force convex hull face lattice over exact rationals.

This is the ground truth the Gale machinery is validated against, so it
shares nothing with the coface criterion: facets are found by scanning
all d-subsets for spanning hyperplanes with all points on one closed
side, and the lattice is the intersection closure of the facet sets.
Desk scale only (at most 26 points).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    PointOutsideAffineHull,
    StructureMismatch,
    TooManyPoints,
)
from .gale import FaceLattice, IncidenceSystem, TypeReport, gale_transform
from .linalg import affine_dimension, dot, rref, spanning_hyperplane

POINT_CAP = 26


def _check_points(points) -> list[tuple]:
    pts = [tuple(p) for p in points]
    if len(pts) > POINT_CAP:
        raise TooManyPoints(f"{len(pts)} points exceeds the cap of {POINT_CAP}")
    if not pts:
        raise DegenerateInput("no points given")
    if any(len(p) != len(pts[0]) for p in pts):
        raise DimensionMismatch("points of unequal dimension")
    return pts


def _project_to_hull_coordinates(pts: list[tuple]) -> tuple[list[tuple], int]:
    """Restrict to the pivot coordinates of the affine hull.

    Selecting the RREF pivot columns of the difference matrix is a linear
    isomorphism of the affine hull onto R^d, so faces are preserved.
    """
    d = affine_dimension(pts)
    p0 = pts[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    if not diffs:
        return [()] * len(pts), 0
    _, pivots = rref(diffs)
    return [tuple(p[c] for c in pivots) for p in pts], d


def _facet_supports(qpts: list[tuple], d: int):
    """All facet supporting hyperplanes of full-dimensional conv(qpts) in R^d.

    Yields (facet_index_set, normal, offset, side) with side = +1 if the
    polytope satisfies normal.x <= offset, else -1.
    """
    n = len(qpts)
    seen: set[tuple] = set()
    out = []
    for subset in combinations(range(n), d):
        hp = spanning_hyperplane([qpts[i] for i in subset], d)
        if hp is None:
            continue
        normal, offset = hp
        key = (normal, offset)
        if key in seen:
            continue
        seen.add(key)
        values = [dot(normal, q) - offset for q in qpts]
        if all(v <= 0 for v in values):
            side = -1
        elif all(v >= 0 for v in values):
            side = 1
        else:
            continue
        members = frozenset(i for i, v in enumerate(values) if v == 0)
        out.append((members, normal, offset, side))
    return out


def oracle_lattice(points: Sequence[Sequence[Fraction | int]]) -> FaceLattice:
    """Face lattice of conv(points) by exhaustive hyperplane scanning.

    Faces are index sets over the input points; the empty face and the
    full polytope are included, everything graded by exact affine
    dimension.
    """
    pts = _check_points(points)
    qpts, d = _project_to_hull_coordinates(pts)
    if d == 0:
        raise DegenerateInput("all points coincide")

    facet_sets = {members for members, *_ in _facet_supports(qpts, d)}
    n = len(pts)
    full_mask = (1 << n) - 1
    masks = {sum(1 << i for i in f) for f in facet_sets}
    closure = set(masks)
    queue = list(masks)
    while queue:
        m = queue.pop()
        for fm in masks:
            x = m & fm
            if x not in closure:
                closure.add(x)
                queue.append(x)
    closure.add(0)

    faces: dict[frozenset[int], int] = {}
    for m in closure:
        members = frozenset(i for i in range(n) if m >> i & 1)
        faces[members] = affine_dimension([qpts[i] for i in sorted(members)])
    for f in facet_sets:
        if faces[f] != d - 1:
            raise StructureMismatch("facet with wrong affine dimension")
    top = frozenset(range(n))
    faces[top] = d
    return FaceLattice(dim=d, top=top, faces=faces)


def beyond_facets(
    point: Sequence[Fraction | int], others: Sequence[Sequence[Fraction | int]]
) -> int:
    """Number of facets of conv(others) strictly separating the point.

    The point must lie in the affine hull of the others; the centroid of
    the others is the strict-inside witness.
    """
    pts = _check_points(others)
    d = affine_dimension(pts)
    if affine_dimension(pts + [tuple(point)]) != d:
        raise PointOutsideAffineHull("point leaves the affine hull of the others")
    if d == 0:
        raise DegenerateInput("all points coincide")
    p0 = pts[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    _, pivots = rref(diffs)
    qpts = [tuple(p[c] for c in pivots) for p in pts]
    qpoint = tuple(point[c] for c in pivots)

    n = len(qpts)
    centroid = tuple(sum(q[r] for q in qpts) / n for r in range(d))
    count = 0
    for _, normal, offset, _ in _facet_supports(qpts, d):
        inside = dot(normal, centroid) - offset
        value = dot(normal, qpoint) - offset
        if inside == 0:
            raise StructureMismatch("centroid on a facet hyperplane")
        if value != 0 and (value > 0) != (inside > 0):
            count += 1
    return count


def verify_pyramid_structure(s: IncidenceSystem, t: TypeReport) -> dict:
    """Confirm the apex class of a type II/III hull: zero Gale points, and
    each apex vertex on every facet except exactly one."""
    if t.hull_type not in ("II", "III"):
        raise ValueError(f"pyramid structure applies to types II/III, not {t.hull_type}")
    apex_slot = 0 if t.hull_type == "II" else 2
    g = gale_transform(s)
    apexes = s.class_indices(apex_slot)
    for j in apexes:
        if any(x != 0 for x in g.points[j]):
            raise StructureMismatch(f"apex vertex {j} has nonzero Gale point")
    for j in range(s.n + 2):
        if j not in apexes and all(x == 0 for x in g.points[j]):
            raise StructureMismatch(f"non-apex vertex {j} has zero Gale point")

    lattice = oracle_lattice(s.vectors)
    facets = [f for f, d in lattice.faces.items() if d == lattice.dim - 1]
    for j in apexes:
        missing = sum(1 for f in facets if j not in f)
        if missing != 1:
            raise StructureMismatch(
                f"apex vertex {j} is outside {missing} facets, expected 1"
            )
    return {
        "apexSlot": apex_slot + 1,
        "apexVertices": list(apexes),
        "apexCount": len(apexes),
        "zeroGalePoints": True,
        "apexFacetSignature": True,
        "facetCount": len(facets),
    }
