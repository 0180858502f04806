"""Incidence vectors, hull dimension, Gale transform, type classification,
and face enumeration via the coface criterion.

The n+2 face-vertex indicator vectors of a 3-face-colorable simple
3-polytope span a hull of dimension n-1 (all color classes equal) or n.
Its Gale transform therefore lives in one or two dimensions, is constant
on color classes, and pins the full face lattice: a vertex subset J is a
proper face exactly when zero lies in the relative interior of the convex
hull of the complementary Gale points. Every lattice built here is
cross-checked against the closed-form per-type criterion; a disagreement
raises, it is never a tolerated outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import (
    CriterionMismatch,
    DiagramMismatch,
    DimensionMismatch,
    TheoremViolation,
    TooManyPoints,
)
from .linalg import (
    affine_dimension,
    null_space_basis,
    primitive_vector,
    rank,
    simplex_maximize,
)
from .polytopes import FaceColoring, PlanarPolytope

ANALYSIS_VERTEX_CAP = 24  # hull vertices (= faces of the input polytope)

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class IncidenceSystem:
    """The n+2 face-vertex indicator vectors, in face input order."""

    vectors: tuple[tuple[int, ...], ...]
    coloring: FaceColoring
    n: int

    def class_indices(self, slot: int) -> tuple[int, ...]:
        return self.coloring.class_members(slot)


@dataclass(frozen=True)
class GaleDiagram:
    points: tuple[Point, ...]                  # one per hull vertex
    normalized: tuple[tuple[int, ...], ...]    # primitive integer directions
    colors: tuple[int, ...]                    # face color per point
    ambient: int


@dataclass(frozen=True)
class TypeReport:
    hull_type: str                       # "I" | "II" | "III" | "IV"
    sorted_sizes: tuple[int, int, int]
    dim: int
    k: Optional[Fraction]                # type I only
    predicted_diagram: dict
    structure: str


@dataclass(frozen=True)
class FaceLattice:
    """All faces of a polytope as vertex-index sets with exact dimensions,
    including the empty face (dim -1) and the full polytope (dim d)."""

    dim: int
    top: frozenset[int]
    faces: dict[frozenset[int], int]

    @property
    def vertex_indices(self) -> tuple[int, ...]:
        return tuple(
            sorted(next(iter(f)) for f, d in self.faces.items() if d == 0 and len(f) == 1)
        )

    def proper_faces(self) -> dict[frozenset[int], int]:
        return {f: d for f, d in self.faces.items() if 0 <= d < self.dim}


def incidence_system(p: PlanarPolytope, c: FaceColoring) -> IncidenceSystem:
    """Build and sanity-check the indicator vectors of all faces."""
    V = p.num_vertices
    vectors = tuple(
        tuple(1 if v in set(face) else 0 for v in range(V)) for face in p.faces
    )
    for v in range(V):
        if sum(vec[v] for vec in vectors) != 3:
            raise TheoremViolation(f"vertex {v} lies on != 3 faces after validation")
    for slot in range(3):
        members = c.class_members(slot)
        sums = [sum(vectors[i][v] for i in members) for v in range(V)]
        if any(x != 1 for x in sums):
            raise TheoremViolation(f"class {slot} indicator sum is not all-ones")
    s = IncidenceSystem(vectors=vectors, coloring=c, n=p.n)
    if rank(vectors) != p.n:
        raise TheoremViolation(f"incidence rank != n = {p.n}")
    return s


def hull_dimension(s: IncidenceSystem) -> int:
    """Affine dimension of the hull; must follow the class-size pattern."""
    d = affine_dimension(s.vectors)
    m1, m2, m3 = s.coloring.class_sizes
    expected = s.n - 1 if m1 == m2 == m3 else s.n
    if d != expected:
        raise TheoremViolation(
            f"hull dimension {d} but class sizes {s.coloring.class_sizes} demand {expected}"
        )
    return d


def gale_transform(s: IncidenceSystem) -> GaleDiagram:
    """Rows of the canonical null-space basis of the homogenized vertex
    matrix, tagged with face colors and normalized to primitive directions."""
    d = hull_dimension(s)
    npts = s.n + 2
    matrix = [[1] * npts] + [
        [s.vectors[j][v] for j in range(npts)] for v in range(2 * s.n)
    ]
    basis = null_space_basis(matrix)
    expected_ambient = npts - d - 1
    if len(basis) != expected_ambient:
        raise TheoremViolation(
            f"null space dimension {len(basis)} != {expected_ambient}"
        )
    points = tuple(tuple(b[j] for b in basis) for j in range(npts))
    return GaleDiagram(
        points=points,
        normalized=tuple(primitive_vector(pt) for pt in points),
        colors=s.coloring.colors,
        ambient=expected_ambient,
    )


def relint_contains_zero(points: Sequence[Sequence[Fraction | int]]) -> bool:
    """Exact test for 0 in the relative interior of conv(points).

    One-dimensional inputs reduce to a sign check; otherwise solve
    max t s.t. sum(lam_i p_i) = 0, sum(lam_i) = 1, lam_i >= t by exact
    rational pivoting and test t > 0.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        return False
    D = len(pts[0])
    if any(len(p) != D for p in pts):
        raise DimensionMismatch("gale points of unequal dimension")
    if D == 1:
        vals = [p[0] for p in pts]
        if all(v == 0 for v in vals):
            return True
        return any(v > 0 for v in vals) and any(v < 0 for v in vals)
    # lam_i = mu_i + t with mu_i >= 0 and free t = u - w
    N = len(pts)
    sigma = [sum(p[r] for p in pts) for r in range(D)]
    A = [[p[r] for p in pts] + [sigma[r], -sigma[r]] for r in range(D)]
    A.append([Fraction(1)] * N + [Fraction(N), Fraction(-N)])
    b = [Fraction(0)] * D + [Fraction(1)]
    c = [Fraction(0)] * N + [Fraction(1), Fraction(-1)]
    status, value, _ = simplex_maximize(A, b, c)
    if status == "infeasible":
        return False
    if status != "optimal":
        raise TheoremViolation("relint LP cannot be unbounded (t <= 1/N)")
    return value > 0


def classify(s: IncidenceSystem, g: GaleDiagram) -> TypeReport:
    """Type I-IV from the equality pattern of sorted class sizes, verifying
    that the computed diagram matches the predicted shape exactly."""
    m1, m2, m3 = s.coloring.class_sizes
    n = s.n
    d = s.n - 1 if m1 == m2 == m3 else s.n
    slots = [s.class_indices(i) for i in range(3)]

    cls_points: list[Point] = []
    for slot in range(3):
        pts = {g.points[j] for j in slots[slot]}
        if len(pts) != 1:
            raise DiagramMismatch(f"class {slot} is not constant in the Gale transform")
        cls_points.append(next(iter(pts)))

    if m1 < m2 < m3:
        hull_type, k = "I", Fraction(m3 - m1, m2 - m1)
    elif m1 < m2 == m3:
        hull_type, k = "II", None
    elif m1 == m2 < m3:
        hull_type, k = "III", None
    else:
        hull_type, k = "IV", None

    if hull_type != "IV":
        if g.ambient != 1:
            raise DiagramMismatch(f"type {hull_type} diagram must be 1-dimensional")
        v1, v2, v3 = (p[0] for p in cls_points)

    if hull_type == "I":
        if v3 == 0 or v2 == 0:
            raise DiagramMismatch("type I admits no zero Gale value")
        # values are (1-k, k, -1) up to one nonzero scaling
        if v1 / v3 != k - 1 or v2 / v3 != -k:
            raise DiagramMismatch(
                f"type I value ratios ({v1}:{v2}:{v3}) off the (1-k, k, -1) pattern"
            )
        predicted_values = [str(1 - k), str(k), "-1"]
        structure = f"T^{n}_{m2 - 1}"
    elif hull_type == "II":
        if v1 != 0 or v2 == 0 or v2 != -v3:
            raise DiagramMismatch(
                f"type II values ({v1}:{v2}:{v3}) off the (0, 1, -1) pattern"
            )
        predicted_values = ["0", "1", "-1"]
        structure = f"{m1}-fold {n}-pyramid over C({2 * m2},{2 * m2 - 2})"
    elif hull_type == "III":
        if v3 != 0 or v1 == 0 or v1 != -v2:
            raise DiagramMismatch(
                f"type III values ({v1}:{v2}:{v3}) off the (1, -1, 0) pattern"
            )
        predicted_values = ["1", "-1", "0"]
        structure = f"{m3}-fold {n}-pyramid over C({2 * m2},{2 * m2 - 2})"
    else:
        if g.ambient != 2:
            raise DiagramMismatch("type IV diagram must be 2-dimensional")
        p1, p2, p3 = cls_points
        if any(all(x == 0 for x in p) for p in cls_points):
            raise DiagramMismatch("type IV admits no zero Gale point")
        for a, b in combinations(cls_points, 2):
            if a[0] * b[1] - a[1] * b[0] == 0:
                raise DiagramMismatch("type IV rays must be pairwise non-parallel")
        if any(p1[r] + p2[r] + p3[r] != 0 for r in range(2)):
            raise DiagramMismatch("type IV rays must sum to zero")
        if not relint_contains_zero(g.points):
            raise DiagramMismatch("zero not in the relative interior of the diagram")
        predicted_values = None
        structure = f"conv(w, {m2 - 1}-fold {n - 1}-pyramid over C({2 * m2},{2 * m2 - 2}))"

    predicted = {
        "ambient": 2 if hull_type == "IV" else 1,
        "sizes": [m1, m2, m3],
        "values": predicted_values,
    }
    return TypeReport(
        hull_type=hull_type,
        sorted_sizes=(m1, m2, m3),
        dim=d,
        k=k,
        predicted_diagram=predicted,
        structure=structure,
    )


def _closed_form_mask(hull_type: str, mask: int, smasks: list[int], full: int) -> bool:
    """Per-type face criterion on a vertex subset, as pure mask algebra."""
    s1, s2, s3 = smasks
    if mask == full:
        return False
    if hull_type == "I":
        return (mask & s2) != s2 and (mask & (s1 | s3)) != (s1 | s3)
    if hull_type == "II":
        both = s2 | s3
        return ((mask & s2) != s2 and (mask & s3) != s3) or (mask & both) == both
    if hull_type == "III":
        both = s1 | s2
        return ((mask & s1) != s1 and (mask & s2) != s2) or (mask & both) == both
    return all((mask & sm) != sm for sm in smasks)


def enumerate_faces(s: IncidenceSystem, g: GaleDiagram, t: TypeReport) -> FaceLattice:
    """All faces of the hull over all 2^(n+2) vertex subsets.

    The relative-interior coface route (on the computed Gale points) and
    the closed-form per-type criterion are evaluated independently for
    every subset and must agree.
    """
    npts = s.n + 2
    if npts > ANALYSIS_VERTEX_CAP:
        raise TooManyPoints(f"{npts} hull vertices exceeds cap {ANALYSIS_VERTEX_CAP}")
    full = (1 << npts) - 1
    smasks = []
    for slot in range(3):
        m = 0
        for j in s.class_indices(slot):
            m |= 1 << j
        smasks.append(m)

    # group vertices by identical Gale point; the relint test only depends
    # on which distinct points appear in the complement
    groups: dict[Point, int] = {}
    for pt in g.points:
        groups.setdefault(pt, len(groups))
    group_points = sorted(groups, key=groups.get)
    group_masks = [0] * len(groups)
    for j, pt in enumerate(g.points):
        group_masks[groups[pt]] |= 1 << j
    support_cache: dict[int, bool] = {}

    def relint_route(mask: int) -> bool:
        comp = full & ~mask
        if comp == 0:
            return False
        support = 0
        for i, gm in enumerate(group_masks):
            if comp & gm:
                support |= 1 << i
        hit = support_cache.get(support)
        if hit is None:
            pts = [group_points[i] for i in range(len(group_points)) if support >> i & 1]
            hit = relint_contains_zero(pts)
            support_cache[support] = hit
        return hit

    faces: dict[frozenset[int], int] = {}
    for mask in range(full + 1):
        by_relint = relint_route(mask)
        by_formula = _closed_form_mask(t.hull_type, mask, smasks, full)
        if by_relint != by_formula:
            raise CriterionMismatch(
                f"subset {mask:b}: relint says {by_relint}, "
                f"type {t.hull_type} criterion says {by_formula}"
            )
        if by_formula:
            members = frozenset(j for j in range(npts) if mask >> j & 1)
            faces[members] = affine_dimension([s.vectors[j] for j in sorted(members)])

    top = frozenset(range(npts))
    top_dim = affine_dimension(s.vectors)
    if top_dim != t.dim:
        raise TheoremViolation("top face dimension disagrees with the classification")
    faces[top] = top_dim
    return FaceLattice(dim=top_dim, top=top, faces=faces)


def fvector(lattice: FaceLattice) -> tuple[int, ...]:
    """Face counts by dimension 0 .. d-1."""
    counts = [0] * lattice.dim
    for _, d in lattice.faces.items():
        if 0 <= d < lattice.dim:
            counts[d] += 1
    return tuple(counts)


def simpliciality_check(lattice: FaceLattice, t: Optional[TypeReport] = None) -> bool:
    """True iff every proper face is a simplex (|J| == dim + 1).

    Types I and IV must be simplicial, II and III must not; passing the
    type report turns that prediction into a hard check.
    """
    simplicial = all(len(f) == d + 1 for f, d in lattice.proper_faces().items())
    if t is not None and simplicial != (t.hull_type in ("I", "IV")):
        raise TheoremViolation(
            f"type {t.hull_type} hull has simpliciality {simplicial}"
        )
    return simplicial


def neighborliness(lattice: FaceLattice) -> int:
    """Largest k such that every k-subset of hull vertices is a face."""
    verts = lattice.vertex_indices
    best = 0
    for k in range(1, len(verts)):
        if all(frozenset(c) in lattice.faces for c in combinations(verts, k)):
            best = k
        else:
            break
    return best


def lattice_to_json(lattice: FaceLattice) -> dict:
    """Deterministic JSON form of a face lattice, for dumps and golden tests."""
    return {
        "dim": lattice.dim,
        "faces": [
            {"vertices": sorted(f), "dim": d}
            for f, d in sorted(
                lattice.faces.items(), key=lambda kv: (kv[1], sorted(kv[0]))
            )
        ],
    }
