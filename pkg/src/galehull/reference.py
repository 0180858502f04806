"""Reference face lattices and combinatorial lattice isomorphism.

Cyclic polytopes are built from the evenness condition on the linear
vertex order, pyramids by adjoining apex subsets to base faces, and the
two closed-form models (one-dimensional two-class diagrams and the
three-equal-class hull) directly from their face criteria. Everything is
coordinate-free; geometric claims about these models are validated in the
hull oracle where coordinates exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .errors import BadParameters, TooManyPoints
from .gale import ANALYSIS_VERTEX_CAP, FaceLattice

Lattice = Union[FaceLattice, "ReferenceLattice"]


@dataclass(frozen=True)
class ReferenceLattice(FaceLattice):
    """A face lattice with vertex-role bookkeeping (base, apexes, classes)."""

    roles: dict[str, tuple[int, ...]] = None  # type: ignore[assignment]


def _simplicial_lattice(num_vertices: int, facets: list[frozenset[int]], dim: int,
                        roles: dict[str, tuple[int, ...]]) -> ReferenceLattice:
    faces: dict[frozenset[int], int] = {}
    for facet in facets:
        for size in range(len(facet) + 1):
            for sub in combinations(sorted(facet), size):
                faces[frozenset(sub)] = size - 1
    top = frozenset(range(num_vertices))
    faces[top] = dim
    return ReferenceLattice(dim=dim, top=top, faces=faces, roles=roles)


def gale_evenness(subset: frozenset[int], v: int) -> bool:
    """Evenness condition on positions 0..v-1: any two positions outside the
    subset are separated by an even number of subset members."""
    outside = [i for i in range(v) if i not in subset]
    for a, b in combinations(outside, 2):
        if sum(1 for x in subset if a < x < b) % 2:
            return False
    return True


def cyclic_facets(v: int, d: int) -> ReferenceLattice:
    """Face lattice of the cyclic polytope C(v, d) on vertices 0..v-1."""
    if not v > d >= 2:
        raise BadParameters(f"cyclic polytope needs v > d >= 2, got v={v} d={d}")
    facets = [
        frozenset(c) for c in combinations(range(v), d) if gale_evenness(frozenset(c), v)
    ]
    return _simplicial_lattice(v, facets, d, {"cycle": tuple(range(v))})


def pyramid(base: Lattice, apex_count: int) -> ReferenceLattice:
    """apex_count-fold pyramid: every face is (base face) union (apex subset)."""
    if apex_count < 0:
        raise BadParameters("apex count must be nonnegative")
    nbase = len(base.top)
    if base.top != frozenset(range(nbase)):
        raise BadParameters("pyramid base must use contiguous vertex indices")
    apexes = tuple(range(nbase, nbase + apex_count))
    faces: dict[frozenset[int], int] = {}
    for size in range(apex_count + 1):
        for aset in combinations(apexes, size):
            for g, gdim in base.faces.items():
                faces[g | frozenset(aset)] = gdim + size
    dim = base.dim + apex_count
    top = frozenset(range(nbase + apex_count))
    faces[top] = dim
    roles = dict(getattr(base, "roles", None) or {"base": tuple(range(nbase))})
    roles["apexes"] = roles.get("apexes", ()) + apexes
    return ReferenceLattice(dim=dim, top=top, faces=faces, roles=roles)


def tkn_model(n: int, k: int) -> ReferenceLattice:
    """Simplicial n-polytope with n+2 vertices: a simplex plus a point
    beyond k facets. Classes A (k+1 vertices) and B (n+1-k vertices); a
    proper face is any subset containing neither class entirely."""
    if not 1 <= k <= n // 2:
        raise BadParameters(f"model needs 1 <= k <= n/2, got n={n} k={k}")
    npts = n + 2
    if npts > ANALYSIS_VERTEX_CAP:
        raise TooManyPoints(f"{npts} vertices exceeds cap {ANALYSIS_VERTEX_CAP}")
    class_a = frozenset(range(k + 1))
    class_b = frozenset(range(k + 1, npts))
    faces: dict[frozenset[int], int] = {}
    for mask in range(1 << npts):
        members = frozenset(j for j in range(npts) if mask >> j & 1)
        if members == frozenset(range(npts)):
            continue
        if not (class_a <= members) and not (class_b <= members):
            faces[members] = len(members) - 1
    top = frozenset(range(npts))
    faces[top] = n
    return ReferenceLattice(
        dim=n, top=top, faces=faces,
        roles={"classA": tuple(sorted(class_a)), "classB": tuple(sorted(class_b))},
    )


def type4_model(m: int) -> ReferenceLattice:
    """Hull model for three equal classes of size m: 3m vertices, proper
    faces are the subsets missing at least one vertex of every class."""
    if m < 2:
        raise BadParameters(f"model needs m >= 2, got {m}")
    npts = 3 * m
    if npts > ANALYSIS_VERTEX_CAP:
        raise TooManyPoints(f"{npts} vertices exceeds cap {ANALYSIS_VERTEX_CAP}")
    classes = [frozenset(range(i * m, (i + 1) * m)) for i in range(3)]
    faces: dict[frozenset[int], int] = {}
    for mask in range(1 << npts):
        members = frozenset(j for j in range(npts) if mask >> j & 1)
        if any(cls <= members for cls in classes):
            continue
        faces[members] = len(members) - 1
    top = frozenset(range(npts))
    faces[top] = 3 * m - 3
    return ReferenceLattice(
        dim=3 * m - 3, top=top, faces=faces,
        roles={f"class{i + 1}": tuple(sorted(classes[i])) for i in range(3)},
    )


# --- isomorphism -------------------------------------------------------------

def _facets(lattice: Lattice) -> list[frozenset[int]]:
    return [f for f, d in lattice.faces.items() if d == lattice.dim - 1]


def _vertex_signature(lattice: Lattice, v: int, facets) -> tuple:
    containing = [f for f in facets if v in f]
    nfaces = sum(1 for f in lattice.faces if v in f)
    return (len(containing), tuple(sorted(len(f) for f in containing)), nfaces)


def lattice_isomorphic(a: Lattice, b: Lattice) -> Optional[dict[int, int]]:
    """Vertex bijection inducing a face-set bijection, or None.

    Backtracking over vertex-facet incidence with signature pruning; the
    complete candidate map is verified against the full face dictionaries.
    """
    if a.dim != b.dim or len(a.faces) != len(b.faces):
        return None
    # map every index occurring in a proper face (for honest vertex lattices
    # this is exactly the vertex set)
    va = sorted(set().union(*(f for f in a.faces if f != a.top)) or set())
    vb = sorted(set().union(*(f for f in b.faces if f != b.top)) or set())
    if len(va) != len(vb):
        return None
    fa, fb = _facets(a), _facets(b)
    if sorted(map(len, fa)) != sorted(map(len, fb)):
        return None
    sig_a = {v: _vertex_signature(a, v, fa) for v in va}
    sig_b = {v: _vertex_signature(b, v, fb) for v in vb}
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return None

    candidates = {v: [w for w in vb if sig_b[w] == sig_a[v]] for v in va}
    order = sorted(va, key=lambda v: len(candidates[v]))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def facet_compatible() -> bool:
        assigned = set(mapping)
        for f in fa:
            image = {mapping[v] for v in f if v in assigned}
            if not any(image <= g and len(g) == len(f) for g in fb):
                return False
        return True

    def verify_full() -> bool:
        for face, dim in a.faces.items():
            if face == a.top:
                continue  # tops correspond by the dim check above
            img = frozenset(mapping[v] for v in face)
            if b.faces.get(img, None) != dim:
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return verify_full()
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            mapping[v] = w
            used.add(w)
            if facet_compatible() and search(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if search(0) else None
