"""Combinatorial simple 3-polytopes: validation, face 3-coloring, catalog.

A polytope map is given purely combinatorially as a list of faces, each a
cyclic list of vertex ids. Validation certifies the polyhedral-map axioms
(cubic vertices, edge-manifold condition, Euler's formula, connectivity);
3-connectivity is deliberately not checked, so inputs are trusted to be
polytopal maps of the 2-sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    BadEdge,
    BadParameters,
    DegenerateFace,
    Disconnected,
    EulerViolation,
    NotCubic,
    NotThreeColorable,
    OddPrism,
    TooLarge,
    UnknownName,
)

Face = tuple[int, ...]


@dataclass(frozen=True)
class PlanarPolytope:
    """A validated combinatorial simple 3-polytope with 2n vertices."""

    faces: tuple[Face, ...]
    n: int
    edges: frozenset[frozenset[int]]
    vertex_faces: tuple[tuple[int, ...], ...]   # vertex id -> sorted face indices
    adjacency: tuple[frozenset[int], ...]       # face index -> adjacent face indices

    @property
    def num_vertices(self) -> int:
        return 2 * self.n

    @property
    def fvector(self) -> tuple[int, int, int]:
        return (2 * self.n, 3 * self.n, self.n + 2)

    def skeleton(self) -> dict[int, list[int]]:
        """Adjacency lists of the 1-skeleton, neighbor lists sorted."""
        nbrs: dict[int, set[int]] = {v: set() for v in range(self.num_vertices)}
        for e in self.edges:
            u, v = sorted(e)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: sorted(s) for v, s in nbrs.items()}


@dataclass(frozen=True)
class FaceColoring:
    """Proper 3-coloring of faces, with class sizes sorted ascending.

    slot_colors[i] is the color label occupying sorted slot i, so
    class_sizes == (len of class slot_colors[0]), ... ascending; ties are
    broken by color label.
    """

    colors: tuple[int, ...]               # face index -> color in {1,2,3}
    class_sizes: tuple[int, int, int]
    slot_colors: tuple[int, int, int]
    essential_colorings: int

    def class_members(self, slot: int) -> tuple[int, ...]:
        """Face indices of sorted class `slot` (0, 1 or 2)."""
        label = self.slot_colors[slot]
        return tuple(i for i, c in enumerate(self.colors) if c == label)


def _face_edges(face: Face) -> Iterable[frozenset[int]]:
    for i, v in enumerate(face):
        yield frozenset((v, face[(i + 1) % len(face)]))


def validate(raw: Sequence[Sequence[int]]) -> PlanarPolytope:
    """Check the polyhedral-map axioms and build derived structures."""
    if not raw:
        raise DegenerateFace("no faces given")
    faces: list[Face] = []
    for idx, cycle in enumerate(raw):
        cyc = tuple(int(v) for v in cycle)
        if len(cyc) < 3:
            raise DegenerateFace(f"face {idx} has fewer than 3 vertices")
        if len(set(cyc)) != len(cyc):
            raise DegenerateFace(f"face {idx} repeats a vertex")
        if any(v < 0 for v in cyc):
            raise DegenerateFace(f"face {idx} has a negative vertex id")
        faces.append(cyc)

    num_vertices = max(max(f) for f in faces) + 1
    edge_faces: dict[frozenset[int], list[int]] = {}
    for i, f in enumerate(faces):
        for e in _face_edges(f):
            edge_faces.setdefault(e, []).append(i)
    for e, owners in sorted(edge_faces.items(), key=lambda kv: sorted(kv[0])):
        if len(owners) != 2 or owners[0] == owners[1]:
            u, v = sorted(e)
            raise BadEdge(f"edge ({u},{v}) lies in faces {owners}, expected exactly 2")

    vertex_faces: list[list[int]] = [[] for _ in range(num_vertices)]
    for i, f in enumerate(faces):
        for v in f:
            vertex_faces[v].append(i)
    for v, owners in enumerate(vertex_faces):
        if len(owners) != 3:
            raise NotCubic(f"vertex {v} lies on {len(owners)} faces, expected 3")

    V, E, F = num_vertices, len(edge_faces), len(faces)
    if V - E + F != 2 or 2 * E != 3 * V:
        raise EulerViolation(f"V={V} E={E} F={F}: V-E+F={V - E + F}, 2E-3V={2 * E - 3 * V}")
    n = V // 2
    if F != n + 2 or n < 2:
        raise EulerViolation(f"face count {F} differs from n+2={n + 2}")

    seen = {0}
    stack = [0]
    nbrs: dict[int, list[int]] = {v: [] for v in range(V)}
    for e in edge_faces:
        u, v = sorted(e)
        nbrs[u].append(v)
        nbrs[v].append(u)
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != V:
        raise Disconnected(f"1-skeleton has {V - len(seen)} unreachable vertices")

    adjacency = [set() for _ in range(F)]
    for owners in edge_faces.values():
        a, b = owners
        adjacency[a].add(b)
        adjacency[b].add(a)

    return PlanarPolytope(
        faces=tuple(faces),
        n=n,
        edges=frozenset(edge_faces),
        vertex_faces=tuple(tuple(sorted(o)) for o in vertex_faces),
        adjacency=tuple(frozenset(a) for a in adjacency),
    )


def _color_backtrack(adjacency, colors, idx, collect, first_only):
    """Lexicographic backtracking over face colors; collect partitions."""
    if idx == len(adjacency):
        collect(tuple(colors))
        return first_only
    for c in (1, 2, 3):
        if idx == 0 and c != 1:
            break  # fix face 0 to color 1; partitions are unaffected
        if any(colors[j] == c for j in adjacency[idx] if j < idx):
            continue
        colors[idx] = c
        if _color_backtrack(adjacency, colors, idx + 1, collect, first_only):
            return True
        colors[idx] = 0
    return False


def three_color(p: PlanarPolytope) -> FaceColoring:
    """First proper 3-coloring in lexicographic order, plus the number of
    essentially different colorings (partitions up to color permutation)."""
    F = len(p.faces)
    found: list[tuple[int, ...]] = []
    partitions: set[frozenset[frozenset[int]]] = set()

    def collect_first(cs):
        found.append(cs)

    colors = [0] * F
    _color_backtrack(p.adjacency, colors, 0, collect_first, True)
    if not found:
        raise NotThreeColorable("faces admit no proper 3-coloring")

    def collect_all(cs):
        partitions.add(
            frozenset(
                frozenset(i for i, c in enumerate(cs) if c == label)
                for label in (1, 2, 3)
            )
        )

    colors = [0] * F
    _color_backtrack(p.adjacency, colors, 0, collect_all, False)

    coloring = coloring_from_assignment(found[0], len(partitions))
    if coloring.class_sizes[0] < 2:
        raise NotThreeColorable(
            f"color class of size {coloring.class_sizes[0]} cannot cover all vertices"
        )
    return coloring


def coloring_from_assignment(
    colors: Sequence[int], essential_colorings: int
) -> FaceColoring:
    """Wrap an already-proper color assignment as a FaceColoring."""
    chosen = tuple(int(c) for c in colors)
    sizes = {label: sum(1 for c in chosen if c == label) for label in (1, 2, 3)}
    order = sorted((1, 2, 3), key=lambda label: (sizes[label], label))
    return FaceColoring(
        colors=chosen,
        class_sizes=tuple(sizes[label] for label in order),
        slot_colors=tuple(order),
        essential_colorings=essential_colorings,
    )


def essential_partitions(p: PlanarPolytope) -> list[tuple[int, ...]]:
    """One representative coloring per essentially different partition,
    in deterministic order."""
    partitions: dict[frozenset[frozenset[int]], tuple[int, ...]] = {}

    def collect(cs):
        key = frozenset(
            frozenset(i for i, c in enumerate(cs) if c == label) for label in (1, 2, 3)
        )
        partitions.setdefault(key, cs)

    colors = [0] * len(p.faces)
    _color_backtrack(p.adjacency, colors, 0, collect, False)
    return sorted(partitions.values())


# --- catalog ----------------------------------------------------------------

def _prism_faces(k: int) -> list[list[int]]:
    top = list(range(k))
    bottom = list(range(k, 2 * k))
    sides = [[i, (i + 1) % k, k + (i + 1) % k, k + i] for i in range(k)]
    return [top, bottom] + sides

def _octahedron_rotations() -> tuple[dict[int, list[int]], list[tuple[int, int, int]]]:
    # vertices: 0:+x 1:-x 2:+y 3:-y 4:+z 5:-z; neighbors listed in rotation
    # order, so consecutive neighbors share a triangle with the vertex
    rot = {
        0: [2, 4, 3, 5],
        1: [2, 5, 3, 4],
        2: [0, 5, 1, 4],
        3: [0, 4, 1, 5],
        4: [0, 2, 1, 3],
        5: [0, 3, 1, 2],
    }
    triangles = []
    for sx in (0, 1):
        for sy in (2, 3):
            for sz in (4, 5):
                triangles.append((sx, sy, sz))
    return rot, triangles


def _truncated_octahedron_faces() -> list[list[int]]:
    """Truncate every octahedron vertex: squares from vertices, hexagons
    from triangles; new vertices are (vertex, incident edge) flags."""
    rot, triangles = _octahedron_rotations()
    ids: dict[tuple[int, frozenset[int]], int] = {}
    edges = sorted(
        {frozenset((v, w)) for v, nbrs in rot.items() for w in nbrs},
        key=sorted,
    )
    for e in edges:
        for v in sorted(e):
            ids[(v, e)] = len(ids)

    squares = []
    for v in range(6):
        squares.append([ids[(v, frozenset((v, w)))] for w in rot[v]])
    hexagons = []
    for a, b, c in triangles:
        eab, ebc, eca = frozenset((a, b)), frozenset((b, c)), frozenset((c, a))
        hexagons.append(
            [ids[(a, eab)], ids[(b, eab)], ids[(b, ebc)],
             ids[(c, ebc)], ids[(c, eca)], ids[(a, eca)]]
        )
    return squares + hexagons


CATALOG_NAMES = ("prism", "cube", "truncated-octahedron")


def catalog(name: str, parameter: Optional[int] = None) -> PlanarPolytope:
    """Built-in instances: prism:k (even k >= 4), cube, truncated-octahedron."""
    if name == "prism":
        if parameter is None:
            raise BadParameters("prism needs a parameter k, e.g. prism:6")
        k = int(parameter)
        if k < 4:
            raise BadParameters(f"prism parameter must be >= 4, got {k}")
        if k % 2 != 0:
            raise OddPrism(f"prism over an odd {k}-gon is not 3-face-colorable")
        return validate(_prism_faces(k))
    if parameter is not None:
        raise BadParameters(f"catalog entry {name!r} takes no parameter")
    if name == "cube":
        return validate(_prism_faces(4))
    if name == "truncated-octahedron":
        return validate(_truncated_octahedron_faces())
    raise UnknownName(f"unknown catalog name {name!r}; choose from {CATALOG_NAMES}")


# --- Hamiltonicity ----------------------------------------------------------

HAMILTON_VERTEX_CAP = 30


def hamiltonian_cycle(p: PlanarPolytope) -> Optional[list[int]]:
    """Exhaustive backtracking search for a Hamiltonian cycle on the
    1-skeleton; returns the cycle as a vertex sequence, or None."""
    V = p.num_vertices
    if V > HAMILTON_VERTEX_CAP:
        raise TooLarge(f"{V} vertices exceeds the cap of {HAMILTON_VERTEX_CAP}")
    nbrs = p.skeleton()
    path = [0]
    visited = [False] * V
    visited[0] = True

    def extend() -> bool:
        u = path[-1]
        if len(path) == V:
            return 0 in nbrs[u]
        for w in nbrs[u]:
            if not visited[w]:
                visited[w] = True
                path.append(w)
                if extend():
                    return True
                path.pop()
                visited[w] = False
        return False

    return list(path) if extend() else None
