"""End-to-end analysis and verification pipelines shared by CLI and tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CriterionMismatch, StructureMismatch
from .gale import (
    FaceLattice,
    GaleDiagram,
    IncidenceSystem,
    TypeReport,
    classify,
    enumerate_faces,
    fvector,
    gale_transform,
    incidence_system,
    neighborliness,
    simpliciality_check,
)
from .oracle import beyond_facets, oracle_lattice, verify_pyramid_structure
from .polytopes import FaceColoring, PlanarPolytope, three_color
from .reference import (
    ReferenceLattice,
    cyclic_facets,
    lattice_isomorphic,
    pyramid,
    tkn_model,
    type4_model,
)


@dataclass(frozen=True)
class Analysis:
    polytope: PlanarPolytope
    coloring: FaceColoring
    system: IncidenceSystem
    diagram: GaleDiagram
    report: TypeReport
    lattice: FaceLattice
    hull_fvector: tuple[int, ...]
    simplicial: bool
    neighborly: int


def analyze_polytope(
    p: PlanarPolytope, coloring: Optional[FaceColoring] = None
) -> Analysis:
    """Color, build incidence vectors, classify, and enumerate the hull."""
    c = coloring if coloring is not None else three_color(p)
    s = incidence_system(p, c)
    g = gale_transform(s)
    report = classify(s, g)
    lattice = enumerate_faces(s, g, report)
    return Analysis(
        polytope=p,
        coloring=c,
        system=s,
        diagram=g,
        report=report,
        lattice=lattice,
        hull_fvector=fvector(lattice),
        simplicial=simpliciality_check(lattice, report),
        neighborly=neighborliness(lattice),
    )


def reference_model(report: TypeReport, n: int) -> ReferenceLattice:
    """The predicted lattice for a classified hull."""
    m1, m2, m3 = report.sorted_sizes
    if report.hull_type == "I":
        return tkn_model(n, m2 - 1)
    if report.hull_type == "II":
        return pyramid(cyclic_facets(2 * m2, 2 * m2 - 2), m1)
    if report.hull_type == "III":
        return pyramid(cyclic_facets(2 * m2, 2 * m2 - 2), m3)
    return type4_model(m2)


def _face_diff(a: FaceLattice, b: FaceLattice, limit: int = 12) -> str:
    only_a = [f for f in a.faces if f not in b.faces]
    only_b = [f for f in b.faces if f not in a.faces]
    graded = [
        f for f in a.faces if f in b.faces and a.faces[f] != b.faces[f]
    ]
    parts = []
    if only_a:
        parts.append(f"criterion-only: {sorted(map(sorted, only_a))[:limit]}")
    if only_b:
        parts.append(f"oracle-only: {sorted(map(sorted, only_b))[:limit]}")
    if graded:
        parts.append(f"dimension disagreements: {sorted(map(sorted, graded))[:limit]}")
    return "; ".join(parts) or "identical"


def type_one_checks(analysis: Analysis, oracle: FaceLattice) -> dict:
    """Property suite that must hold for every hull with three distinct
    class sizes: simplicial, oracle-identical, every middle-class vertex
    beyond exactly m2-1 facets of the simplex spanned by the others."""
    report = analysis.report
    if report.hull_type != "I":
        raise ValueError("type I checks apply to type I hulls only")
    m2 = report.sorted_sizes[1]
    if not analysis.simplicial:
        raise StructureMismatch("distinct class sizes demand a simplicial hull")
    if analysis.lattice.faces != oracle.faces:
        raise CriterionMismatch(_face_diff(analysis.lattice, oracle))
    vectors = analysis.system.vectors
    beyond = {}
    for v0 in analysis.system.class_indices(1):
        rest = [vectors[j] for j in range(len(vectors)) if j != v0]
        count = beyond_facets(vectors[v0], rest)
        beyond[v0] = count
        if count != m2 - 1:
            raise StructureMismatch(
                f"middle-class vertex {v0} beyond {count} facets, expected {m2 - 1}"
            )
    # classify() already pinned the (1-k, k, -1) value pattern exactly
    return {
        "simplicial": True,
        "facesMatchOracle": True,
        "beyondCounts": {str(v): c for v, c in sorted(beyond.items())},
        "expectedBeyond": m2 - 1,
        "kRatioVerified": True,
    }


@dataclass(frozen=True)
class Verification:
    analysis: Analysis
    oracle: FaceLattice
    faces_match: bool
    simplicial_agrees: bool
    pyramid_report: Optional[dict]
    neighborliness_matches: Optional[bool]
    type_one_report: Optional[dict]
    reference: ReferenceLattice
    reference_witness: dict[int, int]


def verify_polytope(p: PlanarPolytope) -> Verification:
    """Analysis plus every oracle cross-check; raises on any mismatch."""
    analysis = analyze_polytope(p)
    report = analysis.report
    oracle = oracle_lattice(analysis.system.vectors)

    if analysis.lattice.faces != oracle.faces or analysis.lattice.dim != oracle.dim:
        raise CriterionMismatch(
            "criterion and oracle lattices differ: "
            + _face_diff(analysis.lattice, oracle)
        )
    oracle_simplicial = simpliciality_check(oracle)
    if oracle_simplicial != analysis.simplicial:
        raise StructureMismatch("oracle and criterion disagree on simpliciality")

    pyramid_report = None
    if report.hull_type in ("II", "III"):
        pyramid_report = verify_pyramid_structure(analysis.system, report)

    neighborliness_matches = None
    if report.hull_type == "IV":
        neighborliness_matches = analysis.neighborly == report.sorted_sizes[1] - 1
        if not neighborliness_matches:
            raise StructureMismatch(
                f"neighborliness {analysis.neighborly} != m2-1 = "
                f"{report.sorted_sizes[1] - 1}"
            )

    type_one_report = None
    if report.hull_type == "I":
        type_one_report = type_one_checks(analysis, oracle)

    reference = reference_model(report, analysis.polytope.n)
    witness = lattice_isomorphic(analysis.lattice, reference)
    if witness is None:
        raise StructureMismatch(
            f"hull lattice is not isomorphic to the predicted {report.structure}"
        )

    return Verification(
        analysis=analysis,
        oracle=oracle,
        faces_match=True,
        simplicial_agrees=True,
        pyramid_report=pyramid_report,
        neighborliness_matches=neighborliness_matches,
        type_one_report=type_one_report,
        reference=reference,
        reference_witness=witness,
    )
