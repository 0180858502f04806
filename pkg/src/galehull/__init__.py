"""Exact combinatorial analysis of convex hulls of face-vertex incidence
vectors of 3-face-colorable simple 3-polytopes."""

from .equivalence import equivalence_witness, equivalent, equivalent_oracle
from .errors import GalehullError
from .gale import (
    FaceLattice,
    GaleDiagram,
    IncidenceSystem,
    TypeReport,
    classify,
    enumerate_faces,
    fvector,
    gale_transform,
    hull_dimension,
    incidence_system,
    lattice_to_json,
    neighborliness,
    relint_contains_zero,
    simpliciality_check,
)
from .oracle import beyond_facets, oracle_lattice, verify_pyramid_structure
from .pipeline import Analysis, Verification, analyze_polytope, verify_polytope
from .polytopes import (
    FaceColoring,
    PlanarPolytope,
    catalog,
    hamiltonian_cycle,
    three_color,
    validate,
)
from .reference import (
    ReferenceLattice,
    cyclic_facets,
    lattice_isomorphic,
    pyramid,
    tkn_model,
    type4_model,
)

__version__ = "1.0.0"

__all__ = [
    "Analysis",
    "FaceColoring",
    "FaceLattice",
    "GaleDiagram",
    "GalehullError",
    "IncidenceSystem",
    "PlanarPolytope",
    "ReferenceLattice",
    "TypeReport",
    "Verification",
    "analyze_polytope",
    "beyond_facets",
    "catalog",
    "classify",
    "cyclic_facets",
    "enumerate_faces",
    "equivalence_witness",
    "equivalent",
    "equivalent_oracle",
    "fvector",
    "gale_transform",
    "hamiltonian_cycle",
    "hull_dimension",
    "incidence_system",
    "lattice_isomorphic",
    "lattice_to_json",
    "neighborliness",
    "oracle_lattice",
    "pyramid",
    "relint_contains_zero",
    "simpliciality_check",
    "three_color",
    "tkn_model",
    "type4_model",
    "validate",
    "verify_polytope",
    "verify_pyramid_structure",
]
