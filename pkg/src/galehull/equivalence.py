"""Combinatorial equivalence of two incidence-vector hulls.

Two hulls are combinatorially equivalent exactly when the underlying
polytopes have the same face count, the same class-size type, and the
same middle class size. The diagram-multiset criterion behind that fact
is already enforced structurally by classify(), so the triple comparison
is complete; the oracle route recomputes both lattices from scratch and
searches for an explicit isomorphism.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .gale import IncidenceSystem, TypeReport
from .oracle import oracle_lattice
from .reference import lattice_isomorphic


def equivalent(
    a: TypeReport,
    fvector_a: Sequence[int],
    b: TypeReport,
    fvector_b: Sequence[int],
) -> bool:
    """Three-condition criterion: same face count, same type, same m2."""
    return (
        fvector_a[2] == fvector_b[2]
        and a.hull_type == b.hull_type
        and a.sorted_sizes[1] == b.sorted_sizes[1]
    )


def equivalent_oracle(a: IncidenceSystem, b: IncidenceSystem) -> bool:
    """True iff the brute-force lattices admit a vertex bijection."""
    return equivalence_witness(a, b) is not None


def equivalence_witness(
    a: IncidenceSystem, b: IncidenceSystem
) -> Optional[dict[int, int]]:
    return lattice_isomorphic(oracle_lattice(a.vectors), oracle_lattice(b.vectors))
