"""Exact rational linear algebra on top of fractions.Fraction.

Matrices are plain sequences of rows; entries may be int or Fraction and
are never floats. Rank runs fraction-free (integer cross-multiplication
with per-row gcd stripping), the null space comes from a canonical RREF
(free columns in increasing index order, so Gale transforms are
reproducible), and a small two-phase simplex provides exact feasibility
tests for relative-interior queries.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .errors import DimensionMismatch

Row = Sequence[Fraction | int]
Point = tuple[Fraction, ...]


def _to_int_rows(rows: Sequence[Row]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in rows:
        if all(isinstance(x, int) for x in row):
            out.append(list(row))
            continue
        fr = [Fraction(x) for x in row]
        mult = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * mult) for x in fr])
    return out


def _strip_gcd(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    return row if g <= 1 else [x // g for x in row]


def rank(rows: Sequence[Row]) -> int:
    """Exact rank over the rationals, fraction-free elimination."""
    if not rows:
        raise ValueError("rank of an empty matrix")
    m = _to_int_rows(rows)
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        pv = pr[c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            if f:
                ri = m[i]
                m[i] = _strip_gcd([pv * ri[j] - f * pr[j] for j in range(ncols)])
        r += 1
        if r == nrows:
            break
    return r


def rref(rows: Sequence[Row]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    R = [[Fraction(x) for x in row] for row in rows]
    nrows, ncols = len(R), len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        pv = R[r][c]
        R[r] = pr = [x / pv for x in R[r]]
        for i in range(nrows):
            f = R[i][c]
            if i != r and f:
                R[i] = [a - f * b for a, b in zip(R[i], pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R, pivots


def null_space_basis(rows: Sequence[Row]) -> list[Point]:
    """Canonical basis of {x : Mx = 0}, one vector per RREF free column."""
    if not rows:
        raise ValueError("null space of an empty matrix")
    R, pivots = rref(rows)
    ncols = len(rows[0])
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r_idx, c in enumerate(pivots):
            v[c] = -R[r_idx][f]
        basis.append(tuple(v))
    return basis


def affine_dimension(points: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank of the difference matrix; -1 for the empty set by convention."""
    if not points:
        return -1
    if len(points) == 1:
        return 0
    p0 = points[0]
    if any(len(p) != len(p0) for p in points):
        raise DimensionMismatch("points of unequal length")
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    return rank(diffs)


def primitive_vector(vec: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Positive scaling of a rational vector to primitive integer form.

    Direction (sign) is preserved; the zero vector maps to itself.
    """
    fr = [Fraction(x) for x in vec]
    if all(x == 0 for x in fr):
        return tuple(0 for _ in fr)
    mult = lcm(*(x.denominator for x in fr))
    ints = [int(x * mult) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def spanning_hyperplane(
    points: Sequence[Sequence[Fraction | int]], ambient_dim: int
) -> Optional[tuple[tuple[int, ...], Fraction]]:
    """Normal and offset of the hyperplane affinely spanned by the points.

    Returns None unless the points span exactly a hyperplane of the ambient
    space. The normal is a primitive integer vector with positive leading
    nonzero entry; normal . p == offset for every input point.
    """
    if not points:
        return None
    for p in points:
        if len(p) != ambient_dim:
            raise DimensionMismatch(
                f"point of length {len(p)} in ambient dimension {ambient_dim}"
            )
    rows = [[Fraction(x) for x in p] + [Fraction(-1)] for p in points]
    basis = null_space_basis(rows)
    if len(basis) != 1:
        return None
    vec = basis[0]
    normal, offset = vec[:ambient_dim], vec[ambient_dim]
    if all(x == 0 for x in normal):
        return None
    prim = primitive_vector(normal)
    base = next(i for i, x in enumerate(normal) if x != 0)
    offset = offset * Fraction(prim[base]) / normal[base]
    if next(x for x in prim if x != 0) < 0:
        prim = tuple(-x for x in prim)
        offset = -offset
    return prim, offset


def dot(u: Sequence[Fraction | int], v: Sequence[Fraction | int]) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def matvec(rows: Sequence[Row], v: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    return tuple(dot(row, v) for row in rows)


# --- exact simplex ---------------------------------------------------------

def simplex_maximize(
    A: Sequence[Row], b: Sequence[Fraction | int], c: Sequence[Fraction | int]
) -> tuple[str, Optional[Fraction], Optional[list[Fraction]]]:
    """Maximize c.x subject to Ax = b, x >= 0, in exact arithmetic.

    Two-phase full-tableau simplex with Bland's rule (no cycling).
    Returns (status, value, x) where status is "optimal", "infeasible"
    or "unbounded".
    """
    m, n = len(A), len(A[0])
    rows = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(m)]
    for i in range(m):
        if rows[i][-1] < 0:
            rows[i] = [-x for x in rows[i]]

    # phase 1: artificial columns n..n+m-1
    T = [
        rows[i][:n]
        + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        + [rows[i][-1]]
        for i in range(m)
    ]
    basis = list(range(n, n + m))
    cost1 = [Fraction(0)] * n + [Fraction(-1)] * m
    _run_simplex(T, basis, cost1)
    if sum(T[i][-1] * cost1[basis[i]] for i in range(m)) != 0:
        return "infeasible", None, None

    # pivot artificials out of the basis, drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] < n:
            keep.append(i)
            continue
        col = next((j for j in range(n) if T[i][j] != 0), None)
        if col is None:
            continue  # redundant constraint
        _pivot(T, basis, i, col)
        keep.append(i)
    T = [[T[i][j] for j in range(n)] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    cost2 = [Fraction(x) for x in c]
    status = _run_simplex(T, basis, cost2)
    if status == "unbounded":
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = T[i][-1]
    return "optimal", dot(cost2, x), x


def _reduced_costs(T, basis, cost):
    m = len(T)
    ncols = len(T[0]) - 1
    red = []
    for j in range(ncols):
        zj = sum(cost[basis[i]] * T[i][j] for i in range(m))
        red.append(cost[j] - zj)
    return red


def _pivot(T, basis, row, col):
    pv = T[row][col]
    T[row] = [x / pv for x in T[row]]
    pr = T[row]
    for i in range(len(T)):
        f = T[i][col]
        if i != row and f:
            T[i] = [a - f * p for a, p in zip(T[i], pr)]
    basis[row] = col


def _run_simplex(T, basis, cost) -> str:
    m = len(T)
    while True:
        red = _reduced_costs(T, basis, cost)
        enter = next((j for j, r in enumerate(red) if r > 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best[0] or (
                    ratio == best[0] and basis[i] < basis[best[1]]
                ):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(T, basis, best[1], enter)
