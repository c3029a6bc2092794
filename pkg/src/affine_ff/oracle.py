"""Ground truth for linear maps on GF(p^n), independent of the closed forms.

Two routes: the n x n Z_p-matrix of the map with Gaussian elimination, and,
for small fields, brute-force enumeration of every element.
"""

from __future__ import annotations

from collections import defaultdict

from .ffcore import ENUMERATION_CAP, FieldElement, FieldSpec, enumerate_field
from .linalg import Subspace, ZpMatrix, nullspace, solve_linear  # noqa: F401  (re-exported)
from .linearized import FieldMap, as_matrix


def kernel(fn: FieldMap, spec: FieldSpec) -> Subspace:
    """Kernel by Gaussian elimination on the map's matrix."""
    return Subspace.span(spec, [spec(v) for v in nullspace(as_matrix(fn, spec))])


def preimage(fn: FieldMap, spec: FieldSpec, a: FieldElement, matrix: ZpMatrix | None = None) -> FieldElement | None:
    """One solution of fn(x) = a, or None."""
    M = matrix if matrix is not None else as_matrix(fn, spec)
    v = solve_linear(M, a.coeffs)
    return None if v is None else spec(v)


def exhaustive_solve(fn: FieldMap, spec: FieldSpec, a: FieldElement, cap: int = ENUMERATION_CAP) -> set[FieldElement]:
    return {x for x in enumerate_field(spec, cap) if fn(x) == a}


def preimage_table(fn: FieldMap, spec: FieldSpec, cap: int = ENUMERATION_CAP) -> dict[FieldElement, set[FieldElement]]:
    """value -> full preimage set, from a single pass over the field."""
    table: dict[FieldElement, set[FieldElement]] = defaultdict(set)
    for x in enumerate_field(spec, cap):
        table[fn(x)].add(x)
    return dict(table)
