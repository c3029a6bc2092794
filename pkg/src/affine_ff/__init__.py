"""Closed-form solution sets of T_l^k(X) = a and S_l^k(X) = a over GF(p^n)."""

from .errors import (
    CapExceeded,
    DivisionByZero,
    FieldError,
    InternalConsistencyError,
    NoSuchElement,
    NotADivisor,
    NotIrreducible,
    NotPrime,
    NotSolvable,
    ParamMismatch,
    SpecMismatch,
)
from .ffcore import (
    FieldElement,
    FieldSpec,
    enumerate_field,
    frob_pow,
    inv,
    is_irreducible,
    make_field,
    scalar_mul,
    subfield_basis,
)
from .kernel import image_subspace, kernel_S, kernel_T
from .linalg import Subspace, ZpMatrix
from .linearized import (
    EquationParams,
    LinearizedPoly,
    as_matrix,
    compose,
    eval_general,
    eval_S,
    eval_T,
)
from .solver import (
    SolutionSet,
    TraceOneCertificates,
    certificates,
    find_trace_one,
    particular_S,
    particular_T,
    solvable_S,
    solvable_T,
    solve,
)

__all__ = [
    "CapExceeded", "DivisionByZero", "FieldError", "InternalConsistencyError",
    "NoSuchElement", "NotADivisor", "NotIrreducible", "NotPrime", "NotSolvable",
    "ParamMismatch", "SpecMismatch",
    "FieldElement", "FieldSpec", "enumerate_field", "frob_pow", "inv",
    "is_irreducible", "make_field", "scalar_mul", "subfield_basis",
    "image_subspace", "kernel_S", "kernel_T",
    "Subspace", "ZpMatrix",
    "EquationParams", "LinearizedPoly", "as_matrix", "compose", "eval_general",
    "eval_S", "eval_T",
    "SolutionSet", "TraceOneCertificates", "certificates", "find_trace_one",
    "particular_S", "particular_T", "solvable_S", "solvable_T", "solve",
]
