"""Solvability tests and explicit particular solutions of T_l^k(X) = a and S_l^k(X) = a.

All particular solutions are built from a trace-one element delta
(T_d^n(delta) = 1) and, on some branches, a second element delta1 of the
subfield GF(p^d) with a branch-specific trace condition.  Integer fractions
such as L/k are read in Z_p, which is only done where p cannot divide the
denominator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import InternalConsistencyError, NoSuchElement, NotSolvable, ParamMismatch
from .ffcore import FieldElement, FieldSpec, frob_pow, subfield_basis
from .kernel import kernel_S, kernel_T
from .linalg import Subspace, ZpMatrix, solve_linear
from .linearized import EquationParams, eval_S, eval_T, lcm


def find_trace_one(spec: FieldSpec, m_from: int, m_to: int, domain: Subspace) -> FieldElement:
    """First x of ``domain`` (counting order on basis coordinates) with T_{m_from}^{m_to}(x) = 1.

    The trace condition is an affine system in the coordinates.  Its reduced
    echelon solution with every free coordinate at zero is the smallest one in
    counting order: scanning from the most significant coordinate down, a free
    coordinate can always be 0 and a pivot coordinate is forced by the more
    significant free ones.
    """
    if domain.dim == 0:
        raise NoSuchElement("trace map on the zero subspace")
    cols = [eval_T(b, m_from, m_to).coeffs for b in domain.basis]
    coords = solve_linear(ZpMatrix.from_columns(spec.p, cols), spec.one().coeffs)
    if coords is None:
        raise NoSuchElement(f"T_{m_from}^{m_to} never takes the value 1 on {domain!r}")
    return domain.combination(coords)


@dataclass(frozen=True)
class TraceOneCertificates:
    delta: FieldElement
    delta1: FieldElement | None = None


def _zp_inverse(v: int, p: int) -> int:
    if v % p == 0:
        raise InternalConsistencyError(f"{v} is not invertible mod {p}")
    return pow(v, -1, p)


def _check(params: EquationParams, spec: FieldSpec) -> None:
    if params.n != spec.n or params.p != spec.p:
        raise ParamMismatch(f"params for GF({params.p}^{params.n}) applied to {spec!r}")


def _delta1_trace(family: str, params: EquationParams) -> tuple[int, int] | None:
    """(m_from, m_to) of the trace delta1 must satisfy, or None if unused."""
    e, d = params.e, params.d
    if params.p_divides_kL:
        return None
    if family == "T" or params.p == 2:
        return (e, d)
    if params.kl_even:
        return (2 * e, d) if params.de_even else None
    return (2 * e, 2 * d) if params.nd_even else None


@lru_cache(maxsize=4096)
def certificates(params: EquationParams, spec: FieldSpec, family: str = "T") -> TraceOneCertificates:
    _check(params, spec)
    delta = find_trace_one(spec, params.d, spec.n, Subspace.full(spec))
    trace = _delta1_trace(family, params)
    delta1 = None
    if trace is not None:
        delta1 = find_trace_one(spec, trace[0], trace[1], subfield_basis(spec, params.d))
    return TraceOneCertificates(delta, delta1)


def _double_sum(delta: FieldElement, b: FieldElement, k: int, terms: int, alternating: bool = False) -> FieldElement:
    """sum_{0 <= i < j < terms} delta^(p^(kj)) * b^(p^(ki)) * (+-1)^i."""
    total = b.spec.zero()
    suffix = b.spec.zero()
    for i in range(terms - 2, -1, -1):
        suffix = suffix + frob_pow(delta, k * (i + 1))
        term = frob_pow(b, k * i) * suffix
        total = total - term if alternating and i % 2 else total + term
    return total


# ---------------------------------------------------------------------------
# T_l^k(X) = a


def solvable_T(params: EquationParams, spec: FieldSpec, a: FieldElement) -> bool:
    _check(params, spec)
    t = eval_T(a, params.d, params.n)
    if params.p_divides_kL:
        return not t
    return not eval_S(t, params.e, 2 * params.e)


def particular_T(params: EquationParams, spec: FieldSpec, a: FieldElement,
                 certs: TraceOneCertificates | None = None) -> FieldElement:
    if not solvable_T(params, spec, a):
        raise NotSolvable(f"T_{params.l}^{params.k}(X) = {a} has no solution")
    certs = certs or certificates(params, spec, "T")
    p, k, l = params.p, params.k, params.l
    terms = params.n // params.d
    if params.p_divides_kL:
        return eval_S(_double_sum(certs.delta, a, k, terms), l, 2 * l)
    y0 = _double_sum(certs.delta, eval_S(a, l, 2 * l), k, terms)
    c = _zp_inverse(params.k_over_L, p)
    return y0 + c * ((a - eval_T(y0, l, k)) * certs.delta1)


# ---------------------------------------------------------------------------
# S_l^k(X) = a


def s_branch(params: EquationParams) -> str:
    """Case key shared by solvable_S and particular_S."""
    if params.p == 2:
        return "p=2"
    if params.kl_even:
        if params.de_even and not params.p_divides_kL:
            return "even/de-even/p!|k/L"
        return "even/trace-zero"
    if not params.nd_even:
        return "odd/nd-odd"
    return "odd/nd-even/p|k/L" if params.p_divides_kL else "odd/nd-even/p!|k/L"


def solvable_S(params: EquationParams, spec: FieldSpec, a: FieldElement) -> bool:
    _check(params, spec)
    branch = s_branch(params)
    d, e, n = params.d, params.e, params.n
    if branch == "p=2":
        return solvable_T(params, spec, a)
    if branch == "even/trace-zero":
        return not eval_T(a, d, n)
    if branch == "even/de-even/p!|k/L":
        return not eval_T(eval_T(a, d, n), e, 2 * e)
    if branch == "odd/nd-odd":
        return True
    if branch == "odd/nd-even/p|k/L":
        return not eval_S(a, d, n)
    return not eval_T(eval_S(a, d, n), e, 2 * e)


def particular_S(params: EquationParams, spec: FieldSpec, a: FieldElement,
                 certs: TraceOneCertificates | None = None) -> FieldElement:
    branch = s_branch(params)
    if branch == "p=2":
        return particular_T(params, spec, a, certs)
    if not solvable_S(params, spec, a):
        raise NotSolvable(f"S_{params.l}^{params.k}(X) = {a} has no solution")
    p, n, k, l, d = params.p, params.n, params.k, params.l, params.d
    if branch == "odd/nd-odd":
        # S_l^k is a permutation here and the preimage has a closed form
        return _zp_inverse(2, p) * eval_T(eval_S(a, k, lcm(n, k)), l, 2 * l)
    certs = certs or certificates(params, spec, "S")
    terms = n // d
    if branch == "even/trace-zero":
        return eval_T(_double_sum(certs.delta, a, k, terms), l, 2 * l)
    if branch == "odd/nd-even/p|k/L":
        return eval_T(_double_sum(certs.delta, a, k, terms, alternating=True), l, 2 * l)
    c = _zp_inverse(2 * params.k_over_L, p)
    if branch == "even/de-even/p!|k/L":
        y0 = _double_sum(certs.delta, eval_T(a, l, 2 * l), k, terms)
        return y0 + c * ((a - eval_S(y0, l, k)) * certs.delta1)
    y0 = _double_sum(certs.delta, eval_T(a, l, 2 * l), k, terms, alternating=True)
    return y0 + c * eval_S((a - eval_S(y0, l, k)) * certs.delta1, d, 2 * d)


# ---------------------------------------------------------------------------
# full solution sets


def solvability_condition(family: str, params: EquationParams) -> str:
    """Human-readable form of the test applied to a, with d, e, n filled in."""
    d, e, n = params.d, params.e, params.n
    if family == "T" or params.p == 2:
        if params.p_divides_kL:
            return f"T_{d}^{n}(a) = 0"
        return f"S_{e}^{2 * e}(T_{d}^{n}(a)) = 0"
    branch = s_branch(params)
    return {
        "even/trace-zero": f"T_{d}^{n}(a) = 0",
        "even/de-even/p!|k/L": f"T_{e}^{2 * e}(T_{d}^{n}(a)) = 0",
        "odd/nd-odd": "always solvable (S_l^k permutes the field)",
        "odd/nd-even/p|k/L": f"S_{d}^{n}(a) = 0",
        "odd/nd-even/p!|k/L": f"T_{e}^{2 * e}(S_{d}^{n}(a)) = 0",
    }[branch]


@dataclass(frozen=True)
class SolutionSet:
    """Either no solution, or the coset x0 + kernel.

    Equality compares only the mathematical content (solvable, x0, kernel).
    """

    solvable: bool
    x0: FieldElement | None
    kernel: Subspace
    family: str = field(default="T", compare=False)
    condition: str = field(default="", compare=False)

    @property
    def size(self) -> int:
        return self.kernel.size if self.solvable else 0

    def __contains__(self, x: FieldElement) -> bool:
        return self.solvable and (x - self.x0) in self.kernel

    def elements(self) -> Iterator[FieldElement]:
        if self.solvable:
            for v in self.kernel.elements():
                yield self.x0 + v


def solve(params: EquationParams, spec: FieldSpec, family: str, a: FieldElement) -> SolutionSet:
    if family == "T":
        kernel, ok = kernel_T(params, spec), solvable_T(params, spec, a)
        x0 = particular_T(params, spec, a) if ok else None
    elif family == "S":
        kernel, ok = kernel_S(params, spec), solvable_S(params, spec, a)
        x0 = particular_S(params, spec, a) if ok else None
    else:
        raise ValueError(f"unknown family {family!r}")
    return SolutionSet(ok, x0, kernel, family, solvability_condition(family, params))
