"""Closed-form kernels of T_l^k and S_l^k restricted to GF(p^n).

Every kernel is produced either as a subfield GF(p^m) or as the image of a
short linearized map over a subfield, then brought to canonical echelon form.
Each branch checks the dimension it predicts before returning.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .errors import InternalConsistencyError, ParamMismatch
from .ffcore import FieldSpec, subfield_basis
from .linalg import Subspace
from .linearized import FieldMap, EquationParams, S, T, compose_maps


class KernelCase(NamedTuple):
    key: str
    description: str
    dim: int


def image_subspace(fn: FieldMap, domain: Subspace) -> Subspace:
    return Subspace.span(domain.spec, [fn(b) for b in domain.basis])


def _check_params(params: EquationParams, spec: FieldSpec) -> None:
    if params.n != spec.n or params.p != spec.p:
        raise ParamMismatch(f"params for GF({params.p}^{params.n}) applied to {spec!r}")


def kernel_T_case(params: EquationParams) -> KernelCase:
    d, e = params.d, params.e
    if params.p_divides_kL:
        return KernelCase("T/p|k/L", "p | k/L: kernel is GF(p^d)", d)
    return KernelCase("T/p!|k/L", "p does not divide k/L: kernel is {x - x^(p^e) : x in GF(p^d)}", d - e)


def kernel_S_case(params: EquationParams) -> KernelCase:
    d, e = params.d, params.e
    if params.p == 2:
        inner = kernel_T_case(params)
        return KernelCase("S/p=2/" + inner.key, "p = 2, S equals T; " + inner.description, inner.dim)
    if params.kl_even:
        if params.de_even:
            if params.p_divides_kL:
                return KernelCase("S/even/de-even/p|k/L", "k/l even, d/e even, p | k/L: kernel is GF(p^d)", d)
            return KernelCase(
                "S/even/de-even/p!|k/L",
                "k/l even, d/e even, p does not divide k/L: kernel is {x + x^(p^e) : x in GF(p^d)}",
                d - e,
            )
        return KernelCase("S/even/de-odd", "k/l even, d/e odd: kernel is GF(p^d)", d)
    if not params.nd_even:
        return KernelCase("S/odd/nd-odd", "k/l odd, n/d odd: kernel is {0}", 0)
    if params.p_divides_kL:
        return KernelCase(
            "S/odd/nd-even/p|k/L",
            "k/l odd, n/d even, p | k/L: kernel is {y - y^(p^d) : y in GF(p^2d)}",
            d,
        )
    return KernelCase(
        "S/odd/nd-even/p!|k/L",
        "k/l odd, n/d even, p does not divide k/L: kernel is S_d^2d(T_e^2e(GF(p^2d)))",
        d - e,
    )


def _checked(result: Subspace, case: KernelCase) -> Subspace:
    if result.dim != case.dim:
        raise InternalConsistencyError(f"{case.key}: kernel has dimension {result.dim}, expected {case.dim}")
    return result


@lru_cache(maxsize=4096)
def kernel_T(params: EquationParams, spec: FieldSpec) -> Subspace:
    _check_params(params, spec)
    case = kernel_T_case(params)
    sub_d = subfield_basis(spec, params.d)
    if params.p_divides_kL:
        return _checked(sub_d, case)
    e = params.e
    return _checked(image_subspace(S(e, 2 * e), sub_d), case)


@lru_cache(maxsize=4096)
def kernel_S(params: EquationParams, spec: FieldSpec) -> Subspace:
    _check_params(params, spec)
    if params.p == 2:
        return kernel_T(params, spec)
    case = kernel_S_case(params)
    d, e = params.d, params.e
    if params.kl_even:
        sub_d = subfield_basis(spec, d)
        if params.de_even and not params.p_divides_kL:
            return _checked(image_subspace(T(e, 2 * e), sub_d), case)
        return _checked(sub_d, case)
    if not params.nd_even:
        return _checked(Subspace.zero(spec), case)
    # n/d even, so GF(p^2d) sits inside GF(p^n)
    sub_2d = subfield_basis(spec, 2 * d)
    if params.p_divides_kL:
        return _checked(image_subspace(S(d, 2 * d), sub_2d), case)
    return _checked(image_subspace(compose_maps(S(d, 2 * d), T(e, 2 * e)), sub_2d), case)


def kernel_for(family: str, params: EquationParams, spec: FieldSpec) -> Subspace:
    if family == "T":
        return kernel_T(params, spec)
    if family == "S":
        return kernel_S(params, spec)
    raise ValueError(f"unknown family {family!r}")


def kernel_case_for(family: str, params: EquationParams) -> KernelCase:
    if family == "T":
        return kernel_T_case(params)
    if family == "S":
        return kernel_S_case(params)
    raise ValueError(f"unknown family {family!r}")
