"""The maps T_l^k, S_l^k and general p-polynomials over GF(p^n).

    T_l^k(X) = sum_{i < k/l} X^(p^(l*i))
    S_l^k(X) = sum_{i < k/l} (-1)^i X^(p^(l*i))

Frobenius exponents are reduced mod n, so k may exceed or fail to divide n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable

from .errors import NotADivisor, SpecMismatch
from .ffcore import FieldElement, FieldSpec, frob_pow
from .linalg import ZpMatrix

FieldMap = Callable[[FieldElement], FieldElement]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class EquationParams:
    """(p, n, k, l) together with d = (n,k), e = (n,l), L = [d,l] and case flags."""

    p: int
    n: int
    k: int
    l: int

    def __post_init__(self):
        if min(self.n, self.k, self.l) < 1:
            raise ValueError("n, k, l must be positive")
        if self.k % self.l:
            raise NotADivisor(f"l={self.l} does not divide k={self.k}")

    @property
    def d(self) -> int:
        return gcd(self.n, self.k)

    @property
    def e(self) -> int:
        return gcd(self.n, self.l)

    @property
    def L(self) -> int:
        return lcm(self.d, self.l)

    @property
    def k_over_L(self) -> int:
        return self.k // self.L

    @property
    def p_divides_kL(self) -> bool:
        return self.k_over_L % self.p == 0

    @property
    def kl_even(self) -> bool:
        return (self.k // self.l) % 2 == 0

    @property
    def de_even(self) -> bool:
        return (self.d // self.e) % 2 == 0

    @property
    def nd_even(self) -> bool:
        return (self.n // self.d) % 2 == 0

    def as_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "k": self.k, "l": self.l,
                "d": self.d, "e": self.e, "L": self.L}


def _check_ratio(l: int, k: int) -> int:
    if l < 1 or k < 1 or k % l:
        raise NotADivisor(f"{l} does not divide {k}")
    return k // l


def eval_T(x: FieldElement, l: int, k: int) -> FieldElement:
    terms = _check_ratio(l, k)
    out = x
    for i in range(1, terms):
        out = out + frob_pow(x, l * i)
    return out


def eval_S(x: FieldElement, l: int, k: int) -> FieldElement:
    terms = _check_ratio(l, k)
    out = x
    for i in range(1, terms):
        y = frob_pow(x, l * i)
        out = out - y if i % 2 else out + y
    return out


def T(l: int, k: int) -> FieldMap:
    """T_l^k as a callable map."""
    _check_ratio(l, k)
    return lambda x: eval_T(x, l, k)


def S(l: int, k: int) -> FieldMap:
    """S_l^k as a callable map."""
    _check_ratio(l, k)
    return lambda x: eval_S(x, l, k)


def family_map(family: str, l: int, k: int) -> FieldMap:
    if family == "T":
        return T(l, k)
    if family == "S":
        return S(l, k)
    raise ValueError(f"unknown family {family!r}")


def compose_maps(*maps: FieldMap) -> FieldMap:
    """compose_maps(f, g, h)(x) == f(g(h(x)))."""

    def composed(x):
        for f in reversed(maps):
            x = f(x)
        return x

    return composed


@dataclass(frozen=True)
class LinearizedPoly:
    """X -> sum_i coeffs[i] * X^(p^i)."""

    spec: FieldSpec
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        for c in self.coeffs:
            if c.spec != self.spec:
                raise SpecMismatch("coefficient from a different field")

    @classmethod
    def from_exponents(cls, spec: FieldSpec, terms: dict[int, FieldElement | int]) -> LinearizedPoly:
        """Build from {i: a_i}, folding i mod n."""
        coeffs = [spec.zero()] * spec.n
        for i, a in terms.items():
            coeffs[i % spec.n] = coeffs[i % spec.n] + (spec(a) if isinstance(a, int) else a)
        return cls(spec, tuple(coeffs))

    @classmethod
    def identity(cls, spec: FieldSpec) -> LinearizedPoly:
        return cls(spec, (spec.one(),))

    @classmethod
    def of_T(cls, spec: FieldSpec, l: int, k: int) -> LinearizedPoly:
        terms = _check_ratio(l, k)
        coeffs = [0] * spec.n
        for i in range(terms):
            coeffs[l * i % spec.n] += 1
        return cls(spec, tuple(spec(c) for c in coeffs))

    @classmethod
    def of_S(cls, spec: FieldSpec, l: int, k: int) -> LinearizedPoly:
        terms = _check_ratio(l, k)
        coeffs = [0] * spec.n
        for i in range(terms):
            coeffs[l * i % spec.n] += -1 if i % 2 else 1
        return cls(spec, tuple(spec(c) for c in coeffs))

    def __call__(self, x: FieldElement) -> FieldElement:
        return eval_general(self, x)


def eval_general(poly: LinearizedPoly, x: FieldElement) -> FieldElement:
    if x.spec != poly.spec:
        raise SpecMismatch("point and polynomial live in different fields")
    out = x.spec.zero()
    for i, a in enumerate(poly.coeffs):
        if a:
            out = out + a * frob_pow(x, i)
    return out


def compose(outer: LinearizedPoly, inner: LinearizedPoly) -> LinearizedPoly:
    """Coefficients of outer(inner(X)), exponents folded mod n.

    (sum a_i X^(p^i)) o (sum b_j X^(p^j)) = sum_{i,j} a_i b_j^(p^i) X^(p^(i+j)).
    """
    if outer.spec != inner.spec:
        raise SpecMismatch("cannot compose polynomials over different fields")
    spec = outer.spec
    coeffs = [spec.zero()] * spec.n
    for i, a in enumerate(outer.coeffs):
        if not a:
            continue
        for j, b in enumerate(inner.coeffs):
            if b:
                slot = (i + j) % spec.n
                coeffs[slot] = coeffs[slot] + a * frob_pow(b, i)
    return LinearizedPoly(spec, tuple(coeffs))


def as_matrix(fn: FieldMap, spec: FieldSpec) -> ZpMatrix:
    """Z_p-matrix of an F_p-linear map; column j is fn(x^j)."""
    return ZpMatrix.from_columns(spec.p, [fn(b).coeffs for b in spec.basis()])


def apply_matrix(M: ZpMatrix, x: FieldElement) -> FieldElement:
    return x.spec(M @ x.coeffs)

