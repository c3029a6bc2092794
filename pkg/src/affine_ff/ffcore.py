"""Arithmetic in Z_p and in GF(p^n) = Z_p[x]/(m(x)).

Polynomials over Z_p are plain tuples of residues, lowest degree first, with
no trailing zeros (the zero polynomial is ``()``).  Field elements keep a
fixed-length coefficient vector of length ``n``.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .errors import (
    CapExceeded,
    DivisionByZero,
    NotADivisor,
    NotIrreducible,
    NotPrime,
    SpecMismatch,
)

ENUMERATION_CAP = 2**20

Poly = tuple[int, ...]


# ---------------------------------------------------------------------------
# primes


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, exact for every p < 3.3e24."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def prime_factors(m: int) -> list[int]:
    out = []
    q = 2
    while q * q <= m:
        if m % q == 0:
            out.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# polynomials over Z_p


def poly_trim(f: Sequence[int], p: int) -> Poly:
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly_sub(f: Poly, g: Poly, p: int) -> Poly:
    size = max(len(f), len(g))
    f = list(f) + [0] * (size - len(f))
    for i, c in enumerate(g):
        f[i] -= c
    return poly_trim(f, p)


def poly_mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return poly_trim(out, p)


def poly_divmod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise DivisionByZero("polynomial division by zero")
    r = list(f)
    inv_lead = pow(g[-1], -1, p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    for shift in range(len(f) - len(g), -1, -1):
        c = r[shift + len(g) - 1] * inv_lead % p
        if c:
            q[shift] = c
            for i, b in enumerate(g):
                r[shift + i] = (r[shift + i] - c * b) % p
    return poly_trim(q, p), poly_trim(r, p)


def poly_mod(f: Poly, g: Poly, p: int) -> Poly:
    return poly_divmod(f, g, p)[1]


def poly_gcd(f: Poly, g: Poly, p: int) -> Poly:
    while g:
        f, g = g, poly_mod(f, g, p)
    if f:
        inv_lead = pow(f[-1], -1, p)
        f = tuple(c * inv_lead % p for c in f)
    return f


def poly_powmod(f: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = poly_mod(f, m, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), m, p)
        base = poly_mod(poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test: x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for primes q | n."""
    f = poly_trim(f, p)
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        raise ValueError("is_irreducible expects a monic polynomial of degree >= 1")
    x: Poly = poly_mod((0, 1), f, p)
    # frob[i] = x^(p^i) mod f
    frob = [x]
    for _ in range(n):
        frob.append(poly_powmod(frob[-1], p, f, p))
    if poly_sub(frob[n], x, p):
        return False
    for q in prime_factors(n):
        g = poly_gcd(poly_sub(frob[n // q], x, p), f, p)
        if len(g) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# text format


def parse_digits(text: str, p: int) -> list[int]:
    """Parse ``"1,0,1"`` into ``[1, 0, 1]``; every digit must lie in [0, p)."""
    text = text.strip()
    if not text:
        raise ValueError("empty coefficient string")
    try:
        digits = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed coefficient string {text!r}") from None
    for c in digits:
        if not 0 <= c < p:
            raise ValueError(f"digit {c} out of range for p={p}")
    return digits


def format_digits(coeffs: Sequence[int]) -> str:
    return ",".join(str(c) for c in coeffs)


# ---------------------------------------------------------------------------
# fields


class FieldSpec:
    """The field GF(p^n) built as Z_p[x]/(modulus).

    Immutable after construction. Besides the defining data it holds the
    reduction table for x^n..x^(2n-2) and, for every 0 <= m < n, the images of
    the power basis under x -> x^(p^m).
    """

    __slots__ = ("p", "n", "modulus", "_reduce", "_frob")

    def __init__(self, p: int, n: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        modulus = poly_trim(modulus, p)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise NotIrreducible(f"modulus must be monic of degree {n}")
        if not is_irreducible(modulus, p):
            raise NotIrreducible(f"{format_digits(modulus)} is reducible over Z_{p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "_reduce", self._reduction_table())
        object.__setattr__(self, "_frob", self._frobenius_tables())

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def _reduction_table(self) -> tuple[tuple[int, ...], ...]:
        p, n = self.p, self.n
        rows = []
        for j in range(n, 2 * n - 1):
            mono = (0,) * j + (1,)
            r = poly_mod(mono, self.modulus, p)
            rows.append(tuple(r) + (0,) * (n - len(r)))
        return tuple(rows)

    def _frobenius_tables(self):
        # tables[m][i] = coefficient vector of (x^i)^(p^m); built by iterating
        # the plain p-th power so the tables never depend on anything but pow.
        n = self.n
        basis = [self._pow_vec(tuple(int(i == j) for j in range(n)), 1) for i in range(n)]
        tables = [tuple(basis)]
        current = basis
        for _ in range(1, n):
            current = [self._pow_vec(v, self.p) for v in current]
            tables.append(tuple(current))
        return tuple(tables)

    def _mul_vec(self, a, b):
        p, n = self.p, self.n
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = prod[:n]
        for j, row in enumerate(self._reduce):
            c = prod[n + j] % p
            if c:
                for i, r in enumerate(row):
                    out[i] += c * r
        return tuple(v % p for v in out)

    def _pow_vec(self, a, e: int):
        result = (1,) + (0,) * (self.n - 1)
        while e:
            if e & 1:
                result = self._mul_vec(result, a)
            a = self._mul_vec(a, a)
            e >>= 1
        return result

    # equality is by defining data only
    def _key(self):
        return (self.p, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={format_digits(self.modulus)})"

    @property
    def size(self) -> int:
        return self.p**self.n

    def __call__(self, coeffs: Sequence[int] | int) -> FieldElement:
        """Build an element from a coefficient vector (or a prime-field integer)."""
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise ValueError(f"element has {len(coeffs)} coefficients, field degree is {self.n}")
        coeffs += [0] * (self.n - len(coeffs))
        return FieldElement(self, tuple(c % self.p for c in coeffs))

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.n)

    def one(self) -> FieldElement:
        return self(1)

    def gen(self) -> FieldElement:
        """The class of x, written alpha in docs and tests."""
        if self.n == 1:
            return self(-self.modulus[0])
        return self([0, 1])

    def basis(self) -> list[FieldElement]:
        return [FieldElement(self, tuple(int(i == j) for j in range(self.n))) for i in range(self.n)]

    def parse(self, text: str) -> FieldElement:
        return self(parse_digits(text, self.p))


class FieldElement:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple[int, ...]):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.spec(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec is not self.spec and other.spec != self.spec:
            raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec._mul_vec(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return inv(self) ** (-e)
        return FieldElement(self.spec, self.spec._pow_vec(self.coeffs, e))

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * inv(other)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == self.spec(other).coeffs
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.spec == other.spec

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"FieldElement({format_digits(self.coeffs)})"

    def __str__(self):
        return format_digits(self.coeffs)

    def frob(self, m: int = 1) -> FieldElement:
        return frob_pow(self, m)


def make_field(p: int, n: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Return GF(p^n); without a modulus, pick the smallest monic irreducible.

    "Smallest" compares the lower coefficients as a base-p number with the
    constant term as least significant digit, so GF(8) gets x^3 + x + 1.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is not None:
        return FieldSpec(p, n, modulus)
    for value in range(p**n):
        low = [(value // p**i) % p for i in range(n)]
        f = tuple(low) + (1,)
        if is_irreducible(f, p):
            return FieldSpec(p, n, f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def neg(x: FieldElement) -> FieldElement:
    return -x


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def scalar_mul(c: int, x: FieldElement) -> FieldElement:
    p = x.spec.p
    c %= p
    return FieldElement(x.spec, tuple(c * a % p for a in x.coeffs))


def inv(x: FieldElement) -> FieldElement:
    """Inverse by the extended Euclidean algorithm on (x, modulus)."""
    if not x:
        raise DivisionByZero("0 has no inverse")
    spec = x.spec
    p = spec.p
    r0, r1 = spec.modulus, poly_trim(x.coeffs, p)
    s0, s1 = (), (1,)
    while r1:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
    # r0 is a nonzero constant since the modulus is irreducible
    c = pow(r0[0], -1, p)
    return spec([a * c for a in s0])


def frobenius(x: FieldElement) -> FieldElement:
    """x -> x^p by square-and-multiply."""
    return x ** x.spec.p


def frob_pow(x: FieldElement, m: int) -> FieldElement:
    """x -> x^(p^m); m is reduced mod n first."""
    spec = x.spec
    m %= spec.n
    if m == 0:
        return x
    p, n = spec.p, spec.n
    table = spec._frob[m]
    out = [0] * n
    for c, row in zip(x.coeffs, table):
        if c:
            for i, r in enumerate(row):
                out[i] += c * r
    return FieldElement(spec, tuple(v % p for v in out))


def enumerate_field(spec: FieldSpec, cap: int = ENUMERATION_CAP) -> Iterator[FieldElement]:
    """All p^n elements in base-p counting order (constant term least significant)."""
    if spec.size > cap:
        raise CapExceeded(f"{spec.size} elements exceeds enumeration cap {cap}")
    for digits in itertools.product(range(spec.p), repeat=spec.n):
        yield FieldElement(spec, digits[::-1])


def subfield_basis(spec: FieldSpec, m: int):
    """Canonical basis of GF(p^m) inside GF(p^n): the fixed space of x -> x^(p^m)."""
    from .linalg import Subspace, ZpMatrix, nullspace

    if m < 1 or spec.n % m:
        raise NotADivisor(f"{m} does not divide {spec.n}")
    cols = [frob_pow(b, m) - b for b in spec.basis()]
    sub = nullspace(ZpMatrix.from_columns(spec.p, [c.coeffs for c in cols]))
    result = Subspace.span(spec, [spec(v) for v in sub])
    if result.dim != m:
        raise AssertionError(f"fixed field of Frobenius^{m} has dimension {result.dim}")
    return result
