"""Exact linear algebra over Z_p and canonical F_p-subspaces of GF(p^n).

A subspace is stored by the reduced row echelon form of its spanning
vectors: leading coefficient 1, pivots left to right, every pivot column
cleared elsewhere.  Two subspaces are equal iff their stored bases are.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import SpecMismatch
from .ffcore import FieldElement, FieldSpec

Vector = tuple[int, ...]


@dataclass(frozen=True)
class ZpMatrix:
    p: int
    rows: tuple[Vector, ...]

    def __post_init__(self):
        width = {len(r) for r in self.rows}
        if len(width) > 1:
            raise ValueError("ragged matrix")
        for r in self.rows:
            for v in r:
                if not 0 <= v < self.p:
                    raise ValueError(f"entry {v} not reduced mod {self.p}")

    @classmethod
    def from_rows(cls, p: int, rows: Iterable[Sequence[int]]) -> ZpMatrix:
        return cls(p, tuple(tuple(v % p for v in r) for r in rows))

    @classmethod
    def from_columns(cls, p: int, cols: Sequence[Sequence[int]]) -> ZpMatrix:
        return cls.from_rows(p, zip(*cols)) if cols else cls(p, ())

    @classmethod
    def identity(cls, p: int, n: int) -> ZpMatrix:
        return cls(p, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> ZpMatrix:
        return cls(p, tuple((0,) * cols for _ in range(rows)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def columns(self) -> list[Vector]:
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def __matmul__(self, v: Sequence[int]) -> Vector:
        p = self.p
        return tuple(sum(a * b for a, b in zip(r, v)) % p for r in self.rows)

    def rank(self) -> int:
        return len(rref(self.rows, self.p)[1])


def rref(rows: Iterable[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[v % p for v in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(top, len(m)) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[top], m[pivot_row] = m[pivot_row], m[top]
        inv = pow(m[top][col], -1, p)
        m[top] = [v * inv % p for v in m[top]]
        for i in range(len(m)):
            if i != top and m[i][col]:
                c = m[i][col]
                m[i] = [(a - c * b) % p for a, b in zip(m[i], m[top])]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return m[:top], pivots


def nullspace_vectors(M: ZpMatrix) -> list[Vector]:
    """One vector per free column: e_f minus the pivot-row entries in column f."""
    p, ncols = M.p, M.ncols
    rows, pivots = rref(M.rows, p)
    free = [j for j in range(ncols) if j not in pivots]
    out = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, pc in zip(rows, pivots):
            v[pc] = -r[f] % p
        out.append(tuple(v))
    return out


def canonical_basis(vectors: Iterable[Sequence[int]], p: int) -> list[Vector]:
    return [tuple(r) for r in rref(vectors, p)[0]]


def nullspace(M: ZpMatrix) -> list[Vector]:
    """Canonical echelon basis of {v : Mv = 0}."""
    return canonical_basis(nullspace_vectors(M), M.p)


def solve_linear(M: ZpMatrix, b: Sequence[int]) -> Vector | None:
    """Some v with Mv = b (free variables set to 0), or None if inconsistent."""
    p, ncols = M.p, M.ncols
    if len(b) != M.nrows:
        raise ValueError("right-hand side has the wrong length")
    aug = [list(r) + [bi % p] for r, bi in zip(M.rows, b)]
    rows, pivots = rref(aug, p)
    if pivots and pivots[-1] == ncols:
        return None
    v = [0] * ncols
    for r, pc in zip(rows, pivots):
        v[pc] = r[ncols]
    return tuple(v)


@dataclass(frozen=True)
class Subspace:
    """An F_p-subspace of GF(p^n) held in canonical echelon form."""

    spec: FieldSpec
    basis: tuple[FieldElement, ...]

    @classmethod
    def span(cls, spec: FieldSpec, elements: Iterable[FieldElement]) -> Subspace:
        vecs = []
        for x in elements:
            if x.spec != spec:
                raise SpecMismatch("element from a different field")
            vecs.append(x.coeffs)
        return cls(spec, tuple(spec(v) for v in canonical_basis(vecs, spec.p)))

    @classmethod
    def zero(cls, spec: FieldSpec) -> Subspace:
        return cls(spec, ())

    @classmethod
    def full(cls, spec: FieldSpec) -> Subspace:
        return cls(spec, tuple(spec.basis()))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.spec.p**self.dim

    def __contains__(self, x: FieldElement) -> bool:
        if not self.basis:
            return not x
        vecs = [b.coeffs for b in self.basis] + [x.coeffs]
        return len(rref(vecs, self.spec.p)[1]) == self.dim

    def combination(self, coords: Sequence[int]) -> FieldElement:
        out = self.spec.zero()
        for c, b in zip(coords, self.basis):
            if c:
                out = out + c * b
        return out

    def elements(self) -> Iterator[FieldElement]:
        """All p^dim elements in base-p counting order on basis coordinates."""
        for digits in itertools.product(range(self.spec.p), repeat=self.dim):
            yield self.combination(digits[::-1])

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis=[{'; '.join(str(b) for b in self.basis)}])"
