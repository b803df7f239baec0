"""Sparse commutative polynomials with rational coefficients, and matrices of them.

Only what the symbolic identity oracle needs: exact +, -, *, scaling and
zero tests. Variables are arbitrary hashable keys; a monomial is stored as a
sorted tuple of ``(variable, exponent)`` pairs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable

Mono = tuple  # tuple[tuple[Hashable, int], ...]


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, Fraction] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def var(cls, name: Hashable) -> Poly:
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> Poly:
        return cls({(): Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, a) -> Poly:
        a = Fraction(a)
        return Poly({m: a * c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: repr(t[0])):
            mono = "*".join(f"{v}^{e}" if e > 1 else f"{v}" for v, e in m)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


class SymbolicMatrix:
    """Square matrix of :class:`Poly` entries."""

    __slots__ = ("size", "rows")

    def __init__(self, rows: Iterable[Iterable[Poly]]):
        self.rows = [list(r) for r in rows]
        self.size = len(self.rows)

    @classmethod
    def zeros(cls, k: int) -> SymbolicMatrix:
        return cls([[Poly() for _ in range(k)] for _ in range(k)])

    @classmethod
    def identity(cls, k: int) -> SymbolicMatrix:
        return cls([[Poly.const(1) if i == j else Poly() for j in range(k)] for i in range(k)])

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: SymbolicMatrix) -> SymbolicMatrix:
        return SymbolicMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: SymbolicMatrix) -> SymbolicMatrix:
        return self + other.scale(-1)

    def scale(self, a) -> SymbolicMatrix:
        return SymbolicMatrix([[p.scale(a) for p in r] for r in self.rows])

    def __matmul__(self, other: SymbolicMatrix) -> SymbolicMatrix:
        k = self.size
        out = [[Poly() for _ in range(k)] for _ in range(k)]
        for i in range(k):
            for l in range(k):
                a = self.rows[i][l]
                if not a:
                    continue
                row_b = other.rows[l]
                for j in range(k):
                    if row_b[j]:
                        out[i][j] = out[i][j] + a * row_b[j]
        return SymbolicMatrix(out)

    def is_zero(self) -> bool:
        return all(p.is_zero() for r in self.rows for p in r)

    def nonzero_entries(self) -> list[tuple[int, int]]:
        """1-based (row, column) positions of the nonzero entries."""
        return [(i + 1, j + 1) for i, r in enumerate(self.rows) for j, p in enumerate(r) if p]

    def __eq__(self, other) -> bool:
        if isinstance(other, SymbolicMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __repr__(self) -> str:
        return "SymbolicMatrix(" + repr(self.rows) + ")"
