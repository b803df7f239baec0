"""Strongly multilinear monomials, their graphs, and graded polynomials.

A monomial ``x[i1,g1] x[i2,g2] ... x[in,gn]`` has pairwise distinct variable
indices. Its graph has one vertex per group element and, for each factor j,
an edge labelled ``i_j`` from the prefix product ``g1...g(j-1)`` to
``g1...gj``. Reading the edges in monomial order is an Eulerian path from
the identity.

Weights are stored as 1-based element indices of the owning group.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GroupMismatchError, ParseError
from .groups import FiniteGroup, GroupElement


def _check_group(a: FiniteGroup, b: FiniteGroup) -> None:
    if a is not b and a != b:
        raise GroupMismatchError(f"{a!r} vs {b!r}")


class Monomial:
    __slots__ = ("group", "factors", "_hash")

    def __init__(self, group: FiniteGroup, factors: Iterable[tuple[int, int | GroupElement]]):
        facs = []
        seen = set()
        for var, w in factors:
            if isinstance(w, GroupElement):
                _check_group(group, w.group)
                w = w.index
            var, w = int(var), int(w)
            if var < 1:
                raise ValueError(f"variable index must be positive, got {var}")
            if not 1 <= w <= group.order:
                raise ValueError(f"weight index {w} outside 1..{group.order}")
            if var in seen:
                raise ValueError(f"repeated variable index {var}")
            seen.add(var)
            facs.append((var, w))
        self.group = group
        self.factors = tuple(facs)
        self._hash = hash(self.factors)

    @classmethod
    def from_word(cls, group: FiniteGroup, weights: Sequence[int | GroupElement]) -> Monomial:
        """``x[1,w1] x[2,w2] ... x[n,wn]``."""
        return cls(group, enumerate(weights, 1))

    @property
    def degree(self) -> int:
        return len(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.factors)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.factors)

    def weight_elements(self) -> list[GroupElement]:
        return [GroupElement(self.group, w) for w in self.weights]

    def prefix_products(self) -> tuple[int, ...]:
        """Vertices visited by the path: (e, g1, g1g2, ..., g1...gn)."""
        G = self.group
        out = [1]
        for _, w in self.factors:
            out.append(G.mul_idx(out[-1], w))
        return tuple(out)

    def total_product(self) -> int:
        return self.group.product_idx(self.weights)

    def permuted(self, perm: Sequence[int]) -> Monomial:
        """pi(m): the factor at 1-based position perm[j-1] moves to position j."""
        if sorted(perm) != list(range(1, len(self.factors) + 1)):
            raise ValueError(f"{list(perm)} is not a permutation of 1..{len(self.factors)}")
        return Monomial(self.group, (self.factors[p - 1] for p in perm))

    def variable_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.factors)

    def render(self) -> str:
        G = self.group
        return " ".join(f"x[{v},{G.name_of(w)}]" for v, w in self.factors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.factors == other.factors and (self.group is other.group or self.group == other.group)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({self.render() or '1'})"


class MonomialGraph:
    """Vertices are all group elements; ``edges`` maps label -> (src, dst) indices."""

    __slots__ = ("group", "edges")

    def __init__(self, group: FiniteGroup, edges: dict[int, tuple[int, int]]):
        self.group = group
        self.edges = dict(sorted(edges.items()))

    def weight(self, label: int) -> int:
        src, dst = self.edges[label]
        return self.group.mul_idx(self.group.inv_idx(src), dst)

    @property
    def labels(self) -> list[int]:
        return list(self.edges)

    def out_degree(self) -> list[int]:
        deg = [0] * (self.group.order + 1)
        for src, _ in self.edges.values():
            deg[src] += 1
        return deg

    def in_degree(self) -> list[int]:
        deg = [0] * (self.group.order + 1)
        for _, dst in self.edges.values():
            deg[dst] += 1
        return deg

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialGraph):
            return NotImplemented
        return graphs_equal(self, other)

    def __hash__(self) -> int:
        return hash(tuple(self.edges.items()))

    def __repr__(self) -> str:
        G = self.group
        body = ", ".join(f"{lab}:({G.name_of(s)},{G.name_of(d)})" for lab, (s, d) in self.edges.items())
        return f"MonomialGraph({{{body}}})"


def build_graph(m: Monomial) -> MonomialGraph:
    G = m.group
    edges = {}
    cur = 1
    for var, w in m.factors:
        nxt = G.mul_idx(cur, w)
        edges[var] = (cur, nxt)
        cur = nxt
    return MonomialGraph(G, edges)


def graphs_equal(a: MonomialGraph, b: MonomialGraph) -> bool:
    _check_group(a.group, b.group)
    return a.edges == b.edges


def equivalent(m: Monomial, r: Monomial) -> bool:
    """True iff r is a reordering of m's factors with the same graph."""
    _check_group(m.group, r.group)
    if sorted(m.factors) != sorted(r.factors):
        return False
    return graphs_equal(build_graph(m), build_graph(r))


def export_dot(g: MonomialGraph, name: str = "monomial") -> str:
    G = g.group
    lines = [f"digraph {name} {{"]
    for i in range(1, G.order + 1):
        lines.append(f'  v{i} [label="{G.name_of(i)}"];')
    for lab, (src, dst) in g.edges.items():
        lines.append(f'  v{src} -> v{dst} [label="{lab} ({G.name_of(g.weight(lab))})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


class GradedPolynomial:
    """Rational linear combination of strongly multilinear monomials over one group."""

    __slots__ = ("group", "terms")

    def __init__(self, group: FiniteGroup, terms: Iterable[tuple[Fraction | int, Monomial]] = ()):
        acc: dict[Monomial, Fraction] = {}
        for coeff, mono in terms:
            _check_group(group, mono.group)
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coeff)
        self.group = group
        self.terms = tuple((c, m) for m, c in acc.items() if c != 0)

    @classmethod
    def from_monomial(cls, m: Monomial, coeff=1) -> GradedPolynomial:
        return cls(m.group, [(coeff, m)])

    def __add__(self, other: GradedPolynomial) -> GradedPolynomial:
        _check_group(self.group, other.group)
        return GradedPolynomial(self.group, self.terms + other.terms)

    def __neg__(self) -> GradedPolynomial:
        return GradedPolynomial(self.group, [(-c, m) for c, m in self.terms])

    def __sub__(self, other: GradedPolynomial) -> GradedPolynomial:
        return self + (-other)

    def scale(self, a) -> GradedPolynomial:
        a = Fraction(a)
        return GradedPolynomial(self.group, [(a * c, m) for c, m in self.terms])

    def __rmul__(self, a) -> GradedPolynomial:
        return self.scale(a)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((m.degree for _, m in self.terms), default=0)

    def variables(self) -> set[int]:
        return {v for _, m in self.terms for v in m.variables}

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (c, m) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = m.render() if a == 1 else f"{a} {m.render()}"
            if i == 0:
                parts.append(body if sign == "+" else f"- {body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return dict((m, c) for c, m in self.terms) == dict((m, c) for c, m in other.terms)

    def __repr__(self) -> str:
        return f"GradedPolynomial({self.render()})"


# -- parsing ------------------------------------------------------------------

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, s: str) -> None:
        self.skip()
        if not self.text.startswith(s, self.pos):
            raise ParseError(self.text, self.pos, f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(self.text, start, "expected an integer")
        return int(self.text[start : self.pos])

    def name(self) -> tuple[str, int]:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            raise ParseError(self.text, start, "expected an element name")
        return self.text[start : self.pos], start

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)


def _parse_factors(sc: _Scanner, G: FiniteGroup) -> Monomial:
    factors = []
    seen = {}
    while sc.peek() == "x":
        start = sc.pos
        sc.expect("x")
        sc.expect("[")
        var_pos = sc.pos
        var = sc.integer()
        if var < 1:
            raise ParseError(sc.text, var_pos, "variable index must be positive")
        sc.expect(",")
        name, name_pos = sc.name()
        try:
            w = G.index_of(name)
        except KeyError:
            raise ParseError(sc.text, name_pos, f"unknown element name {name!r}") from None
        sc.expect("]")
        if var in seen:
            raise ParseError(sc.text, start, f"repeated index {var}")
        seen[var] = True
        factors.append((var, w))
    if not factors:
        raise ParseError(sc.text, sc.pos, "expected a factor x[i,g]")
    return Monomial(G, factors)


def parse_monomial(text: str, G: FiniteGroup) -> Monomial:
    sc = _Scanner(text)
    m = _parse_factors(sc, G)
    if not sc.at_end():
        raise ParseError(text, sc.pos, "unexpected trailing input")
    return m


def parse_polynomial(text: str, G: FiniteGroup) -> GradedPolynomial:
    sc = _Scanner(text)
    terms = []
    sign = 1
    first = True
    while True:
        ch = sc.peek()
        if ch in "+-" and ch:
            sc.pos += 1
            sign = 1 if ch == "+" else -1
        elif not first:
            raise ParseError(text, sc.pos, "expected '+' or '-' between terms")
        coeff = Fraction(1)
        if sc.peek().isdigit():
            num_pos = sc.pos
            num = sc.integer()
            den = 1
            if sc.peek() == "/":
                sc.pos += 1
                if not sc.peek().isdigit():
                    raise ParseError(text, sc.pos, "malformed rational coefficient")
                den = sc.integer()
                if den == 0:
                    raise ParseError(text, num_pos, "malformed rational coefficient: zero denominator")
            coeff = Fraction(num, den)
            if sc.peek() == "*":
                sc.pos += 1
        terms.append((sign * coeff, _parse_factors(sc, G)))
        first = False
        sign = 1
        if sc.at_end():
            break
    return GradedPolynomial(G, terms)
