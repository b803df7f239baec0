"""Eulerian paths, initial-product-preserving permutations, basic swaps, parity.

Permutations act on positions: ``pi(m)`` places the factor found at
position ``pi[j]`` of ``m`` into position ``j`` (1-based). A permutation is
initial product preserving (IPP) for ``m`` when every factor sees the same
prefix product in ``pi(m)`` as in ``m``; equivalently the edge labels of
``pi(m)`` trace another Eulerian path from the identity in ``m``'s graph.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .errors import ResourceCapError
from .groups import FiniteGroup
from .monomials import Monomial, MonomialGraph, build_graph

DEFAULT_DEGREE_CAP = 12
DEFAULT_WORD_CAP = 200_000


class Permutation:
    """A bijection on 1..n stored as its image sequence (pi(1), ..., pi(n))."""

    __slots__ = ("images", "__dict__")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation{self.images}"

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for j, i in enumerate(self.images, 1):
            inv[i - 1] = j
        return Permutation(inv)

    def compose(self, other: Permutation) -> Permutation:
        """self o other, so that m.permuted(self).permuted(other) == m.permuted(self o other)."""
        return Permutation(self.images[o - 1] for o in other.images)

    @cached_property
    def sign(self) -> int:
        return permutation_sign(self.images)

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.images, 1))


def permutation_sign(images: Sequence[int]) -> int:
    """Sign by cycle decomposition: (-1)^(n - #cycles)."""
    n = len(images)
    seen = [False] * n
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = images[j] - 1
    return -1 if (n - cycles) % 2 else 1


def _images(pi) -> tuple[int, ...]:
    return pi.images if isinstance(pi, Permutation) else tuple(pi)


def is_ipp(m: Monomial, pi: Permutation | Sequence[int]) -> bool:
    """Direct prefix-product comparison."""
    images = _images(pi)
    if len(images) != m.degree:
        raise ValueError(f"permutation length {len(images)} != degree {m.degree}")
    G = m.group
    orig = m.prefix_products()
    w = m.weights
    acc = 1
    for j, i in enumerate(images, 1):
        acc = G.mul_idx(acc, w[i - 1])
        if acc != orig[i]:
            return False
    return True


def _adjacency(g: MonomialGraph) -> dict[int, list[tuple[int, int]]]:
    adj: dict[int, list[tuple[int, int]]] = {}
    for lab, (src, dst) in sorted(g.edges.items()):
        adj.setdefault(src, []).append((lab, dst))
    return adj


def _walks(adj, used, vertex, remaining, trail) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield tuple(trail)
        return
    for lab, dst in adj.get(vertex, ()):
        if lab in used:
            continue
        used.add(lab)
        trail.append(lab)
        yield from _walks(adj, used, dst, remaining - 1, trail)
        trail.pop()
        used.discard(lab)


def eulerian_paths_from(g: MonomialGraph, start) -> Iterator[tuple[int, ...]]:
    """Every ordering of all edges forming a walk from ``start``, lexicographic by label."""
    start = getattr(start, "index", start)
    return _walks(_adjacency(g), set(), start, len(g.edges), [])


@dataclass
class IppReport:
    monomial: Monomial
    total: int
    even: int
    odd: int
    permutations: list[Permutation] = field(default_factory=list)
    truncated: bool = False

    @property
    def balanced(self) -> bool:
        return self.even == self.odd


def ipp_permutations(m: Monomial, degree_cap: int = DEFAULT_DEGREE_CAP, list_cap: int = 1000) -> IppReport:
    if m.degree > degree_cap:
        raise ResourceCapError("path-enumeration degree cap", degree_cap, m.degree)
    pos_of = {var: j for j, var in enumerate(m.variables, 1)}
    even = odd = 0
    perms = []
    for path in eulerian_paths_from(build_graph(m), 1):
        images = tuple(pos_of[lab] for lab in path)
        if permutation_sign(images) > 0:
            even += 1
        else:
            odd += 1
        if len(perms) < list_cap:
            perms.append(Permutation(images))
    total = even + odd
    return IppReport(m, total, even, odd, perms, truncated=total > len(perms))


def ipp_permutations_bruteforce(m: Monomial) -> list[Permutation]:
    """All IPP permutations by testing each of the n! candidates."""
    return [
        Permutation(p)
        for p in itertools.permutations(range(1, m.degree + 1))
        if is_ipp(m, p)
    ]


# -- basic swaps -----------------------------------------------------------

@dataclass(frozen=True)
class BasicSwap:
    """Exchange of two path segments that both run from vertex g to vertex h.

    Segments are 1-based inclusive position ranges in the monomial the swap is
    applied to, with ``seg1`` entirely before ``seg2``.
    """

    g: int
    h: int
    seg1: tuple[int, int]
    seg2: tuple[int, int]

    def permutation(self, n: int) -> Permutation:
        (a, b), (c, d) = self.seg1, self.seg2
        order = (
            list(range(1, a))
            + list(range(c, d + 1))
            + list(range(b + 1, c))
            + list(range(a, b + 1))
            + list(range(d + 1, n + 1))
        )
        return Permutation(order)

    def apply(self, m: Monomial) -> Monomial:
        return m.permuted(self.permutation(m.degree).images)

    def inverse(self) -> BasicSwap:
        """The swap that undoes this one, expressed on the swapped monomial."""
        (a, b), (c, d) = self.seg1, self.seg2
        return BasicSwap(self.g, self.h, (a, a + d - c), (d - (b - a), d))


def is_basic_swap(m: Monomial, swap: BasicSwap) -> bool:
    (a, b), (c, d) = swap.seg1, swap.seg2
    if not (1 <= a <= b < c <= d <= m.degree):
        return False
    pre = m.prefix_products()
    return pre[a - 1] == pre[c - 1] == swap.g and pre[b] == pre[d] == swap.h


def _apply_ranges(Q: list[int], a: int, b: int, c: int, d: int) -> list[int]:
    # 0-based inclusive ranges
    return Q[:a] + Q[c : d + 1] + Q[b + 1 : c] + Q[a : b + 1] + Q[d + 1 :]


def basic_decomposition(m: Monomial, pi: Permutation | Sequence[int]) -> list[BasicSwap]:
    """Basic swaps s1, ..., sr with m -> s1(m) -> ... -> pi(m).

    Built by moving the first edge of the original path to the front of the
    pi-path with one basic swap, then recursing on the remaining suffix; the
    swaps found that way take pi(m) back to m and are returned inverted.
    """
    images = list(_images(pi))
    n = m.degree
    if not is_ipp(m, images):
        raise ValueError("permutation is not initial product preserving for this monomial")
    pre = m.prefix_products()
    start = {p: pre[p - 1] for p in range(1, n + 1)}
    end = {p: pre[p] for p in range(1, n + 1)}

    Q = images[:]
    back: list[BasicSwap] = []
    for t in range(n):
        b1 = t + 1
        p = Q.index(b1)
        if p == t:
            continue
        v0 = start[b1]
        where = {e: i for i, e in enumerate(Q)}
        if b1 + 1 <= n and where[b1 + 1] < p:
            # the next original edge is reached before edge b1 in the pi-path
            q2 = where[b1 + 1]
            x = q2 - 1 if q2 > t else p - 1
            a, b, c, d = t, x, p, p
        else:
            r = next(
                r for r in range(b1 + 2, n + 1)
                if where[r] < p and where[r - 1] > p
            )
            qr, qr1 = where[r], where[r - 1]
            x = qr - 1 if qr > t else p - 1
            a, b, c, d = t, x, p, qr1
        h = end[Q[b]]
        assert start[Q[a]] == start[Q[c]] == v0 and end[Q[d]] == h
        back.append(BasicSwap(v0, h, (a + 1, b + 1), (c + 1, d + 1)))
        Q = _apply_ranges(Q, a, b, c, d)
        assert Q[t] == b1
    return [s.inverse() for s in reversed(back)]


def compose_swaps(n: int, swaps: Sequence[BasicSwap]) -> Permutation:
    total = Permutation.identity(n)
    for s in swaps:
        total = total.compose(s.permutation(n))
    return total


# -- parity check over weight words -------------------------------------------

@dataclass
class SwanRow:
    word: tuple[int, ...]
    total: int
    even: int
    odd: int


@dataclass
class SwanReport:
    group: str
    k: int
    n: int
    mode: str
    words: int = 0
    asserted: bool = False
    violations: list[SwanRow] = field(default_factory=list)
    rows: list[SwanRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: SwanReport) -> SwanReport:
        return SwanReport(
            self.group, self.k, self.n, self.mode,
            self.words + other.words, self.asserted,
            self.violations + other.violations, self.rows + other.rows,
        )


def _check_words(G: FiniteGroup, n: int, words, keep_rows: bool, degree_cap: int) -> SwanReport:
    asserted = n >= 2 * G.order
    rep = SwanReport(G.label, G.order, n, "", asserted=asserted)
    for word in words:
        r = ipp_permutations(Monomial.from_word(G, word), degree_cap=degree_cap, list_cap=0)
        row = SwanRow(tuple(word), r.total, r.even, r.odd)
        rep.words += 1
        if keep_rows:
            rep.rows.append(row)
        if asserted and (r.even != r.odd or r.total % 2):
            rep.violations.append(row)
    return rep


def swan_check(
    G: FiniteGroup,
    n: int,
    mode: str = "exhaustive",
    sample_size: int = 1000,
    seed: int = 0,
    keep_rows: bool = False,
    word_cap: int = DEFAULT_WORD_CAP,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    workers: int = 1,
) -> SwanReport:
    """Tally IPP parities for x[1,g1]...x[n,gn] over all (or sampled) weight words.

    Balance is asserted only for n >= 2|G|.
    """
    k = G.order
    if mode == "exhaustive":
        if k**n > word_cap:
            raise ResourceCapError("weight-word cap", word_cap, k**n)
        words = itertools.product(range(1, k + 1), repeat=n)
    elif mode == "sample":
        if sample_size > word_cap:
            raise ResourceCapError("weight-word cap", word_cap, sample_size)
        rng = random.Random(seed)
        words = [tuple(rng.randint(1, k) for _ in range(n)) for _ in range(sample_size)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if workers > 1:
        words = list(words)
        size = -(-len(words) // workers)
        chunks = [words[i : i + size] for i in range(0, len(words), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_check_words, *zip(*[(G, n, c, keep_rows, degree_cap) for c in chunks])))
        rep = parts[0]
        for part in parts[1:]:
            rep = rep.merge(part)
    else:
        rep = _check_words(G, n, words, keep_rows, degree_cap)
    rep.mode = mode
    return rep
