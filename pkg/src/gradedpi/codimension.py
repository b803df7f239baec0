"""Exact graph counts behind the graded codimensions c_k(n).

Quantities, all counting digraphs on k labelled vertices (vertex 1 = e) with
n labelled edges:

=========  ==================================================================
m_k(n)     Eulerian path starting at e (weakly connected); equals c_k(n)
p_k(n)     balanced: in-degree = out-degree everywhere
gamma_k(n) Eulerian pseudo-path from e (degree conditions only)
sd_k(n)    pseudo-path from e but not weakly connected
sc_j(n)    exactly j vertices, all touched, connected, path from e
=========  ==================================================================

Everything is exact Python integers. Enumeration is done over edge
multiplicity vectors (one per orbit of edge-label permutations) weighted by
the orbit size, with a literal labelled enumerator kept for cross-checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from pathlib import Path

import numpy as np

from .errors import ResourceCapError
from .groups import FiniteGroup

DEFAULT_ENUM_BUDGET = 50_000_000  # k^(2n) labelled assignments
P_METHODS = ("nested", "multinomial", "recursion1", "split")


# -- balanced counts -------------------------------------------------------

@lru_cache(maxsize=16)
def binomial_row(n: int) -> tuple[int, ...]:
    """(C(n,0), ..., C(n,n)) by the multiplicative recurrence."""
    row = [1]
    for i in range(n):
        row.append(row[-1] * (n - i) // (i + 1))
    return tuple(row)


def _check_kn(k: int, n: int) -> None:
    if k < 1 or n < 0:
        raise ValueError(f"need k >= 1 and n >= 0, got k={k}, n={n}")


def p_nested(k: int, n: int) -> int:
    """Nested sums over n_1, ..., n_(k-1) of products of squared binomials."""
    _check_kn(k, n)

    @lru_cache(maxsize=None)
    def level(depth: int, remaining: int) -> int:
        if depth == k - 1:
            return 1
        return sum(comb(remaining, a) ** 2 * level(depth + 1, remaining - a) for a in range(remaining + 1))

    return level(0, n)


def _partitions(n: int, parts: int, largest: int | None = None):
    """Partitions of n into at most ``parts`` positive parts, non-increasing."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, parts - 1, first):
            yield (first,) + rest


def p_multinomial(k: int, n: int) -> int:
    """Sum of squared multinomials over compositions n_1 + ... + n_k = n.

    Compositions are grouped by their sorted part multiset; each multiset
    contributes (number of distinct arrangements) x multinomial^2.
    """
    _check_kn(k, n)
    nf = factorial(n)
    total = 0
    for part in _partitions(n, k):
        parts = part + (0,) * (k - len(part))
        multi = nf // prod(factorial(a) for a in parts)
        counts = {}
        for a in parts:
            counts[a] = counts.get(a, 0) + 1
        arrangements = factorial(k) // prod(factorial(c) for c in counts.values())
        total += arrangements * multi * multi
    return total


@lru_cache(maxsize=None)
def p_recursion(k: int, n: int) -> int:
    """p_k(n) = sum_i C(n,i)^2 p_(k-1)(i), with p_1 = 1."""
    _check_kn(k, n)
    if k == 1 or n == 0:
        return 1
    row = binomial_row(n)
    return sum(row[i] * row[i] * p_recursion(k - 1, i) for i in range(n + 1))


def p_split(k1: int, k2: int, n: int) -> int:
    """p_(k1+k2)(n) = sum_i C(n,i)^2 p_k1(i) p_k2(n-i)."""
    if k1 < 1 or k2 < 1:
        raise ValueError(f"invalid split ({k1}, {k2}); both parts must be >= 1")
    _check_kn(k1 + k2, n)
    row = binomial_row(n)
    return sum(row[i] * row[i] * p_recursion(k1, i) * p_recursion(k2, n - i) for i in range(n + 1))


def p_balanced(k: int, n: int, method: str = "recursion1", split: tuple[int, int] | None = None) -> int:
    if method == "nested":
        return p_nested(k, n)
    if method == "multinomial":
        return p_multinomial(k, n)
    if method == "recursion1":
        return p_recursion(k, n)
    if method == "split":
        if split is None or sum(split) != k:
            raise ValueError(f"split method needs (k1, k2) with k1 + k2 = {k}, got {split}")
        return p_split(split[0], split[1], n)
    raise ValueError(f"unknown method {method!r}; choose from {P_METHODS}")


def gamma(k: int, n: int) -> int:
    """Pseudo-path count: p_k(n+1) / k, divisibility checked."""
    q, r = divmod(p_recursion(k, n + 1), k)
    if r:
        raise ArithmeticError(f"p_{k}({n + 1}) is not divisible by {k}")
    return q


# -- disconnected / connected decomposition ---------------------------

@lru_cache(maxsize=None)
def sc(j: int, n: int) -> int:
    """Connected graphs on exactly j touched vertices with an Eulerian path from e."""
    _check_kn(j, n)
    if j == 1:
        return 1
    if n == 0:
        return 0
    return m_formula(j, n) - sum(comb(j - 1, l - 1) * sc(l, n) for l in range(1, j))


@lru_cache(maxsize=None)
def sd(k: int, n: int) -> int:
    """Pseudo-path graphs from e whose e-component misses some edges.

    Sum over the e-component's vertex count j and edge count i of
    C(k-1, j-1) C(n, i) sc_j(i) p_(k-j)(n-i).
    """
    _check_kn(k, n)
    total = 0
    for j in range(1, k):
        inner = 0
        for i in range(max(j - 1, 0), n):
            s = sc(j, i)
            if s:
                inner += binomial_row(n)[i] * s * p_recursion(k - j, n - i)
        total += comb(k - 1, j - 1) * inner
    return total


@lru_cache(maxsize=None)
def m_formula(k: int, n: int) -> int:
    _check_kn(k, n)
    if k == 1:
        return 1
    return gamma(k, n) - sd(k, n)


def c2_closed(n: int) -> int:
    """C(2n+1, n) - 2^n + 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n + 1, n) - 2**n + 1


def c2_divincenzo(n: int) -> int:
    """1 + sum_(m=1..n) 2^(n-m) C(n,m) C(m, floor(m/2))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return 1 + sum(2 ** (n - m) * comb(n, m) * comb(m, m // 2) for m in range(1, n + 1))


# -- enumeration ----------------------------------------------------------

@dataclass(frozen=True)
class EnumCounts:
    k: int
    n: int
    balanced: int  # p
    pseudo: int  # gamma
    path: int  # m
    disconnected: int  # sd
    spanning: int  # sc: path graphs touching every vertex

    def as_dict(self) -> dict[str, int]:
        return {"p": self.balanced, "gamma": self.pseudo, "m": self.path, "sd": self.disconnected, "sc": self.spanning}


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _classify(k: int, pairs, n: int):
    """(balanced, pseudo-path from e, weakly connected, touches all) for an edge multiset.

    ``pairs`` iterates (src, dst, multiplicity) with 0-based vertices, 0 = e.
    """
    out = [0] * k
    inn = [0] * k
    parent = list(range(k))
    for s, d, c in pairs:
        if not c:
            continue
        out[s] += c
        inn[d] += c
        rs, rd = _find(parent, s), _find(parent, d)
        if rs != rd:
            parent[rs] = rd
    diff = [o - i for o, i in zip(out, inn)]
    balanced = not any(diff)
    if balanced:
        pseudo = True
    else:
        pseudo = diff[0] == 1 and sorted(diff[1:]) == [-1] + [0] * (k - 2)
    touched = [v for v in range(k) if out[v] or inn[v]]
    if n == 0:
        connected = True
    else:
        root = _find(parent, 0)
        connected = (out[0] + inn[0] > 0) and all(_find(parent, v) == root for v in touched)
    return balanced, pseudo, connected, len(touched) == k


def _compositions(n: int, parts: int):
    """All vectors of ``parts`` nonnegative integers summing to n."""
    for bars in itertools.combinations(range(n + parts - 1), parts - 1):
        prev = -1
        vec = []
        for b in bars:
            vec.append(b - prev - 1)
            prev = b
        vec.append(n + parts - 2 - prev)
        yield vec


def _check_budget(k: int, n: int, budget: int) -> None:
    size = k ** (2 * n)
    if size > budget:
        raise ResourceCapError("enumeration budget", budget, size)


def enumerate_counts(k: int, n: int, budget: int = DEFAULT_ENUM_BUDGET) -> EnumCounts:
    """Classify every edge assignment, grouped by edge-multiplicity vector.

    Each multiplicity vector c over the k^2 ordered pairs stands for
    n!/prod(c!) labelled assignments that share every degree and connectivity
    property.
    """
    _check_kn(k, n)
    _check_budget(k, n, budget)
    pair_list = [(s, d) for s in range(k) for d in range(k)]
    nf = factorial(n)
    p = g = m = spanning = 0
    for vec in _compositions(n, k * k):
        weight = nf // prod(factorial(c) for c in vec if c > 1)
        bal, pseudo, conn, touches = _classify(k, ((s, d, c) for (s, d), c in zip(pair_list, vec)), n)
        if bal:
            p += weight
        if pseudo:
            g += weight
            if conn:
                m += weight
                if touches or (k == 1):
                    spanning += weight
    if n == 0:
        spanning = 1 if k == 1 else 0
    return EnumCounts(k, n, p, g, m, g - m, spanning)


def enumerate_counts_labelled(k: int, n: int, budget: int = 5_000_000) -> EnumCounts:
    """Literal enumeration: edge j goes to ordered pair a_j, for all a in (k^2)^n.

    Prunes branches whose running degree imbalance can no longer be repaired
    by the remaining edges (each edge changes the total imbalance by <= 2).
    """
    _check_kn(k, n)
    _check_budget(k, n, budget)
    pair_list = [(s, d) for s in range(k) for d in range(k)]
    diff = [0] * k
    chosen: list[tuple[int, int]] = []
    totals = [0, 0, 0, 0]  # balanced, pseudo, path, spanning

    def finish():
        counts: dict[tuple[int, int], int] = {}
        for pr in chosen:
            counts[pr] = counts.get(pr, 0) + 1
        bal, pseudo, conn, touches = _classify(k, ((s, d, c) for (s, d), c in counts.items()), n)
        totals[0] += bal
        if pseudo:
            totals[1] += 1
            if conn:
                totals[2] += 1
                totals[3] += touches or k == 1

    def rec(j: int):
        if j == n:
            finish()
            return
        left = n - j
        for s, d in pair_list:
            diff[s] += 1
            diff[d] -= 1
            # a pseudo-path allows total |imbalance| 2 at the end
            if sum(abs(x) for x in diff) <= 2 * (left - 1) + 2:
                chosen.append((s, d))
                rec(j + 1)
                chosen.pop()
            diff[s] -= 1
            diff[d] += 1

    rec(0)
    bal, pseudo, path, spanning = totals
    if n == 0:
        spanning = 1 if k == 1 else 0
    return EnumCounts(k, n, bal, pseudo, path, pseudo - path, spanning)


def m_enum(k: int, n: int, G: FiniteGroup | None = None, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Number of graphs with an Eulerian path from e, by enumeration.

    ``G`` only supplies vertex names; when given its order must be k.
    """
    if G is not None and G.order != k:
        raise ValueError(f"group order {G.order} != k={k}")
    return enumerate_counts(k, n, budget).path


def count_monomial_classes(G: FiniteGroup, n: int, budget: int = 20_000_000) -> int:
    """Distinct graphs among all monomials x[s(1),g1]...x[s(n),gn], s in S_n, g in G^n.

    Prefix products go through G's Cayley table; the count is the graded
    codimension computed directly from monomial equivalence.
    """
    k = G.order
    if n == 0:
        return 1
    size = k**n * factorial(n)
    if size > budget:
        raise ResourceCapError("monomial-class budget", budget, size)
    table = np.asarray(G.cayley, dtype=np.int64) - 1
    words = np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int64)
    v = np.zeros(len(words), dtype=np.int64)
    pair_code = np.empty_like(words)
    for j in range(n):
        nxt = table[v, words[:, j]]
        pair_code[:, j] = v * k + nxt
        v = nxt
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    # label perms[r][j] sits at position j; the graph lists the pair for each label in order
    inv = np.argsort(perms, axis=1)
    radix = (k * k) ** np.arange(n, dtype=np.int64)
    codes = []
    for row in pair_code:
        codes.append(row[inv] @ radix)
    return int(np.unique(np.concatenate(codes)).size)


# -- memo table ---------------------------------------------------------------

QUANTITIES = ("m", "p", "gamma", "sd", "sc", "c2closed", "c2dv")


class CountTable:
    """Memo of (quantity, k, n) -> value with per-method entries that must agree."""

    def __init__(self):
        self.entries: dict[tuple[str, int, int], dict[str, int]] = {}

    def put(self, quantity: str, k: int, n: int, value: int, method: str = "formula") -> None:
        if quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {quantity!r}")
        if value < 0:
            raise ValueError("counts are nonnegative")
        slot = self.entries.setdefault((quantity, k, n), {})
        for other, v in slot.items():
            if v != value:
                raise AssertionError(f"{quantity}_{k}({n}): {method}={value} but {other}={v}")
        slot[method] = value

    def get(self, quantity: str, k: int, n: int) -> int | None:
        slot = self.entries.get((quantity, k, n))
        return next(iter(slot.values())) if slot else None

    def __contains__(self, key) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def fill(self, k: int, n_max: int, enum: bool = False, budget: int = DEFAULT_ENUM_BUDGET) -> CountTable:
        for n in range(n_max + 1):
            self.put("p", k, n, p_recursion(k, n))
            self.put("gamma", k, n, gamma(k, n))
            self.put("sd", k, n, sd(k, n))
            self.put("m", k, n, m_formula(k, n))
            self.put("sc", k, n, sc(k, n))
            if k == 2:
                self.put("c2closed", k, n, c2_closed(n))
                self.put("c2dv", k, n, c2_divincenzo(n))
            if enum and k ** (2 * n) <= budget:
                e = enumerate_counts(k, n, budget)
                for q, v in e.as_dict().items():
                    self.put(q, k, n, v, method="enum")
        return self

    def save(self, path: str | Path) -> None:
        lines = []
        for (q, k, n), slot in sorted(self.entries.items()):
            lines.append(f"{q},{k},{n},{next(iter(slot.values()))}")
        Path(path).write_text("\n".join(lines) + ("\n" if lines else ""))

    @classmethod
    def load(cls, path: str | Path) -> CountTable:
        table = cls()
        for ln in Path(path).read_text().splitlines():
            ln = ln.strip()
            if not ln:
                continue
            q, k, n, v = ln.split(",")
            table.put(q, int(k), int(n), int(v), method="cache")
        return table
