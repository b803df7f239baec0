"""Finite groups stored as Cayley tables.

Elements are addressed by 1-based index; index 1 is always the identity.
Every group accepts the canonical names ``g1`` .. ``gk``; the named
constructors add readable aliases (``e``, ``s``, ``s2`` for cyclic groups,
``r``, ``rs`` for dihedral groups, and so on).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Mapping, Sequence

from .errors import GroupAxiomError, GroupMismatchError, ResourceCapError

DEFAULT_MAX_ORDER = 24


class FiniteGroup:
    """An immutable finite group given by its Cayley table.

    ``cayley[i][j]`` (both 1-based) is the index of ``g_i * g_j``.
    """

    __slots__ = ("order", "_table", "_inverse", "aliases", "label")

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        aliases: Mapping[str, int] | None = None,
        label: str | None = None,
        max_order: int = DEFAULT_MAX_ORDER,
    ):
        k = len(table)
        if k == 0:
            raise GroupAxiomError("order", "a group needs at least one element")
        if k > max_order:
            raise ResourceCapError("group order cap", max_order, k)
        rows = tuple(tuple(int(v) for v in row) for row in table)
        _validate(rows)
        self.order = k
        self._table = rows
        self._inverse = tuple(row.index(1) + 1 for row in rows)
        self.aliases = dict(aliases or {})
        for name, idx in self.aliases.items():
            if not 1 <= idx <= k:
                raise ValueError(f"alias {name!r} points outside 1..{k}")
        self.label = label or f"table({k})"

    # -- table access -------------------------------------------------
    @property
    def cayley(self) -> tuple[tuple[int, ...], ...]:
        return self._table

    def mul_idx(self, i: int, j: int) -> int:
        return self._table[i - 1][j - 1]

    def inv_idx(self, i: int) -> int:
        return self._inverse[i - 1]

    def product_idx(self, indices) -> int:
        acc = 1
        for i in indices:
            acc = self._table[acc - 1][i - 1]
        return acc

    # -- elements -----------------------------------------------------
    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[GroupElement]:
        return (GroupElement(self, i) for i in range(1, self.order + 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self._table == other._table

    def __hash__(self) -> int:
        return hash(self._table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={self.order})"

    @property
    def elements(self) -> list[GroupElement]:
        return list(self)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, 1)

    @property
    def names(self) -> dict[int, list[str]]:
        """Map index -> every accepted name, canonical ``g<i>`` first."""
        out = {i: [f"g{i}"] for i in range(1, self.order + 1)}
        for name, idx in self.aliases.items():
            out[idx].append(name)
        return out

    def name_of(self, idx: int) -> str:
        """Display name: the first alias if any, else ``g<i>``."""
        for name, i in self.aliases.items():
            if i == idx:
                return name
        return f"g{idx}"

    def index_of(self, name: str) -> int:
        name = name.strip()
        if name in self.aliases:
            return self.aliases[name]
        m = re.fullmatch(r"g(\d+)", name)
        if m and 1 <= int(m.group(1)) <= self.order:
            return int(m.group(1))
        raise KeyError(f"unknown element name {name!r} in {self.label}")

    def element(self, key: str | int) -> GroupElement:
        if isinstance(key, str):
            return GroupElement(self, self.index_of(key))
        if not 1 <= key <= self.order:
            raise IndexError(f"element index {key} outside 1..{self.order}")
        return GroupElement(self, key)


def _validate(rows: tuple[tuple[int, ...], ...]) -> None:
    k = len(rows)
    full = set(range(1, k + 1))
    for i, row in enumerate(rows, 1):
        if len(row) != k:
            raise GroupAxiomError("shape", f"row {i} has {len(row)} entries, expected {k}")
        for v in row:
            if not 1 <= v <= k:
                raise GroupAxiomError("range", f"entry {v} in row {i} outside 1..{k}")
    for j in range(1, k + 1):
        if rows[0][j - 1] != j:
            raise GroupAxiomError("identity", f"g1*g{j} != g{j}; index 1 must be the identity")
        if rows[j - 1][0] != j:
            raise GroupAxiomError("identity", f"g{j}*g1 != g{j}; index 1 must be the identity")
    for i, row in enumerate(rows, 1):
        if set(row) != full:
            raise GroupAxiomError("latin square", f"row {i} is not a permutation of 1..{k}")
    for j in range(k):
        if {rows[i][j] for i in range(k)} != full:
            raise GroupAxiomError("latin square", f"column {j + 1} is not a permutation of 1..{k}")
    for a in range(k):
        ra = rows[a]
        for b in range(k):
            ab = ra[b] - 1
            rab = rows[ab]
            rb = rows[b]
            for c in range(k):
                if rab[c] != ra[rb[c] - 1]:
                    raise GroupAxiomError(
                        "associativity",
                        f"(g{a + 1}*g{b + 1})*g{c + 1} != g{a + 1}*(g{b + 1}*g{c + 1})",
                    )


@dataclass(frozen=True)
class GroupElement:
    group: FiniteGroup
    index: int

    def _same(self, other: GroupElement) -> None:
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(other).__name__}")
        if other.group is not self.group and other.group != self.group:
            raise GroupMismatchError(f"{self.group!r} vs {other.group!r}")

    def __mul__(self, other: GroupElement) -> GroupElement:
        self._same(other)
        return GroupElement(self.group, self.group.mul_idx(self.index, other.index))

    def inverse(self) -> GroupElement:
        return GroupElement(self.group, self.group.inv_idx(self.index))

    @property
    def name(self) -> str:
        return self.group.name_of(self.index)

    def __repr__(self) -> str:
        return self.name

    def __hash__(self) -> int:
        return hash(self.index)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupElement)
            and self.index == other.index
            and (self.group is other.group or self.group == other.group)
        )


def mul(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def inv(a: GroupElement) -> GroupElement:
    return a.inverse()


def identity(G: FiniteGroup) -> GroupElement:
    return G.identity


# -- constructors -----------------------------------------------------------

def from_cayley_table(table, aliases=None, label=None, max_order=DEFAULT_MAX_ORDER) -> FiniteGroup:
    return FiniteGroup(table, aliases=aliases, label=label, max_order=max_order)


def make_cyclic(k: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """C_k with element i equal to s^(i-1)."""
    if k < 1:
        raise ValueError("cyclic group order must be at least 1")
    table = [[(i + j) % k + 1 for j in range(k)] for i in range(k)]
    aliases = {"e": 1}
    if k > 1:
        aliases["s"] = 2
    for p in range(2, k):
        aliases[f"s{p}"] = p + 1
    return FiniteGroup(table, aliases, label=f"C{k}", max_order=max_order)


def make_dihedral(m: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Dihedral group of order 2m; r^a s^b sits at index 1 + a + m*b."""
    if m < 1:
        raise ValueError("dihedral parameter must be at least 1")
    elems = [(a, b) for b in range(2) for a in range(m)]
    pos = {x: i + 1 for i, x in enumerate(elems)}

    def prod(x, y):
        (a, b), (c, d) = x, y
        return ((a + (c if b == 0 else -c)) % m, (b + d) % 2)

    table = [[pos[prod(x, y)] for y in elems] for x in elems]
    aliases = {}
    for (a, b), i in pos.items():
        r = "" if a == 0 else ("r" if a == 1 else f"r{a}")
        name = r + ("s" if b else "")
        aliases[name or "e"] = i
    return FiniteGroup(table, aliases, label=f"D{m}", max_order=max_order)


def make_symmetric(m: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """S_m for m <= 5; product is composition (p*q)(x) = p(q(x))."""
    if not 1 <= m <= 5:
        raise ValueError("symmetric groups are supported for 1 <= m <= 5")
    perms = sorted(itertools.permutations(range(m)))
    pos = {p: i + 1 for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[x]] for x in range(m))] for q in perms] for p in perms]
    aliases = {"e": 1}
    for p, i in pos.items():
        if i > 1:
            aliases["p" + "".join(str(v + 1) for v in p)] = i
    return FiniteGroup(table, aliases, label=f"S{m}", max_order=max_order)


def direct_product(G: FiniteGroup, H: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """G x H with (g_i, h_j) at index (i-1)*|H| + j, named ``<g>_<h>``."""
    kg, kh = G.order, H.order

    def idx(i, j):
        return (i - 1) * kh + j

    table = [
        [idx(G.mul_idx(i1, i2), H.mul_idx(j1, j2)) for i2 in range(1, kg + 1) for j2 in range(1, kh + 1)]
        for i1 in range(1, kg + 1)
        for j1 in range(1, kh + 1)
    ]
    aliases = {}
    for i in range(1, kg + 1):
        for j in range(1, kh + 1):
            aliases[f"{G.name_of(i)}_{H.name_of(j)}"] = idx(i, j)
    aliases.setdefault("e", 1)
    return FiniteGroup(table, aliases, label=f"{G.label}x{H.label}", max_order=max_order)


def regular_representation(G: FiniteGroup) -> dict[GroupElement, tuple[int, ...]]:
    """For each g the permutation i -> index(g * g_i), as a 1-based image tuple."""
    return {g: regular_permutation(G, g.index) for g in G}


def regular_permutation(G: FiniteGroup, g: int) -> tuple[int, ...]:
    return G.cayley[g - 1]


def permutation_matrix(G: FiniteGroup, g: int):
    """P_g with P_g[pi(i), i] = 1, so that P_g diag(a) P_g^-1 moves a_i to slot pi(i)."""
    import numpy as np

    k = G.order
    P = np.zeros((k, k), dtype=np.int64)
    for i, target in enumerate(regular_permutation(G, g)):
        P[target - 1, i] = 1
    return P


# -- isomorphism (test support) ---------------------------------------------

def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> tuple[int, ...] | None:
    """Exhaustive search over relabelings fixing the identity; only for small orders."""
    if G.order != H.order:
        return None
    k = G.order
    for rest in itertools.permutations(range(2, k + 1)):
        f = (1,) + rest
        if all(
            f[G.mul_idx(i, j) - 1] == H.mul_idx(f[i - 1], f[j - 1])
            for i in range(1, k + 1)
            for j in range(1, k + 1)
        ):
            return f
    return None


# -- text formats -------------------------------------------------------------

def load_cayley_file(path: str | Path, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Read ``k``, then k rows of k indices, then optional ``name=index`` lines."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError(f"{path}: empty Cayley table file")
    k = int(lines[0])
    if len(lines) < 1 + k:
        raise ValueError(f"{path}: expected {k} table rows")
    table = [[int(tok) for tok in ln.split()] for ln in lines[1 : 1 + k]]
    aliases = {}
    for ln in lines[1 + k :]:
        name, _, idx = ln.partition("=")
        if not _:
            raise ValueError(f"{path}: bad alias line {ln!r}")
        aliases[name.strip()] = int(idx)
    return FiniteGroup(table, aliases, label=f"table:{path}", max_order=max_order)


def format_cayley_table(G: FiniteGroup) -> str:
    out = [str(G.order)]
    out += [" ".join(str(v) for v in row) for row in G.cayley]
    out += [f"{name}={idx}" for name, idx in G.aliases.items()]
    return "\n".join(out) + "\n"


_SPEC_RE = re.compile(r"([CDS])(\d+)")


def parse_group_spec(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build a group from ``C<k>``, ``D<m>``, ``S<m>``, ``AxB`` or ``table:<path>``."""
    spec = spec.strip()
    if spec.startswith("table:"):
        return load_cayley_file(spec[len("table:") :], max_order=max_order)
    factors = spec.split("x")
    groups = []
    for part in factors:
        m = _SPEC_RE.fullmatch(part.strip())
        if not m:
            raise ValueError(f"unrecognized group spec {spec!r}")
        kind, n = m.group(1), int(m.group(2))
        maker = {"C": make_cyclic, "D": make_dihedral, "S": make_symmetric}[kind]
        groups.append(maker(n, max_order=max(max_order, 120)))
    G = groups[0]
    for H in groups[1:]:
        G = direct_product(G, H, max_order=max(max_order, 120))
    if G.order > max_order:
        raise ResourceCapError("group order cap", max_order, G.order)
    return G
