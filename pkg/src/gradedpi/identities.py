"""Deciding graded identities of M_k(C) under the crossed-product grading.

Two independent routes:

* :func:`is_identity_classes` groups the terms of a polynomial by variable
  set and then by monomial graph; the polynomial is an identity exactly when
  every group's coefficients sum to zero.
* :func:`evaluate_symbolic` substitutes ``x[i,g] -> E_i P_g`` with generic
  diagonal ``E_i = diag(t[i][1..k])`` and the regular-representation
  permutation matrix ``P_g`` and multiplies the matrices out exactly.

The module also covers the two families of binomial generators, certificates
that a basic swap follows from one of them, standard polynomials, and
monomial identities for elementary gradings by a tuple of distinct elements.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ResourceCapError
from .groups import FiniteGroup, GroupElement, regular_permutation
from .monomials import GradedPolynomial, Monomial, build_graph
from .paths import BasicSwap, Permutation, is_basic_swap, permutation_sign
from .sympoly import Poly, SymbolicMatrix

DEFAULT_ORACLE_VAR_CAP = 40
DEFAULT_STANDARD_CAP = 8


# -- class-sum criterion ------------------------------------------------------

@dataclass
class EquivalenceClass:
    representative: Monomial
    members: list[tuple[Fraction, Monomial]]
    total: Fraction

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class ClassReport:
    classes: list[EquivalenceClass]

    @property
    def identity(self) -> bool:
        return all(c.total == 0 for c in self.classes)

    def to_dict(self) -> dict:
        return {
            "verdict": self.identity,
            "classes": [
                {"repr": c.representative.render(), "size": c.size, "sum": str(c.total)}
                for c in self.classes
            ],
        }


def is_identity_classes(f: GradedPolynomial) -> ClassReport:
    groups: dict[tuple, list[tuple[Fraction, Monomial]]] = {}
    for coeff, mono in f.terms:
        key = (mono.variable_set(), tuple(build_graph(mono).edges.items()))
        groups.setdefault(key, []).append((coeff, mono))
    classes = [
        EquivalenceClass(members[0][1], members, sum((c for c, _ in members), Fraction(0)))
        for members in groups.values()
    ]
    return ClassReport(classes)


# -- symbolic oracle ----------------------------------------------------------

def _factor_matrix(G: FiniteGroup, var: int, weight: int) -> SymbolicMatrix:
    """E_var P_weight: entry (pi(c), c) holds t[var][pi(c)]."""
    k = G.order
    rows = [[Poly() for _ in range(k)] for _ in range(k)]
    for c, r in enumerate(regular_permutation(G, weight)):
        rows[r - 1][c] = Poly.var(("t", var, r))
    return SymbolicMatrix(rows)


def evaluate_symbolic(f: GradedPolynomial, var_cap: int = DEFAULT_ORACLE_VAR_CAP) -> SymbolicMatrix:
    G = f.group
    k = G.order
    nvars = len(f.variables()) * k
    if nvars > var_cap:
        raise ResourceCapError("oracle variable cap", var_cap, nvars)
    cache: dict[tuple[int, int], SymbolicMatrix] = {}
    total = SymbolicMatrix.zeros(k)
    for coeff, mono in f.terms:
        prod = SymbolicMatrix.identity(k)
        for factor in mono.factors:
            if factor not in cache:
                cache[factor] = _factor_matrix(G, *factor)
            prod = prod @ cache[factor]
        total = total + prod.scale(coeff)
    return total


def is_identity_oracle(f: GradedPolynomial, var_cap: int = DEFAULT_ORACLE_VAR_CAP) -> bool:
    return evaluate_symbolic(f, var_cap).is_zero()


# -- generators ----------------------------------------------------------------

def bd_generators(G: FiniteGroup) -> list[GradedPolynomial]:
    """x[1,e]x[2,e] - x[2,e]x[1,e], then for each g:
    x[1,g]x[2,g^-1]x[3,g] - x[3,g]x[2,g^-1]x[1,g]."""
    out = [_binomial(G, [(1, 1), (2, 1)], [(2, 1), (1, 1)])]
    for g in range(1, G.order + 1):
        gi = G.inv_idx(g)
        out.append(_binomial(G, [(1, g), (2, gi), (3, g)], [(3, g), (2, gi), (1, g)]))
    return out


def _binomial(G, a, b) -> GradedPolynomial:
    return GradedPolynomial(G, [(1, Monomial(G, a)), (-1, Monomial(G, b))])


# -- certificates for basic swaps ------------------------------------------

@dataclass
class Certificate:
    kind: int  # 1: g == h (loops), 2: g != h (three alternating segments)
    g: int
    h: int
    seg1: tuple[int, int]
    middle: tuple[int, int]
    seg2: tuple[int, int]
    products: tuple[int, int, int]
    element: int  # g^-1 h
    instances: list[tuple[GradedPolynomial, dict[int, tuple]]] = field(default_factory=list)

    def expansion(self) -> GradedPolynomial:
        """Sum of the generator substitutions; equals m - swap(m)."""
        acc = None
        for poly, _ in self.instances:
            acc = poly if acc is None else acc + poly
        return acc


def _segment_product(G: FiniteGroup, weights: Sequence[int], lo: int, hi: int) -> int:
    return G.product_idx(weights[lo - 1 : hi])


def substitute(
    poly: GradedPolynomial,
    mapping: dict[int, tuple],
    left: tuple = (),
    right: tuple = (),
) -> GradedPolynomial:
    """Replace variable i by the factor sequence mapping[i] and wrap with left/right factors.

    Each replacement must have the weight of the variable it replaces.
    """
    G = poly.group
    terms = []
    for coeff, mono in poly.terms:
        factors = list(left)
        for var, w in mono.factors:
            seq = mapping[var]
            if G.product_idx(x[1] for x in seq) != w:
                raise ValueError(f"substitution for x{var} does not have weight {G.name_of(w)}")
            factors.extend(seq)
        factors.extend(right)
        terms.append((coeff, Monomial(G, factors)))
    return GradedPolynomial(G, terms)


def certificate_from_basic(m: Monomial, swap: BasicSwap) -> Certificate:
    """Classify a basic swap and exhibit it as generator substitutions."""
    if not is_basic_swap(m, swap):
        raise ValueError(f"{swap} is not a basic swap for {m.render()}")
    G = m.group
    w = m.weights
    (a, b), (c, d) = swap.seg1, swap.seg2
    mid = (b + 1, c - 1)
    p1 = _segment_product(G, w, a, b)
    p2 = _segment_product(G, w, c, d)
    pm = _segment_product(G, w, b + 1, c - 1) if c > b + 1 else 1
    element = G.mul_idx(G.inv_idx(swap.g), swap.h)
    back = G.mul_idx(G.inv_idx(swap.h), swap.g)
    if not (p1 == p2 == element and pm == back):
        raise AssertionError("segment products disagree with the swap endpoints")

    fs = m.factors
    left, right = fs[: a - 1], fs[d:]
    S1, M, S2 = fs[a - 1 : b], fs[b : c - 1], fs[c - 1 : d]
    gens = bd_generators(G)
    instances = []
    if swap.g == swap.h:
        kind = 1
        comm = gens[0]
        if not M:
            instances.append((substitute(comm, {1: S1, 2: S2}, left, right), {1: S1, 2: S2}))
        else:
            # S1 M S2 - S2 M S1 = [S1, M S2] + [M, S2] S1
            sub1 = {1: S1, 2: M + S2}
            sub2 = {1: M, 2: S2}
            instances.append((substitute(comm, sub1, left, right), sub1))
            instances.append((substitute(comm, sub2, left, S1 + right), sub2))
    else:
        kind = 2
        gen = gens[element]  # index g in 1..k maps to gens[g]
        sub = {1: S1, 2: M, 3: S2}
        instances.append((substitute(gen, sub, left, right), sub))
    return Certificate(kind, swap.g, swap.h, (a, b), mid, (c, d), (p1, pm, p2), element, instances)


def verify_certificate(m: Monomial, swap: BasicSwap, cert: Certificate) -> bool:
    """Recompute segment products and check the expansion reproduces m - swap(m)."""
    G = m.group
    w = m.weights
    (a, b), (c, d) = cert.seg1, cert.seg2
    p1 = _segment_product(G, w, a, b)
    p2 = _segment_product(G, w, c, d)
    pm = _segment_product(G, w, b + 1, c - 1) if c > b + 1 else 1
    if (p1, pm, p2) != cert.products:
        return False
    if cert.kind == 1 and not (p1 == p2 == pm == 1):
        return False
    if cert.kind == 2 and (cert.g == cert.h or p1 != cert.element):
        return False
    target = GradedPolynomial(G, [(1, m), (-1, swap.apply(m))])
    return cert.expansion() == target


# -- standard polynomials -------------------------------------------------

def standard_polynomial(n: int, weights: Sequence[int | GroupElement], group: FiniteGroup | None = None) -> GradedPolynomial:
    """s_n with variable i carrying weights[i-1]."""
    if group is None:
        if not weights or not isinstance(weights[0], GroupElement):
            raise ValueError("pass group= when weights are plain indices")
        group = weights[0].group
    ws = [getattr(w, "index", w) for w in weights]
    if len(ws) != n:
        raise ValueError(f"need {n} weights, got {len(ws)}")
    terms = []
    for perm in itertools.permutations(range(1, n + 1)):
        terms.append((permutation_sign(perm), Monomial(group, [(p, ws[p - 1]) for p in perm])))
    return GradedPolynomial(group, terms)


@dataclass
class ALReport:
    group: str
    k: int
    n: int
    mode: str
    method: str
    words: int = 0
    expected_identity: bool = False
    non_identity_words: list[tuple[int, ...]] = field(default_factory=list)
    disagreements: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def all_identity(self) -> bool:
        return self.words > 0 and not self.non_identity_words

    @property
    def ok(self) -> bool:
        if self.disagreements:
            return False
        return self.all_identity if self.expected_identity else True


def verify_amitsur_levitsky(
    G: FiniteGroup,
    n: int,
    mode: str = "exhaustive",
    samples: int = 100,
    method: str = "classes",
    seed: int = 0,
    cap: int = DEFAULT_STANDARD_CAP,
    var_cap: int = DEFAULT_ORACLE_VAR_CAP,
) -> ALReport:
    """Check the graded specializations of s_n for every (or sampled) weight word."""
    if n > cap:
        raise ResourceCapError("standard polynomial degree cap", cap, n)
    k = G.order
    if mode == "exhaustive":
        words = itertools.product(range(1, k + 1), repeat=n)
    elif mode == "sample":
        rng = random.Random(seed)
        words = [tuple(rng.randint(1, k) for _ in range(n)) for _ in range(samples)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rep = ALReport(G.label, k, n, mode, method, expected_identity=n >= 2 * k)
    for word in words:
        f = standard_polynomial(n, word, group=G)
        verdicts = []
        if method in ("classes", "both"):
            verdicts.append(is_identity_classes(f).identity)
        if method in ("oracle", "both"):
            verdicts.append(is_identity_oracle(f, var_cap))
        rep.words += 1
        if len(set(verdicts)) > 1:
            rep.disagreements.append(tuple(word))
        if not verdicts[0]:
            rep.non_identity_words.append(tuple(word))
    return rep


# -- elementary gradings ------------------------------------------------------

@dataclass(frozen=True)
class ElementaryGrading:
    """Grading of M_t by distinct (g_1, ..., g_t): e_rs has degree g_r^-1 g_s."""

    group: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(getattr(x, "index", x) for x in self.elements)
        object.__setattr__(self, "elements", els)
        if not els:
            raise ValueError("an elementary grading needs at least one element")
        if len(set(els)) != len(els):
            raise ValueError("grading tuple entries must be distinct")

    @property
    def size(self) -> int:
        return len(self.elements)

    def degree(self, r: int, s: int) -> int:
        G = self.group
        return G.mul_idx(G.inv_idx(self.elements[r - 1]), self.elements[s - 1])

    def component(self, h: int) -> list[tuple[int, int]]:
        t = self.size
        return [(r, s) for r in range(1, t + 1) for s in range(1, t + 1) if self.degree(r, s) == h]


def direct_monomial_is_identity(E: ElementaryGrading, weights: Sequence[int]) -> bool:
    """Multiply generic homogeneous elements (all-ones on each component's support).

    Entries are sums of products of nonnegative numbers, so no cancellation
    can occur and the product vanishes iff the generic one does.
    """
    t = E.size
    prod = np.eye(t, dtype=np.int64)
    for h in weights:
        A = np.zeros((t, t), dtype=np.int64)
        for r, s in E.component(getattr(h, "index", h)):
            A[r - 1, s - 1] = 1
        prod = np.minimum(prod @ A, 1)
    return not prod.any()


@dataclass
class ElementaryVerdict:
    identity: bool
    chain: list[frozenset[int]]
    witness: tuple[int, ...] = ()
    reduced: Monomial | None = None
    s: Monomial | None = None
    t: Monomial | None = None


def elementary_monomial_identity(E: ElementaryGrading, weights: Sequence[int | GroupElement]) -> ElementaryVerdict:
    """Coset-chain test for x[1,h1]...x[u,hu] in the elementary grading E.

    A nonzero product needs rows r_0, ..., r_u with g_{r_j} = g_{r_0} h_1...h_j,
    i.e. a common element of E p_j^-1 over the prefix products p_j. The
    witness keeps only those prefixes that shrink the running intersection.
    """
    G = E.group
    hs = [getattr(h, "index", h) for h in weights]
    base = frozenset(E.elements)
    prefixes = [1]
    for h in hs:
        prefixes.append(G.mul_idx(prefixes[-1], h))

    def coset(p):
        pinv = G.inv_idx(p)
        return frozenset(G.mul_idx(x, pinv) for x in E.elements)

    chain = [base]
    current = base
    kept = []
    for j in range(1, len(hs) + 1):
        nxt = current & coset(prefixes[j])
        chain.append(nxt)
        if nxt != current:
            kept.append(j)
            current = nxt
    if current:
        return ElementaryVerdict(False, chain)

    witness = tuple(kept)
    reduced_weights = []
    prev = 1
    for j in witness:
        reduced_weights.append(G.mul_idx(G.inv_idx(prev), prefixes[j]))
        prev = prefixes[j]
    r = Monomial.from_word(G, hs)
    cut = witness[-1]
    s = Monomial(G, r.factors[:cut])
    t = Monomial(G, r.factors[cut:])
    return ElementaryVerdict(True, chain, witness, Monomial.from_word(G, reduced_weights), s, t)


def reduced_substitution(verdict: ElementaryVerdict) -> dict[int, tuple]:
    """Factor segments of s that replace the reduced monomial's variables."""
    segs = {}
    prev = 0
    for i, j in enumerate(verdict.witness, 1):
        segs[i] = verdict.s.factors[prev:j]
        prev = j
    return segs


# -- random instances (tests, selfcheck) --------------------------------

def random_polynomial(
    G: FiniteGroup,
    rng: random.Random,
    max_degree: int = 5,
    max_terms: int = 6,
    coeff_range: int = 5,
) -> GradedPolynomial:
    """A random strongly multilinear polynomial on one variable set.

    Half the time the class sums are forced to zero so identities occur often.
    """
    from .paths import ipp_permutations

    while True:
        n = rng.randint(1, max_degree)
        m = Monomial.from_word(G, [rng.randint(1, G.order) for _ in range(n)])
        ipps = ipp_permutations(m).permutations
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            if rng.random() < 0.5:
                perm = rng.choice(ipps).images
            else:
                perm = tuple(rng.sample(range(1, n + 1), n))
            coeff = Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, coeff_range))
            terms.append((coeff, m.permuted(perm)))
        f = GradedPolynomial(G, terms)
        if rng.random() < 0.5:
            fix = [(-c.total, c.representative) for c in is_identity_classes(f).classes]
            f = f + GradedPolynomial(G, fix)
        # merging and the fix-up can leave the coefficient range; resample then
        if all(abs(c) <= coeff_range for c, _ in f.terms):
            return f


def random_binomial(G: FiniteGroup, rng: random.Random, max_degree: int = 6) -> tuple[Monomial, Permutation]:
    from .paths import ipp_permutations

    n = rng.randint(1, max_degree)
    m = Monomial(G, zip(rng.sample(range(1, 3 * n + 1), n), [rng.randint(1, G.order) for _ in range(n)]))
    perm = rng.choice(ipp_permutations(m).permutations)
    return m, perm
