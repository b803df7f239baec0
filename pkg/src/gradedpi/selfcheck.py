"""Small-scale cross-method checks bundled for CI (``gradedpi selfcheck``)."""

from __future__ import annotations

import random

from . import codimension as cod
from .groups import make_cyclic, make_symmetric, parse_group_spec
from .identities import (
    bd_generators,
    certificate_from_basic,
    is_identity_classes,
    is_identity_oracle,
    random_binomial,
    random_polynomial,
    verify_certificate,
)
from .paths import basic_decomposition, ipp_permutations, ipp_permutations_bruteforce, swan_check


def _enum_vs_formula():
    for k, n_max in ((2, 8), (3, 5), (4, 4)):
        for n in range(n_max + 1):
            e = cod.enumerate_counts(k, n)
            if e.path != cod.m_formula(k, n) or e.disconnected != cod.sd(k, n):
                return False, f"k={k} n={n}"
            if e.pseudo != cod.gamma(k, n) or e.balanced != cod.p_recursion(k, n):
                return False, f"k={k} n={n}"
    return True, ""


def _ledger():
    for k in range(1, 5):
        for n in range(0, 20):
            if cod.m_formula(k, n) + cod.sd(k, n) != cod.gamma(k, n):
                return False, f"k={k} n={n}"
            if k * cod.gamma(k, n) != cod.p_recursion(k, n + 1):
                return False, f"k={k} n={n}"
    return True, ""


def _p_methods():
    for k in range(1, 5):
        for n in range(12):
            vals = {cod.p_nested(k, n), cod.p_multinomial(k, n), cod.p_recursion(k, n)}
            vals |= {cod.p_split(a, k - a, n) for a in range(1, k)}
            if len(vals) != 1:
                return False, f"k={k} n={n}"
    return True, ""


def _k2_closed():
    ok = all(cod.c2_closed(n) == cod.c2_divincenzo(n) == cod.m_formula(2, n) for n in range(40))
    return ok, ""


def _classes_vs_oracle():
    rng = random.Random(7)
    groups = [make_cyclic(2), make_cyclic(3), parse_group_spec("C2xC2"), make_symmetric(3)]
    for G in groups:
        for f in bd_generators(G):
            if not (is_identity_classes(f).identity and is_identity_oracle(f)):
                return False, f"generator {f.render()}"
    for _ in range(30):
        f = random_polynomial(rng.choice(groups), rng, max_degree=4)
        if is_identity_classes(f).identity != is_identity_oracle(f):
            return False, f.render()
    return True, ""


def _paths_vs_bruteforce():
    rng = random.Random(3)
    for _ in range(40):
        G = rng.choice([make_cyclic(2), make_cyclic(3)])
        m, _ = random_binomial(G, rng, max_degree=6)
        fast = {p.images for p in ipp_permutations(m).permutations}
        slow = {p.images for p in ipp_permutations_bruteforce(m)}
        if fast != slow:
            return False, m.render()
    return True, ""


def _decomposition():
    rng = random.Random(11)
    for _ in range(40):
        G = rng.choice([make_cyclic(2), make_cyclic(3), parse_group_spec("C2xC2")])
        m, perm = random_binomial(G, rng, max_degree=7)
        cur = m
        for s in basic_decomposition(m, perm):
            if not verify_certificate(cur, s, certificate_from_basic(cur, s)):
                return False, m.render()
            cur = s.apply(cur)
        if cur != m.permuted(perm.images):
            return False, m.render()
    return True, ""


def _swan():
    rep = swan_check(make_cyclic(2), 4)
    return rep.ok and rep.words == 16, ""


CHECKS = [
    ("enumeration matches formulas", _enum_vs_formula),
    ("m + sd = gamma = p(n+1)/k", _ledger),
    ("balanced-count methods agree", _p_methods),
    ("k=2 closed forms agree", _k2_closed),
    ("class sums agree with symbolic oracle", _classes_vs_oracle),
    ("path enumeration matches brute force", _paths_vs_bruteforce),
    ("basic decompositions compose and certify", _decomposition),
    ("parity balance for C2, n=4", _swan),
]


def run_selfcheck() -> list[tuple[str, bool, str]]:
    out = []
    for name, fn in CHECKS:
        ok, detail = fn()
        out.append((name, bool(ok), detail))
    return out
