import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedpi.errors import ResourceCapError
from gradedpi.groups import make_cyclic, parse_group_spec
from gradedpi.monomials import Monomial, build_graph, equivalent, parse_monomial
from gradedpi.paths import (
    BasicSwap,
    Permutation,
    basic_decomposition,
    compose_swaps,
    eulerian_paths_from,
    ipp_permutations,
    ipp_permutations_bruteforce,
    is_basic_swap,
    is_ipp,
    permutation_sign,
    swan_check,
)


def test_permutation_basics():
    p = Permutation((2, 3, 1))
    assert p.sign == 1
    assert Permutation((2, 1, 3)).sign == -1
    assert p.compose(p.inverse()).is_identity()
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


@settings(max_examples=100, deadline=None)
@given(st.permutations(range(1, 7)))
def test_sign_matches_inversion_count(images):
    inversions = sum(1 for i, j in itertools.combinations(range(6), 2) if images[i] > images[j])
    assert permutation_sign(images) == (-1) ** inversions


def test_compose_convention(C3):
    m = Monomial.from_word(C3, [2, 1, 3, 2])
    p, q = Permutation((2, 1, 4, 3)), Permutation((3, 1, 2, 4))
    assert m.permuted(p.images).permuted(q.images) == m.permuted(p.compose(q).images)


def test_figure_pair_is_ipp(C3):
    m = parse_monomial("x[1,s]x[2,s]x[3,s]x[4,s2]", C3)
    assert is_ipp(m, (4, 3, 1, 2))
    assert m.permuted((4, 3, 1, 2)) == parse_monomial("x[4,s2]x[3,s]x[1,s]x[2,s]", C3)


def test_rigid_word(C3):
    m = parse_monomial("x[1,s]x[2,e]x[3,s]x[4,e]x[5,s]", C3)
    rep = ipp_permutations(m)
    assert rep.total == 1 and rep.permutations[0].is_identity()
    others = [p for p in itertools.permutations(range(1, 6)) if p != (1, 2, 3, 4, 5)]
    assert not any(is_ipp(m, p) for p in others)


def test_four_equivalent_monomials(C2):
    m = parse_monomial("x[1,s]x[2,e]x[3,s]x[4,s]", C2)
    g = build_graph(m)
    assert g.edges == {1: (1, 2), 2: (2, 2), 3: (2, 1), 4: (1, 2)}
    paths = list(eulerian_paths_from(g, 1))
    assert len(paths) == 4
    rep = ipp_permutations(m)
    assert (rep.total, rep.even, rep.odd) == (4, 2, 2)
    variants = [m.permuted(p.images) for p in rep.permutations]
    assert all(equivalent(a, b) for a in variants for b in variants)


def test_degree_cap(C2):
    m = Monomial.from_word(C2, [1] * 13)
    with pytest.raises(ResourceCapError):
        ipp_permutations(m)
    assert ipp_permutations(Monomial.from_word(C2, [1] * 6), list_cap=0).total == 720


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["C2", "C3", "C2xC2", "S3"]), st.lists(st.integers(0, 5), min_size=1, max_size=7))
def test_path_characterization_matches_bruteforce(spec, raw):
    G = parse_group_spec(spec)
    m = Monomial.from_word(G, [1 + r % G.order for r in raw])
    fast = {p.images for p in ipp_permutations(m, list_cap=10**5).permutations}
    slow = {p.images for p in ipp_permutations_bruteforce(m)}
    assert fast == slow


def test_figure_swap_decomposition(C3):
    m = parse_monomial("x[1,s]x[2,s]x[3,s]x[4,s2]", C3)
    swaps = basic_decomposition(m, (4, 3, 1, 2))
    assert len(swaps) >= 1
    assert compose_swaps(4, swaps) == Permutation((4, 3, 1, 2))
    s = swaps[0]
    assert is_basic_swap(m, s)
    assert (s.g, s.h) == (1, 3)  # e -> s2
    assert s.seg1 == (1, 2) and s.seg2 == (4, 4)


def test_swap_inverse(C3):
    m = parse_monomial("x[1,s]x[2,s]x[3,s]x[4,s2]", C3)
    s = BasicSwap(1, 3, (1, 2), (4, 4))
    back = s.inverse()
    assert is_basic_swap(s.apply(m), back)
    assert back.apply(s.apply(m)) == m


def test_non_ipp_rejected(C2):
    m = Monomial.from_word(C2, [1, 2])
    with pytest.raises(ValueError):
        basic_decomposition(m, (2, 1))


def test_random_decompositions():
    rng = random.Random(5)
    for _ in range(60):
        G = rng.choice([make_cyclic(2), make_cyclic(3), parse_group_spec("C2xC2")])
        n = rng.randint(1, 8)
        m = Monomial.from_word(G, [rng.randint(1, G.order) for _ in range(n)])
        pi = rng.choice(ipp_permutations(m).permutations)
        swaps = basic_decomposition(m, pi)
        cur = m
        for s in swaps:
            assert is_basic_swap(cur, s)
            assert is_ipp(m, compose_swaps(n, swaps).images)
            cur = s.apply(cur)
        assert cur == m.permuted(pi.images)
        assert compose_swaps(n, swaps) == pi


def test_swan_small(C2, C3):
    rep = swan_check(C2, 4, keep_rows=True)
    assert rep.ok and rep.asserted and rep.words == 16
    assert all(r.even == r.odd for r in rep.rows)
    # below 2k nothing is asserted, even though unbalanced words exist
    low = swan_check(C3, 5, keep_rows=True)
    assert not low.asserted and low.ok
    assert any(r.word == (2, 1, 2, 1, 2) and r.total == 1 for r in low.rows)


def test_swan_sample_and_workers(C2):
    a = swan_check(C2, 5, mode="sample", sample_size=40, seed=1)
    b = swan_check(C2, 5, mode="sample", sample_size=40, seed=1, workers=2)
    assert a.words == b.words == 40 and a.ok and b.ok


def test_swan_cap(C3):
    with pytest.raises(ResourceCapError):
        swan_check(C3, 12)
