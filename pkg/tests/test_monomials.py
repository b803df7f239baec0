from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedpi.errors import GroupMismatchError, ParseError
from gradedpi.groups import make_cyclic, make_symmetric
from gradedpi.monomials import (
    GradedPolynomial,
    Monomial,
    build_graph,
    equivalent,
    export_dot,
    graphs_equal,
    parse_monomial,
    parse_polynomial,
)


def test_small_graph(C3):
    m = parse_monomial("x[3,s] x[2,s2] x[5,s2] x[4,e] x[1,s]", C3)
    g = build_graph(m)
    # prefix products e -> s -> e -> s2 -> s2 -> e
    assert g.edges == {3: (1, 2), 2: (2, 1), 5: (1, 3), 4: (3, 3), 1: (3, 1)}
    assert g.out_degree()[1:] == [2, 1, 2]
    assert g.in_degree()[1:] == [2, 1, 2]


def test_equivalent_pair(C3):
    m1 = parse_monomial("x[1,s]x[2,s]x[3,s]x[4,s2]", C3)
    m2 = parse_monomial("x[4,s2]x[3,s]x[1,s]x[2,s]", C3)
    assert equivalent(m1, m2)
    assert graphs_equal(build_graph(m1), build_graph(m2))
    # same weights, labels swapped: edges 1 and 2 leave different vertices
    assert not equivalent(m1, parse_monomial("x[2,s]x[1,s]x[3,s]x[4,s2]", C3))


def test_inequivalent_weights(C2):
    a = parse_monomial("x[1,e]x[2,s]", C2)
    b = parse_monomial("x[2,s]x[1,e]", C2)
    assert not equivalent(a, b)


def test_repeated_variable_rejected(C2):
    with pytest.raises(ParseError, match="repeated index"):
        parse_monomial("x[1,e]x[1,s]", C2)
    with pytest.raises(ValueError):
        Monomial(C2, [(1, 1), (1, 2)])


@pytest.mark.parametrize(
    "text,reason",
    [
        ("x[1,q]", "unknown element name"),
        ("x[1 s]", None),
        ("3/0 x[1,e]", "malformed rational coefficient"),
        ("x[1,e] +", None),
    ],
)
def test_parse_errors(C2, text, reason):
    with pytest.raises(ParseError, match=reason):
        parse_polynomial(text, C2)


def test_polynomial_merging(C2):
    f = parse_polynomial("2 x[1,e]x[2,s] - 1/2 x[2,s]x[1,e] - 2 x[1,e]x[2,s]", C2)
    assert len(f.terms) == 1
    (coeff, m), = f.terms
    assert coeff == Fraction(-1, 2)
    assert (f - f).is_zero()


def test_mixed_groups_rejected(C2, C3):
    a = GradedPolynomial.from_monomial(Monomial.from_word(C2, [1]))
    b = GradedPolynomial.from_monomial(Monomial.from_word(C3, [1]))
    with pytest.raises(GroupMismatchError):
        a + b


def test_dot_export(C3):
    dot = export_dot(build_graph(parse_monomial("x[1,s]x[2,s2]", C3)))
    assert dot.startswith("digraph")
    assert 'v1 -> v2 [label="1 (s)"]' in dot


words = st.integers(1, 6).flatmap(lambda n: st.lists(st.integers(1, 6), min_size=n, max_size=n))


@settings(max_examples=150, deadline=None)
@given(words, st.randoms(use_true_random=False))
def test_render_parse_roundtrip(word, rnd):
    G = make_symmetric(3)
    labels = rnd.sample(range(1, 50), len(word))
    m = Monomial(G, zip(labels, word))
    assert parse_monomial(m.render(), G) == m


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=8))
def test_graph_weights_are_consistent(word):
    # every edge weight is src^-1 * dst, and degrees satisfy the Eulerian path conditions
    G = make_cyclic(4)
    g = build_graph(Monomial.from_word(G, word))
    for lab, (src, dst) in g.edges.items():
        assert G.mul_idx(G.inv_idx(src), dst) == g.weight(lab) == word[lab - 1]
    diff = [o - i for o, i in zip(g.out_degree()[1:], g.in_degree()[1:])]
    end = G.product_idx(word)
    if end == 1:
        assert all(d == 0 for d in diff)
    else:
        assert diff[0] == 1 and diff[end - 1] == -1
        assert sum(abs(d) for d in diff) == 2
