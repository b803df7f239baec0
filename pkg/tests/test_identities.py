import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedpi.errors import ResourceCapError
from gradedpi.groups import make_cyclic, parse_group_spec
from gradedpi.identities import (
    ElementaryGrading,
    bd_generators,
    certificate_from_basic,
    direct_monomial_is_identity,
    elementary_monomial_identity,
    evaluate_symbolic,
    is_identity_classes,
    is_identity_oracle,
    random_polynomial,
    reduced_substitution,
    standard_polynomial,
    verify_amitsur_levitsky,
    verify_certificate,
)
from gradedpi.monomials import GradedPolynomial, Monomial, parse_monomial, parse_polynomial
from gradedpi.paths import BasicSwap, basic_decomposition, ipp_permutations


def test_commutator_of_identity_weights(C3):
    f = parse_polynomial("x[1,e]x[2,e] - x[2,e]x[1,e]", C3)
    assert is_identity_classes(f).identity
    assert is_identity_oracle(f)


def test_type2_generator(C3):
    f = parse_polynomial("x[1,s]x[2,s2]x[3,s] - x[3,s]x[2,s2]x[1,s]", C3)
    assert is_identity_classes(f).identity
    assert is_identity_oracle(f)


def test_non_identity_class_sums(C2):
    f = parse_polynomial("x[1,e]x[2,s] - x[2,s]x[1,e]", C2)
    rep = is_identity_classes(f)
    assert not rep.identity
    assert sorted(c.total for c in rep.classes) == [-1, 1]
    assert not is_identity_oracle(f)


def test_single_variable_evaluation(C2):
    f = parse_polynomial("x[1,e]", C2)
    M = evaluate_symbolic(f)
    assert not M.is_zero()
    assert sorted(M.nonzero_entries()) == [(1, 1), (2, 2)]


def test_oracle_cap(C4):
    f = GradedPolynomial.from_monomial(Monomial.from_word(C4, [1] * 11))
    with pytest.raises(ResourceCapError):
        evaluate_symbolic(f)


def test_generators_count_and_validity(C3, C4, klein, S3):
    for G in (C3, C4, klein, S3):
        gens = bd_generators(G)
        assert len(gens) == G.order + 1
        for f in gens:
            assert is_identity_classes(f).identity
            assert is_identity_oracle(f)


def test_classes_split_by_variable_set(C2):
    # identical graphs would be impossible across variable sets; sums must not mix
    f = parse_polynomial("x[1,e]x[2,e] - x[1,e]x[3,e]", C2)
    assert len(is_identity_classes(f).classes) == 2
    assert not is_identity_classes(f).identity
    assert not is_identity_oracle(f)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["C2", "C3", "C2xC2"]), st.integers(0, 10**6))
def test_methods_agree_on_random_polynomials(spec, seed):
    G = parse_group_spec(spec)
    f = random_polynomial(G, random.Random(seed), max_degree=4)
    assert is_identity_classes(f).identity == is_identity_oracle(f)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.fractions(-5, 5, max_denominator=5))
def test_evaluation_is_linear(seed, a):
    G = make_cyclic(3)
    rng = random.Random(seed)
    f = random_polynomial(G, rng, max_degree=3)
    g = random_polynomial(G, rng, max_degree=3)
    lhs = evaluate_symbolic(f + g.scale(a))
    rhs = evaluate_symbolic(f) + evaluate_symbolic(g).scale(Fraction(a))
    assert (lhs - rhs).is_zero()


def test_figure_swap_certificate(C3):
    m = parse_monomial("x[1,s]x[2,s]x[3,s]x[4,s2]", C3)
    swap = BasicSwap(1, 3, (1, 2), (4, 4))
    cert = certificate_from_basic(m, swap)
    assert cert.kind == 2
    assert C3.name_of(cert.element) == "s2"
    assert verify_certificate(m, swap, cert)


def test_loop_swap_certificate(C2):
    m = Monomial.from_word(C2, [1, 2, 2, 1])  # loop e, then e->s->e, then loop e
    swap = BasicSwap(1, 1, (1, 1), (4, 4))
    cert = certificate_from_basic(m, swap)
    assert cert.kind == 1
    assert verify_certificate(m, swap, cert)
    assert len(cert.instances) == 2  # nonempty middle needs two commutators


def test_invalid_swap_rejected(C2):
    m = Monomial.from_word(C2, [1, 2, 2, 1])
    with pytest.raises(ValueError):
        certificate_from_basic(m, BasicSwap(1, 2, (1, 1), (2, 2)))


def test_random_certificates():
    rng = random.Random(17)
    checked = 0
    while checked < 100:
        G = rng.choice([make_cyclic(2), make_cyclic(3), parse_group_spec("C2xC2")])
        n = rng.randint(2, 7)
        m = Monomial.from_word(G, [rng.randint(1, G.order) for _ in range(n)])
        pi = rng.choice(ipp_permutations(m).permutations)
        cur = m
        for s in basic_decomposition(m, pi):
            cert = certificate_from_basic(cur, s)
            assert verify_certificate(cur, s, cert)
            checked += 1
            cur = s.apply(cur)


def test_standard_polynomial_shape(C2):
    f = standard_polynomial(3, [1, 1, 1], group=C2)
    assert len(f.terms) == 6
    assert sum(c for c, _ in f.terms) == 0


def test_s3_on_m2(C2):
    # the e-component is diagonal, hence commutative, so s_3 vanishes there
    assert is_identity_oracle(standard_polynomial(3, [1, 1, 1], group=C2))
    # any mixed word gives a nonzero evaluation
    for w in itertools.product((1, 2), repeat=3):
        if len(set(w)) == 2:
            f = standard_polynomial(3, w, group=C2)
            assert not is_identity_oracle(f)
            assert not is_identity_classes(f).identity


def test_s4_identity_of_m2(C2):
    rep = verify_amitsur_levitsky(C2, 4, method="both")
    assert rep.words == 16 and rep.all_identity and rep.ok


def test_al_cap(C2):
    with pytest.raises(ResourceCapError):
        verify_amitsur_levitsky(C2, 9)


# -- elementary gradings --------------------------------------------------


def test_elementary_degrees(C4):
    E = ElementaryGrading(C4, (1, 2))
    assert E.degree(1, 2) == 2 and E.degree(2, 1) == 4
    with pytest.raises(ValueError):
        ElementaryGrading(C4, (1, 1))


@pytest.mark.parametrize("weights,length", [(("s", "s"), 2), (("s2",), 1)])
def test_elementary_identity_witness(C4, weights, length):
    E = ElementaryGrading(C4, (1, 2))
    ws = [C4.index_of(w) for w in weights]
    v = elementary_monomial_identity(E, ws)
    assert v.identity and len(v.witness) <= length
    assert direct_monomial_is_identity(E, ws)
    # the reduced monomial is itself an identity and its variables expand back to s
    assert direct_monomial_is_identity(E, v.reduced.weights)
    segs = reduced_substitution(v)
    assert [f for i in sorted(segs) for f in segs[i]] == list(v.s.factors)


def test_full_support_has_no_monomial_identity(C4):
    E = ElementaryGrading(C4, (1, 2, 3, 4))
    for u in range(1, 5):
        for ws in itertools.product(range(1, 5), repeat=u):
            assert not elementary_monomial_identity(E, ws).identity
            assert not direct_monomial_is_identity(E, ws)


def test_coset_chain_matches_direct_evaluation_nonabelian(S3):
    for E in [ElementaryGrading(S3, (1, 2)), ElementaryGrading(S3, (1, 4, 5))]:
        for u in range(1, 4):
            for ws in itertools.product(range(1, 7), repeat=u):
                assert elementary_monomial_identity(E, ws).identity == direct_monomial_is_identity(E, ws)
