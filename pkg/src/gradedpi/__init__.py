"""Graded polynomial identities and graded codimensions of M_k(C) under crossed-product gradings."""

from .groups import (
    FiniteGroup,
    GroupElement,
    direct_product,
    from_cayley_table,
    identity,
    inv,
    make_cyclic,
    make_dihedral,
    make_symmetric,
    mul,
    parse_group_spec,
    regular_representation,
)
from .monomials import (
    GradedPolynomial,
    Monomial,
    MonomialGraph,
    build_graph,
    equivalent,
    export_dot,
    graphs_equal,
    parse_monomial,
    parse_polynomial,
)
from .paths import (
    BasicSwap,
    IppReport,
    Permutation,
    basic_decomposition,
    eulerian_paths_from,
    ipp_permutations,
    is_ipp,
    swan_check,
)
from .identities import (
    ElementaryGrading,
    bd_generators,
    certificate_from_basic,
    elementary_monomial_identity,
    evaluate_symbolic,
    is_identity_classes,
    is_identity_oracle,
    standard_polynomial,
    verify_amitsur_levitsky,
)
from .codimension import (
    CountTable,
    c2_closed,
    c2_divincenzo,
    gamma,
    m_enum,
    m_formula,
    p_balanced,
    sc,
    sd,
)
from .asymptotics import asymptotic_value, ratio_report, richmond_shallit

__version__ = "0.1.0"
