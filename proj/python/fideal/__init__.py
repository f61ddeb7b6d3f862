"""Facet and non-face complexes of square-free monomial ideals."""

from ._fideal import (
    DEFAULT_AMBIENT_LIMIT,
    FidealError,
    Ideal,
    SimplicialComplex,
    check_lemma_binomial,
    check_lemma_dimension,
    contains_monomial,
    count_pure,
    dimension,
    enumerate_pure,
    f_vector,
    facet_complex,
    facet_ideal,
    height,
    is_f_ideal,
    minimal_vertex_covers,
    minimalize,
    nonface_complex,
    nonface_ideal,
    parse_ideal,
    run_census,
    stats,
    theorem_classify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
