"""Pseudopalindromic closures under dihedral antimorphisms and generalized
Thue-Morse words, backed by the gpsw C++ library."""

from ._core import (
    DihedralElement,
    Error,
    ancestors,
    canonical_directives,
    closure,
    compose,
    conjugate_through_phi,
    digit_sum,
    dihedral_group,
    factor_complexity,
    find_overlap,
    gps_prefix,
    gps_steps,
    infer_bisequence,
    is_fixed,
    is_periodic,
    jumps,
    longest_pal_suffix,
    order_q,
    palindrome_census,
    parse_antimorphism,
    parse_word,
    phi_apply,
    phi_fixed_point_prefix,
    pseudopalindromic_prefixes,
    psi,
    shift,
    tbm_prefix,
    theorem_grid,
    verify_lemma_suite,
    verify_properties,
    verify_theorem,
)

__version__ = "0.1.0"
