"""Brauer invariants of simple modules over graded classical Lie algebras.

A grading of a classical simple Lie algebra by a finite abelian group G
induces, for every dominant weight, a grading of the endomorphism algebra
of the corresponding simple module by a quotient of G.  This package
computes that class in the graded Brauer group, the graded Schur index,
and the classification of graded-simple modules, with exact arithmetic.
"""
from .abelian import FinAbGroup, Subgroup, quotient, perp, subgroup_generated
from .bichar import (Bicharacter, BrauerClass, CommutationFactor, brauer_inv, brauer_mul,
                     brauer_pow, brauer_pushforward, commutation_factor_from_pair,
                     pair_from_commutation_factor)
from .classify import (GradedSimpleLabel, count_graded_simples, enumerate_graded_simples,
                       graded_simple_label, module_admits_grading)
from .gradings import (AInner, AOuter, BSpec, CSpec, DInner, DOuter, distinguished_element,
                       is_inner, normalize_B, validate, weight_orbit)
from .invariants import (InvariantReport, admits_grading, brauer_invariant, gamma_hat_0_D_outer,
                         gamma_hat_B, gamma_hat_plus_D, h_prime, schur_index)
from .io import load_spec, save_spec, spec_from_dict, spec_to_dict

__version__ = "0.1.0"

__all__ = [
    "FinAbGroup",
    "Subgroup",
    "quotient",
    "perp",
    "subgroup_generated",
    "Bicharacter",
    "BrauerClass",
    "CommutationFactor",
    "brauer_inv",
    "brauer_mul",
    "brauer_pow",
    "brauer_pushforward",
    "commutation_factor_from_pair",
    "pair_from_commutation_factor",
    "GradedSimpleLabel",
    "count_graded_simples",
    "enumerate_graded_simples",
    "graded_simple_label",
    "module_admits_grading",
    "AInner",
    "AOuter",
    "BSpec",
    "CSpec",
    "DInner",
    "DOuter",
    "distinguished_element",
    "is_inner",
    "normalize_B",
    "validate",
    "weight_orbit",
    "InvariantReport",
    "admits_grading",
    "brauer_invariant",
    "gamma_hat_0_D_outer",
    "gamma_hat_B",
    "gamma_hat_plus_D",
    "h_prime",
    "schur_index",
    "load_spec",
    "save_spec",
    "spec_from_dict",
    "spec_to_dict",
]
