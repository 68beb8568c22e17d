"""Decision procedures for star-free closures SF(C) of regular languages.

The base class C is either finite (given by a morphism onto a finite monoid)
or a group class such as MOD, given by an epsilon-separability oracle.
"""
from .automata import Dfa, minimize, parse_dfa, format_dfa
from .regex import compile_regex, parse_regex, RegexSyntaxError
from .algebra import FiniteMonoid, MonoidMorphism, syntactic_morphism, transition_monoid, omega
from .baseclass import BaseClass, triv, length_mod_class, mod_class, group_class, load_base, parse_morphism
from .stutter import stutters, is_c_aperiodic, membership
from .semiring import PowersetSemiring, RatingMap, canonical_rating_map, ImprintSet, BudgetExceeded
from .imprint import saturate, saturate_finite, saturate_group, full_imprint
from .covering import CoverInstance, Verdict, decide_cover, decide_separation, membership_via_covering

__version__ = "0.1.0"

__all__ = [
    "Dfa", "minimize", "parse_dfa", "format_dfa",
    "compile_regex", "parse_regex", "RegexSyntaxError",
    "FiniteMonoid", "MonoidMorphism", "syntactic_morphism", "transition_monoid", "omega",
    "BaseClass", "triv", "length_mod_class", "mod_class", "group_class", "load_base", "parse_morphism",
    "stutters", "is_c_aperiodic", "membership",
    "PowersetSemiring", "RatingMap", "canonical_rating_map", "ImprintSet", "BudgetExceeded",
    "saturate", "saturate_finite", "saturate_group", "full_imprint",
    "CoverInstance", "Verdict", "decide_cover", "decide_separation", "membership_via_covering",
]
