"""Exact arithmetic, exp/log and derivation on surreal numbers in Conway normal form."""

from .dyadic import Dyadic, decode_sign, encode_sign, compare_lex, is_simpler
from .cuts import CutExpr, simplest_between, canonical_cut, genetic_add, genetic_mul, genetic_neg
from .ordinals import Ordinal, natural_sum, natural_product, omega_pow, parse_ordinal
from .series import (Surreal, ZERO, ONE, OMEGA, EPS0, Order, Relation, nf_add, nf_mul,
                     nf_neg, nf_div, nf_invert, nf_compare, omega_map, nth_root,
                     additive_decompose, multiplicative_decompose, archimedean_relate,
                     sum_of_stream)
from .explog import exp_nf, log_nf, g_map, h_map, LogAtomic, lambda_of_level, is_log_atomic
from .derivation import derive, d, asymptotic_integrate, check_derivation_axioms
from .expr import parse, evaluate
from .render import render

__version__ = "0.1.0"
