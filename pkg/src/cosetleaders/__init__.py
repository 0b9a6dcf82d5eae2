"""Coset leaders of linear codes over GF(p^m) via the weak order ideal O(C).

Computes all coset leaders incrementally, the leader codewords L(C), and the
correctable/uncorrectable error taxonomy, with brute-force oracles for
checking every derived set on small codes.
"""
from .code import CosetTable, LinearCode, brute_force_coset_table, covering_radius, load_code, make_code
from .errors import ErrorClassification, H_set, classify_errors, is_trial_set, larger_halves, trial_set_from_leaders
from .exceptions import CosetLeadersError, TooLarge
from .field import FieldSpec, make_field
from .ideal import IdealRegistry, build_ideal, coset_leaders_of, is_coset_leader
from .leaders import LeaderSet, decode_gradient, descent_step, is_test_set, leader_codewords, zero_neighbours
from .order import DEGLEX, DEGREVLEX, LEX, OrderSpec

__all__ = [
    "CosetLeadersError", "CosetTable", "DEGLEX", "DEGREVLEX", "ErrorClassification", "FieldSpec",
    "H_set", "IdealRegistry", "LEX", "LeaderSet", "LinearCode", "OrderSpec", "TooLarge",
    "brute_force_coset_table", "build_ideal", "classify_errors", "coset_leaders_of",
    "covering_radius", "decode_gradient", "descent_step", "is_coset_leader", "is_test_set",
    "is_trial_set", "larger_halves", "leader_codewords", "load_code", "make_code", "make_field",
    "trial_set_from_leaders", "zero_neighbours",
]
