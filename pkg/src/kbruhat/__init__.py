"""Universal k-Bruhat order, its monoid, and Schubert-times-Schur structure constants."""

from .constants import (ConstantsReport, all_constants, c_constant, c_constant_dual,
                        check_cyclic, check_disjoint, d_lambda, e_prime_set, e_set,
                        h_set, lambda_sigma, schubert_coeff, verify_identity,
                        weakly_fits)
from .errors import DomainError, InvariantError, NonTerminationError, ResourceLimitError
from .insertion import RULES, apply_rule, insert, insert_trace
from .korder import (Chain, MarkedInterval, all_chains, chain_inversions, chain_to_word,
                     cm_chain, count_chains, covers_k, dcm_chain, interval, leq_k,
                     word_to_chain)
from .perm import (IDENTITY, Permutation, compose, grassmannian, inverse, length,
                   omega_conjugate, parse_partition, parse_permutation, phi_star, sign,
                   up_dw_fix)
from .tableaux import f_lambda, lr_coefficient
from .umonoid import (ZERO, apply_generator, evaluate_word, hasse_interval, leq_universal,
                      mobius, rank_polynomial, reduced_words, rewrite_closure,
                      rewrite_neighbors, standard_interval, universal_length)
from .words import Generator, format_word, parse_word, word

__version__ = "0.1.0"

__all__ = [
    "Permutation", "IDENTITY", "compose", "inverse", "length", "sign", "up_dw_fix",
    "grassmannian", "omega_conjugate", "phi_star", "parse_permutation", "parse_partition",
    "Generator", "word", "format_word", "parse_word",
    "MarkedInterval", "Chain", "interval", "leq_k", "covers_k", "cm_chain", "dcm_chain",
    "chain_inversions", "all_chains", "count_chains", "chain_to_word", "word_to_chain",
    "ZERO", "universal_length", "standard_interval", "apply_generator", "evaluate_word",
    "leq_universal", "reduced_words", "rewrite_neighbors", "rewrite_closure",
    "hasse_interval", "mobius", "rank_polynomial",
    "weakly_fits", "h_set", "e_set", "e_prime_set", "lambda_sigma", "c_constant",
    "c_constant_dual", "schubert_coeff", "all_constants", "verify_identity",
    "ConstantsReport", "check_cyclic", "check_disjoint", "d_lambda",
    "f_lambda", "lr_coefficient",
    "RULES", "apply_rule", "insert", "insert_trace",
    "DomainError", "InvariantError", "ResourceLimitError", "NonTerminationError",
]
