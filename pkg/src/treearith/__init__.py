"""Arithmetic on rooted unordered trees."""

from .arith import (DivisionUndefined, InvalidPath, SignedTree, SubtractionUndefined,
                    UndefinedOperation, UnstretchUndefined, add, commutes, div, graft, mul,
                    negate, power, prune, prune_at, scalar_mul, stretch, stretch_pow, sub,
                    unstretch)
from .core import ONE, CanonTree, DecodeError, RawTree, canonize, decode, encode, from_code, measures
from .enumeration import (EnumerationConfig, LimitExceeded, Rank, count, doubling_rule, family,
                          family_codes, random_tree, rank, size_multisets, unrank)
from .equations import (LinearSolution, NoSolution, check_eq4_necessary, quasi_pythagorean,
                        solve_eq2, solve_eq3)
from .expr import decompose, evaluate, parse_expr, to_text
from .prime import (FactorList, PrimalityUndefined, add_factorize, brute_force_is_mult_prime,
                    is_add_prime, is_mult_prime, mult_factorize, subtree_groups)

__version__ = "0.1.0"
