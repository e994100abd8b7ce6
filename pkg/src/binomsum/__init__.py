"""Exact-arithmetic computation and verification of a binomial-sum sequence.

The package computes the integer sequence s_n = inner_sum(n) / ((2n-1) C(3n,n))
and mechanically verifies the divisibility, inequality, congruence, and
asymptotic claims attached to it, emitting machine-readable certificates.
"""

from .errors import FalsificationError
from .exact_arith import (
    FactoredInteger,
    PrimeSieve,
    ValuationTable,
    binomial,
    legendre_valuation,
    sieve_primes,
)
from .sequences import (
    SequenceValue,
    Summand,
    general_product,
    inner_sum,
    sequence_value,
    summand,
    summand_quotient,
    super_catalan,
)

__version__ = "0.1.0"

__all__ = [
    "FalsificationError",
    "FactoredInteger",
    "PrimeSieve",
    "ValuationTable",
    "binomial",
    "legendre_valuation",
    "sieve_primes",
    "SequenceValue",
    "Summand",
    "general_product",
    "inner_sum",
    "sequence_value",
    "summand",
    "summand_quotient",
    "super_catalan",
    "__version__",
]
