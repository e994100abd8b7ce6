"""The exact sequences: summands, their sums, and the integer quotients.

Every summand A(n, k) factors as half_summand(k) * half_summand(n - k), so
sweeps cache the half products once and the inner sums become cheap big-int
convolutions.  All divisions are checked exact; a nonzero remainder is a
falsification, never a rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FalsificationError
from .exact_arith import (
    FactoredInteger,
    FactorialValuations,
    _count_op,
    binomial,
    binomial_factored,
    factorial_factored,
    fi_div,
    fi_from_integer,
    fi_is_integral,
    fi_mul,
    fi_one,
    fi_to_integer,
)

__all__ = [
    "Summand",
    "SequenceValue",
    "SuperCatalanValue",
    "super_catalan",
    "summand",
    "half_summand",
    "ensure_half_summands",
    "inner_sum",
    "divisor",
    "sequence_value",
    "sequence_range",
    "summand_quotient",
    "general_product",
]


@dataclass(frozen=True)
class Summand:
    """One product of four binomials, both reconstructed and factored."""

    n: int
    k: int
    value: int
    factored: FactoredInteger


@dataclass(frozen=True)
class SequenceValue:
    """s = sum / divisor, with the division checked exact."""

    n: int
    s: int
    sum: int
    divisor: int


@dataclass(frozen=True)
class SuperCatalanValue:
    a: int
    b: int
    value: int


def super_catalan(a: int, b: int) -> SuperCatalanValue:
    """(2a)!(2b)! / (a! b! (a+b)!), asserted integral before reconstruction."""
    if a < 0 or b < 0:
        raise ValueError("arguments must be nonnegative")
    num = fi_mul(factorial_factored(2 * a), factorial_factored(2 * b))
    den = fi_mul(
        fi_mul(factorial_factored(a), factorial_factored(b)),
        factorial_factored(a + b),
    )
    ratio = fi_div(num, den)
    if not fi_is_integral(ratio):
        raise FalsificationError(
            "super_catalan", {"a": a, "b": b}, "ratio is not an integer"
        )
    return SuperCatalanValue(a, b, fi_to_integer(ratio))


def _half_factored(j: int) -> FactoredInteger:
    """C(6j,3j) * C(3j,j) as an exponent vector: (6j)! / ((3j)! (2j)! j!)."""
    if j == 0:
        return fi_one()
    num = factorial_factored(6 * j)
    den = fi_mul(
        fi_mul(factorial_factored(3 * j), factorial_factored(2 * j)),
        factorial_factored(j),
    )
    return fi_div(num, den)


_half_cache: dict[int, int] = {0: 1}


def half_summand(j: int) -> int:
    """C(6j,3j) * C(3j,j); cached because sweeps reuse it heavily."""
    v = _half_cache.get(j)
    if v is None:
        v = fi_to_integer(_half_factored(j))
        _half_cache[j] = v
    return v


def ensure_half_summands(n_max: int) -> None:
    """Batch-fill the half-summand cache for all j <= n_max.

    Builds one vectorized valuation table keyed by 6 * n_max and
    reconstructs each value from its exponent vector.
    """
    missing = [j for j in range(n_max + 1) if j not in _half_cache]
    if not missing:
        return
    vals = FactorialValuations(max(6 * n_max, 2))
    for j in missing:
        exps = vals.column_sum([6 * j], [3 * j, 2 * j, j])
        _half_cache[j] = vals.reconstruct(exps)


def summand(n: int, k: int) -> Summand:
    """A(n, k): the four-binomial product, exact and factored."""
    if k < 0 or k > n:
        raise ValueError(f"k={k} out of range for n={n}")
    value = half_summand(k) * half_summand(n - k)
    factored = fi_mul(_half_factored(k), _half_factored(n - k))
    return Summand(n, k, value, factored)


def inner_sum(n: int) -> int:
    """Sum of A(n, k) over k = 0..n, exact."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    halves = [half_summand(j) for j in range(n + 1)]
    total = 0
    for k in range(n + 1):
        _count_op()
        total += halves[k] * halves[n - k]
    return total


def divisor(n: int) -> int:
    """(2n - 1) * C(3n, n); negative exactly at n = 0."""
    return (2 * n - 1) * binomial(3 * n, n)


def sequence_value(n: int) -> SequenceValue:
    """s_n = inner_sum(n) / divisor(n), with the division checked exact."""
    total = inner_sum(n)
    d = divisor(n)
    q, r = divmod(total, d)
    if r != 0:
        raise FalsificationError(
            "sequence_value", {"n": n}, f"integrality violated: remainder {r}"
        )
    return SequenceValue(n, q, total, d)


def sequence_range(n_max: int) -> list[SequenceValue]:
    """s_0 .. s_{n_max} from one shared half-summand batch."""
    ensure_half_summands(n_max)
    return [sequence_value(n) for n in range(n_max + 1)]


def summand_quotient(n: int, k: int) -> int:
    """A(n, k) / ((2n-1) C(3n, n)), checked exact; defined for n >= 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 0 or k > n:
        raise ValueError(f"k={k} out of range for n={n}")
    value = half_summand(k) * half_summand(n - k)
    q, r = divmod(value, divisor(n))
    if r != 0:
        raise FalsificationError(
            "summand_quotient",
            {"n": n, "k": k},
            f"divisibility violated: remainder {r}",
        )
    return q


def general_product(m: int, n: int, k: int) -> FactoredInteger:
    """C(2mk,mk) C(mk,k) C(2m(n-k),m(n-k)) C(m(n-k),n-k), factored.

    The m = 3 case specializes to the summand A(n, k).
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    if k < 0 or k > n:
        raise ValueError(f"k={k} out of range for n={n}")
    j = n - k
    left = fi_mul(binomial_factored(2 * m * k, m * k), binomial_factored(m * k, k))
    right = fi_mul(binomial_factored(2 * m * j, m * j), binomial_factored(m * j, j))
    return fi_mul(left, right)
