"""Falsification probability of a truncated-hash authentication path.

Substituting one data block and re-folding a fixed path of length ``m``
gives ``m + 1`` independent chances for the forged chain to collide with
the genuine one -- one at the leaf, one per level.  With ``b`` output bits
each chance hits with probability ``2^-b``, so

    exact   P(b, m) = 1 - (1 - 2^-b)^(m+1)
    approx  P(b, m) ~ 2^-b + exp(-2^-b) - exp(-(m+1) * 2^-b)

The exact form is evaluated in the log domain (``log1p``/``expm1``) at
``PRECISION_DPS`` significant digits, so it survives ``2^-b`` being far
below double-precision resolution.  An exact ``Fraction`` companion is
attached while the numerators stay small (``b * (m+1) <= 4096`` bits).
The approximation is reported raw: it exceeds 1 for small ``b`` and large
``m`` and is a diagnostic of the expansion, not a probability.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf

# Stated working precision for Probability values; computations carry a few
# guard digits on top.
PRECISION_DPS = 64
_GUARD_DPS = 8

# Populate the exact rational companion only while the numerator of
# (2^b - 1)^(m+1) / 2^(b(m+1)) stays below this many bits.
RATIONAL_BITS_LIMIT = 4096

# Grids reproducing the published difference table.
DEFAULT_BITS = (2, 4, 6, 8, 10)
DEFAULT_PATH_LENS = (10, 50, 100, 500, 1000)

# Scale guard for the literal term-by-term sum (cross-check oracle only).
TERMSUM_MAX_BITS = 16
TERMSUM_MAX_PATH_LEN = 4096


@dataclass(frozen=True)
class PathParams:
    """A (bits, path length) cell: b output bits, m path levels."""

    bits: int
    path_len: int

    def __post_init__(self) -> None:
        if not isinstance(self.bits, int) or self.bits < 1:
            raise ValueError(f"bits must be a positive integer, got {self.bits!r}")
        if not isinstance(self.path_len, int) or self.path_len < 0:
            raise ValueError(
                f"path_len must be a non-negative integer, got {self.path_len!r}"
            )


@dataclass(frozen=True)
class Probability:
    """High-precision probability value, optionally with an exact rational."""

    value: mpf
    exact_rational: Fraction | None = None


@dataclass(frozen=True)
class FalsificationEstimate:
    """Exact and approximate probabilities for one cell, and their gap."""

    params: PathParams
    exact: Probability
    approx: Probability
    abs_diff: mpf


def single_collision_prob(bits: int) -> Probability:
    """Probability 2^-b that two distinct inputs share a b-bit digest."""
    params = PathParams(bits, 0)  # reuse validation
    with mpmath.workdps(PRECISION_DPS + _GUARD_DPS):
        value = mpf(2) ** (-params.bits)
    return Probability(value, Fraction(1, 1 << bits))


def exact_falsification_prob(params: PathParams) -> Probability:
    """Exact match probability 1 - (1 - 2^-b)^(m+1).

    Evaluated as -expm1((m+1) * log1p(-2^-b)) so no precision is lost when
    2^-b underflows ordinary doubles.
    """
    b, m = params.bits, params.path_len
    with mpmath.workdps(PRECISION_DPS + _GUARD_DPS):
        x = mpf(2) ** (-b)
        value = -mpmath.expm1((m + 1) * mpmath.log1p(-x))
    rational = None
    if b * (m + 1) <= RATIONAL_BITS_LIMIT:
        rational = 1 - Fraction((1 << b) - 1, 1 << b) ** (m + 1)
    return Probability(value, rational)


def no_collision_log_prob(params: PathParams) -> mpf:
    """Natural log of the survival probability 1 - P = (1 - 2^-b)^(m+1).

    Equals (m+1) * log1p(-2^-b).  Stays finite and strictly ordered in b and
    m long after 1 - P itself underflows any fixed working precision (e.g.
    b=1, m=10^6, where the survival mass is ~10^-301030).
    """
    b, m = params.bits, params.path_len
    with mpmath.workdps(PRECISION_DPS + _GUARD_DPS):
        return (m + 1) * mpmath.log1p(-mpf(2) ** (-b))


def exact_falsification_prob_termsum(params: PathParams) -> Probability:
    """Literal sum 1/2^b + sum_{k=1}^{m} (1 - 1/2^b)^k / 2^b, exact rationals.

    Cross-check oracle for the closed form; guarded to small scales because
    the per-term rationals grow with every level.
    """
    b, m = params.bits, params.path_len
    if b > TERMSUM_MAX_BITS or m > TERMSUM_MAX_PATH_LEN:
        raise ValueError(
            f"term sum limited to bits <= {TERMSUM_MAX_BITS} and "
            f"path_len <= {TERMSUM_MAX_PATH_LEN}, got ({b}, {m})"
        )
    p = Fraction(1, 1 << b)
    q = 1 - p
    total = p
    term = p
    for _ in range(m):
        term *= q
        total += term
    with mpmath.workdps(PRECISION_DPS + _GUARD_DPS):
        value = mpf(total.numerator) / mpf(total.denominator)
    return Probability(value, total)


def geometric_sum(g: Fraction | int, z: Fraction | int, m: int) -> Fraction:
    """Sum of the first m terms of a geometric progression: g(1 - z^m)/(1 - z)."""
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"term count must be a non-negative integer, got {m!r}")
    g = Fraction(g)
    z = Fraction(z)
    if z == 1:
        raise ValueError("ratio z == 1 has no closed form; sum is g*m")
    if m == 0:
        return Fraction(0)
    return g * (1 - z**m) / (1 - z)


def approx_falsification_prob(params: PathParams) -> Probability:
    """Exponential approximation 2^-b + exp(-2^-b) - exp(-(m+1) * 2^-b).

    Computed as 2^-b - exp(-x) * expm1(-m*x), which is the same expression
    with the near-cancelling exponentials folded into one expm1.  Not
    clamped: values above 1 are reported as-is.
    """
    b, m = params.bits, params.path_len
    with mpmath.workdps(PRECISION_DPS + _GUARD_DPS):
        x = mpf(2) ** (-b)
        value = x - mpmath.exp(-x) * mpmath.expm1(-m * x)
    return Probability(value, None)


def approximation_error(params: PathParams) -> FalsificationEstimate:
    """Exact and approximate values side by side with |approx - exact|."""
    exact = exact_falsification_prob(params)
    approx = approx_falsification_prob(params)
    with mpmath.workdps(PRECISION_DPS + _GUARD_DPS):
        diff = abs(approx.value - exact.value)
    return FalsificationEstimate(params, exact, approx, diff)


def diff_table(
    bits_list=DEFAULT_BITS, path_lens=DEFAULT_PATH_LENS
) -> list[FalsificationEstimate]:
    """approximation_error over bits_list x path_lens, row-major."""
    if not bits_list or not path_lens:
        raise ValueError("bits_list and path_lens must be non-empty")
    return [
        approximation_error(PathParams(b, m)) for b in bits_list for m in path_lens
    ]
