"""Numerical certification of the summed infinite-series identities.

Gathering the x^(2h) (even family) or x^(2h+1) (odd family) contributions
across the Legendre expansion produces, for every h, an infinite series of
1F2 values whose sum collapses to a single inverse-prime-power rational
times k^(2h) (resp. k^(2h+1)):

  even family:  sum over even L of
      sqrt(pi) (-1)^(L/2) 2^(-3L-2) * 2 * (2L+1) C(L, L/2) C(2L, L) k^L
      * 1F2(L/2+1/2; L/2+1, L+3/2; -k^2/4)
      / (Gamma(L+3/2) (L/2-h)!)  *  bracket(L, h)
    = (-1)^h 2^(-2h) k^(2h) / (h! Gamma(h+1))

  odd family:   sum over odd L of
      sqrt(pi) (-1)^((L-1)/2) 2^(-3L-2) * 2 * (2L+1) C(L, (L-1)/2) C(2L, L) k^L
      * 1F2(L/2+1; L/2+3/2, L+3/2; -k^2/4)
      / (Gamma(L+3/2) ((L-1)/2-h)!)  *  bracket(L, h)
    = (-1)^h 2^(-2h-1) k^(2h+1) / (h! Gamma(h+2))

The bracket is the monomial-extraction factor and exists in three
algebraically identical dress codes (``pochhammer``, ``reflected``,
``gammaform``); every term computes all three in exact rational arithmetic
and refuses to proceed if they disagree.  The factorial in the denominator
has a negative integer argument for the first h candidate terms, which is
why those terms vanish identically.

Everything is exact: each term is a rational number, each partial sum is a
rational number, and the only rounding happens when results are rendered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .hypergeom import plain_sum_rational
from .mpnum import (
    BigReal,
    DEFAULT_GUARD_DIGITS,
    gamma_half_exact,
    pochhammer,
)

FAMILIES = ("j0", "j1")
VARIANTS = ("pochhammer", "reflected", "gammaform")


class VariantMismatch(ArithmeticError):
    """The three bracket forms disagreed on a term (identities violated)."""


@dataclass(frozen=True)
class SumSpec:
    """One summed-series instance: family, bracket variant, h, scale, length."""

    family: str
    h: int
    k: Fraction
    L_terms: int
    precision: int = 50
    variant: str = "pochhammer"

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.h < 0:
            raise ValueError("h must be nonnegative")
        if self.L_terms < self.h + 1:
            raise ValueError("L_terms must be at least h+1: the first h terms vanish")
        object.__setattr__(self, "k", Fraction(self.k))


@dataclass(frozen=True)
class VerifyReport:
    spec: SumSpec
    lhs: BigReal
    rhs: BigReal
    rel_diff: BigReal
    passed: bool


@lru_cache(maxsize=None)
def _f12(N: int, L: int, k: Fraction, precision: int, guard: int) -> Fraction:
    z = -Fraction(k) ** 2 / 4
    if N == 0:
        upper = (Fraction(L + 1, 2),)
        lower = (Fraction(L + 2, 2), Fraction(2 * L + 3, 2))
    else:
        upper = (Fraction(L + 2, 2),)
        lower = (Fraction(L + 3, 2), Fraction(2 * L + 3, 2))
    return plain_sum_rational(upper, lower, z, precision, guard)


def _brackets(family: str, L: int, h: int, m: int) -> tuple[Fraction, Fraction, Fraction]:
    """The three equivalent monomial-extraction factors, m >= 0."""
    half = Fraction(1, 2)
    poch = (
        pochhammer(half - Fraction(L, 2), m)
        * pochhammer(-Fraction(L, 2), m)
        / pochhammer(half - L, m)
    )
    sign = -1 if m % 2 else 1
    if family == "j0":
        reflected = (
            sign
            * pochhammer(h + half, m)
            * pochhammer(Fraction(h + 1), m)
            / pochhammer(h + Fraction(L, 2) + half, m)
        )
        gammaform = (
            sign
            * Fraction(2) ** (2 * h - L)
            * math.factorial(L)
            * gamma_half_exact(h + L // 2)
            / (math.factorial(2 * h) * gamma_half_exact(L))
        )
    else:
        reflected = (
            sign
            * pochhammer(Fraction(h + 1), m)
            * pochhammer(h + Fraction(3, 2), m)
            / pochhammer(h + Fraction(L, 2) + 1, m)
        )
        gammaform = (
            sign
            * Fraction(2) ** (2 * h - L + 1)
            * math.factorial(L)
            * gamma_half_exact((2 * h + L + 1) // 2)
            / (math.factorial(2 * h + 1) * gamma_half_exact(L))
        )
    return poch, reflected, gammaform


def term_rational(
    spec: SumSpec, L: int, guard: int = DEFAULT_GUARD_DIGITS
) -> Fraction:
    """Exact value of the series term at index L (zero for the vanished head)."""
    h, k = spec.h, spec.k
    if spec.family == "j0":
        if L % 2:
            raise ValueError("even family sums even L only")
        m = L // 2 - h
        if m < 0:
            return Fraction(0)
        phase = -1 if (L // 2) % 2 else 1
        choose = math.comb(L, L // 2)
        fval = _f12(0, L, k, spec.precision, guard)
        mfact = math.factorial(m)
    else:
        if L % 2 == 0:
            raise ValueError("odd family sums odd L only")
        m = (L - 1) // 2 - h
        if m < 0:
            return Fraction(0)
        phase = -1 if ((L - 1) // 2) % 2 else 1
        choose = math.comb(L, (L - 1) // 2)
        fval = _f12(1, L, k, spec.precision, guard)
        mfact = math.factorial(m)

    poch, reflected, gammaform = _brackets(spec.family, L, h, m)
    if not (poch == reflected == gammaform):
        worst = max(abs(poch - reflected), abs(poch - gammaform))
        raise VariantMismatch(
            f"bracket forms disagree at L={L}, h={h} by {float(worst):.3g}"
        )
    bracket = {"pochhammer": poch, "reflected": reflected, "gammaform": gammaform}[
        spec.variant
    ]

    # sqrt(pi)/Gamma(L+3/2) is the exact rational 1/gamma_half_exact(L+1).
    pref = (
        Fraction(2 * (2 * L + 1), 2 ** (3 * L + 2))
        * phase
        * choose
        * math.comb(2 * L, L)
        * Fraction(k) ** L
        / (gamma_half_exact(L + 1) * mfact)
    )
    return pref * fval * bracket


def _l_values(spec: SumSpec) -> range:
    start = 0 if spec.family == "j0" else 1
    return range(start, start + 2 * spec.L_terms, 2)


def partial_sums_rational(
    spec: SumSpec, guard: int = DEFAULT_GUARD_DIGITS
) -> tuple[Fraction, ...]:
    """Running partial sums S_0, S_1, ... over the spec's term list."""
    total = Fraction(0)
    out = []
    for L in _l_values(spec):
        total += term_rational(spec, L, guard)
        out.append(total)
    return tuple(out)


def partial_sums(spec: SumSpec, guard: int = DEFAULT_GUARD_DIGITS) -> tuple[BigReal, ...]:
    return tuple(
        BigReal.from_fraction(q, spec.precision)
        for q in partial_sums_rational(spec, guard)
    )


def summed_series_lhs(spec: SumSpec, guard: int = DEFAULT_GUARD_DIGITS) -> BigReal:
    """Partial sum of the printed summand over L_terms parity terms."""
    total = Fraction(0)
    for L in _l_values(spec):
        total += term_rational(spec, L, guard)
    return BigReal.from_fraction(total, spec.precision)


def rhs_rational(spec: SumSpec) -> Fraction:
    h, k = spec.h, Fraction(spec.k)
    sign = -1 if h % 2 else 1
    if spec.family == "j0":
        return Fraction(sign, 4**h) / math.factorial(h) ** 2 * k ** (2 * h)
    return (
        Fraction(sign, 2 ** (2 * h + 1))
        / (math.factorial(h) * math.factorial(h + 1))
        * k ** (2 * h + 1)
    )


def summed_series_rhs(spec: SumSpec) -> BigReal:
    """The closed-form value the series converges to."""
    return BigReal.from_fraction(rhs_rational(spec), spec.precision)


def verify_identity(
    spec: SumSpec,
    rel_tol: Fraction | Decimal | BigReal,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> VerifyReport:
    """Compare both sides at relative tolerance ``rel_tol``.

    "Relative" means |lhs - rhs| / |rhs|, computed exactly before rendering.
    Failure is an outcome, not an exception.
    """
    if isinstance(rel_tol, BigReal):
        tol = rel_tol.to_fraction()
    else:
        tol = Fraction(rel_tol)
    lhs_q = sum(
        (term_rational(spec, L, guard) for L in _l_values(spec)), Fraction(0)
    )
    rhs_q = rhs_rational(spec)
    rel = abs(lhs_q - rhs_q) / abs(rhs_q)
    return VerifyReport(
        spec=spec,
        lhs=BigReal.from_fraction(lhs_q, spec.precision),
        rhs=BigReal.from_fraction(rhs_q, spec.precision),
        rel_diff=BigReal.from_fraction(rel, max(spec.precision, 8)),
        passed=rel <= tol,
    )


def cauchy_check(
    partials: Sequence[BigReal | Fraction],
    m: int,
    n: int,
    epsilon: Fraction | Decimal | BigReal,
) -> bool:
    """|S_m - S_n| < epsilon over a list of partial sums (0-based indices)."""
    if not (m > n >= 0):
        raise IndexError("need m > n >= 0")
    if m >= len(partials):
        raise IndexError("index m beyond the partial-sum list")

    def as_fraction(v: BigReal | Fraction) -> Fraction:
        return v.to_fraction() if isinstance(v, BigReal) else Fraction(v)

    if isinstance(epsilon, BigReal):
        eps = epsilon.to_fraction()
    else:
        eps = Fraction(epsilon)
    return abs(as_fraction(partials[m]) - as_fraction(partials[n])) < eps
