"""Generalized hypergeometric series 1F2 and 2F3, plain and regularized.

The two shapes this package needs are entire functions of z (more lower than
upper parameters), so a straight term-recurrence sum always converges:

    t_0 = 1,   t_{n+1} = t_n * prod(a_i + n) / prod(b_j + n) * z / (n + 1).

Whenever the argument is rational -- and every argument produced by the
coefficient formulas is, since it has the form -k^2/4 with rational k -- the
terms are accumulated as exact ``Fraction`` values and only the final partial
sum is rounded.  That makes results deterministic to the last digit and frees
the termination rule from rounding noise.

Termination: stop once two consecutive terms are each below
10^-(precision + guard) times the current partial-sum magnitude (floored at
one).  A single small term is not trusted because the coefficient-family
series alternate in sign and an individual term can be accidentally tiny.

The regularized variant divides each lower parameter's contribution by a
gamma function instead of a Pochhammer, which keeps the sum finite when a
lower parameter is a nonpositive integer: the reciprocal gamma is exactly
zero there, so the leading terms vanish until the parameter climbs past
zero.  With one half-integer lower parameter the regularized terms share a
common factor 1/sqrt(pi); the rational part is accumulated exactly and the
sqrt(pi) power is applied once at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .mpnum import (
    BigReal,
    DEFAULT_GUARD_DIGITS,
    _sqrt_pi_decimal,
    pochhammer,
    recip_gamma_exact,
)

SUPPORTED_SHAPES = ((1, 2), (2, 3))


class ShapeUnsupported(ValueError):
    """Parameter counts other than 1F2 or 2F3."""


class LowerParamPole(ValueError):
    """A lower parameter is a nonpositive integer (plain form only)."""


class TermCapExceeded(RuntimeError):
    """The series failed to meet the termination rule within the term cap.

    The cap is 10 * precision + 200 terms; hitting it means divergence or a
    bug, never something to truncate silently.
    """


@dataclass(frozen=True)
class HypParams:
    """Upper/lower parameter lists and the (real) argument."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    argument: BigReal

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.upper), len(self.lower))


def _check_shape(upper: tuple[Fraction, ...], lower: tuple[Fraction, ...]) -> None:
    if (len(upper), len(lower)) not in SUPPORTED_SHAPES:
        raise ShapeUnsupported(
            f"supported shapes are 1F2 and 2F3, got {len(upper)}F{len(lower)}"
        )


def _is_nonpositive_int(q: Fraction) -> bool:
    return q.denominator == 1 and q <= 0


def term_direct(
    upper: tuple[Fraction, ...], lower: tuple[Fraction, ...], z: Fraction, n: int
) -> Fraction:
    """Term n of the plain series from first principles (no recurrence)."""
    num = Fraction(1)
    for a in upper:
        num *= pochhammer(a, n)
    den = Fraction(1)
    for b in lower:
        den *= pochhammer(b, n)
    return num / den * z**n / math.factorial(n)


def term_cap(precision: int) -> int:
    return 10 * precision + 200


def plain_terms(
    upper: tuple[Fraction, ...], lower: tuple[Fraction, ...], z: Fraction
):
    """Exact series terms t_0, t_1, ... through the ratio recurrence."""
    term = Fraction(1)
    n = 0
    while True:
        yield term
        num = Fraction(1)
        for a in upper:
            num *= a + n
        den = Fraction(n + 1)
        for b in lower:
            den *= b + n
        term = term * num / den * z
        n += 1


def plain_sum_rational(
    upper: tuple[Fraction, ...],
    lower: tuple[Fraction, ...],
    z: Fraction,
    precision: int,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> Fraction:
    """Exact partial sum of pFq meeting the two-small-terms rule."""
    for b in lower:
        if _is_nonpositive_int(b):
            raise LowerParamPole(f"lower parameter {b} is a nonpositive integer")
    floor = Fraction(1, 10 ** (precision + guard))
    cap = term_cap(precision)
    total = Fraction(0)
    small_run = 0
    for n, term in enumerate(plain_terms(upper, lower, z)):
        if n > cap:
            raise TermCapExceeded(f"no convergence within {cap} terms")
        total += term
        thresh = floor * max(abs(total), Fraction(1))
        small_run = small_run + 1 if abs(term) < thresh else 0
        if n > 0 and small_run >= 2:
            break
    return total


def regularized_sum_rational(
    upper: tuple[Fraction, ...],
    lower: tuple[Fraction, ...],
    z: Fraction,
    precision: int,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> tuple[Fraction, int]:
    """Exact regularized sum as ``(q, s)`` with value q * sqrt(pi)^s.

    Lower parameters must be integers or half-integers so the reciprocal
    gammas stay exact.  Nonpositive-integer lower parameters zero out the
    head of the series; summation starts at the first index where every
    integer lower parameter has climbed to one or above.
    """
    n0 = 0
    for b in lower:
        if _is_nonpositive_int(b):
            n0 = max(n0, 1 - int(b))

    # A terminating numerator that dies before the head vanishes leaves
    # nothing to sum.
    for a in upper:
        if _is_nonpositive_int(a) and -int(a) < n0:
            return Fraction(0), 0

    first = Fraction(1)
    for a in upper:
        first *= pochhammer(a, n0)
    sqrtpi_power = 0
    for b in lower:
        q, s = recip_gamma_exact(b + n0)
        first *= q
        sqrtpi_power += s
    first *= z**n0 / math.factorial(n0)

    floor = Fraction(1, 10 ** (precision + guard))
    cap = term_cap(precision) + n0
    term = first
    total = first
    small_run = 0
    n = n0
    while small_run < 2:
        if n > cap:
            raise TermCapExceeded(f"no convergence within {cap} terms")
        num = Fraction(1)
        for a in upper:
            num *= a + n
        den = Fraction(n + 1)
        for b in lower:
            den *= b + n
        term = term * num / den * z
        n += 1
        total += term
        thresh = floor * max(abs(total), Fraction(1))
        small_run = small_run + 1 if abs(term) < thresh else 0
    return total, sqrtpi_power


def _argument_fraction(params: HypParams) -> Fraction:
    return params.argument.to_fraction()


def hyp_pfq(
    params: HypParams, precision: int, guard: int = DEFAULT_GUARD_DIGITS
) -> BigReal:
    """Plain 1F2 or 2F3 at ``precision`` digits."""
    _check_shape(params.upper, params.lower)
    total = plain_sum_rational(
        params.upper, params.lower, _argument_fraction(params), precision, guard
    )
    return BigReal.from_fraction(total, precision)


def hyp_pfq_regularized(
    params: HypParams, precision: int, guard: int = DEFAULT_GUARD_DIGITS
) -> BigReal:
    """Regularized 1F2~ or 2F3~ at ``precision`` digits."""
    _check_shape(params.upper, params.lower)
    q, s = regularized_sum_rational(
        params.upper, params.lower, _argument_fraction(params), precision, guard
    )
    if s == 0:
        return BigReal.from_fraction(q, precision)
    with localcontext() as ctx:
        ctx.prec = precision + guard
        d = Decimal(q.numerator) / Decimal(q.denominator)
        d *= _sqrt_pi_decimal(precision + guard) ** s
    return BigReal(d, precision)
