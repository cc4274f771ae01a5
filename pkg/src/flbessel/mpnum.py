"""Exact and arbitrary-precision arithmetic primitives.

Everything downstream rests on two carriers:

``Rat``
    An exact integer ratio.  This is ``fractions.Fraction`` verbatim: it is
    always in lowest terms, keeps a positive denominator, and represents zero
    as 0/1, which is exactly the contract we need.

``BigReal``
    An immutable arbitrary-precision real: a ``decimal.Decimal`` value that
    has been rounded (half-even) to a stated number of significant decimal
    digits, together with that digit count.  A ``BigReal`` is canonical --
    the stored value carries no hidden digits beyond ``precision`` -- so
    rendering to text and parsing back is the identity.

On top of those sit the small number-theoretic helpers the series machinery
needs: square root of pi, gamma at integer and half-integer arguments,
Pochhammer symbols, binomials, and trial-division factorization of
near-integer reciprocals over a small prime base.

All values are immutable and all functions are pure; any of this may be
called concurrently without locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from functools import lru_cache

Rat = Fraction

#: Extra working digits carried by intermediate computations.  Displayed
#: coefficients converge only when summation runs well past the display
#: precision, so every routine that rounds to ``precision`` digits computes
#: with ``precision + DEFAULT_GUARD_DIGITS`` first.
DEFAULT_GUARD_DIGITS = 16

#: Default factor base: trial division runs over primes up to this bound.
DEFAULT_PRIME_BOUND = 19


class NotNearInteger(ValueError):
    """Reciprocal of a coefficient is not close enough to an integer.

    Raised by :func:`factorize_reciprocal` when the rounding gap exceeds the
    caller's tolerance.  This is the signal that the series feeding the
    coefficient was truncated too early or computed at too low a precision.
    """


def _round_sig(value: Decimal, digits: int) -> Decimal:
    """Round ``value`` to ``digits`` significant digits, half-even."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if value.is_zero():
        return Decimal(0)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        return +value


def render_significant(value: Decimal, digits: int) -> str:
    """Render ``value`` with exactly ``digits`` significant digits.

    Plain positional notation is used when the leading digit sits at
    10^-5 or above and the integer part fits inside the significant digits;
    otherwise scientific notation with a lowercase ``e`` and a bare signed
    exponent.  Trailing zeros are kept: the digit count is part of the
    contract.
    """
    r = _round_sig(value, digits)
    if r.is_zero():
        return "0"
    sign, ds, _ = r.as_tuple()
    mant = "".join(map(str, ds)).ljust(digits, "0")
    adj = r.adjusted()
    prefix = "-" if sign else ""
    if -5 <= adj < digits:
        if adj >= 0:
            int_part = mant[: adj + 1]
            frac_part = mant[adj + 1 :]
            body = int_part + ("." + frac_part if frac_part else "")
        else:
            body = "0." + "0" * (-adj - 1) + mant
        return prefix + body
    head = mant[0] + ("." + mant[1:] if len(mant) > 1 else "")
    return f"{prefix}{head}e{adj}"


@dataclass(frozen=True)
class BigReal:
    """An arbitrary-precision real, canonical at ``precision`` digits.

    ``value`` is always the half-even rounding of whatever was computed to
    ``precision`` significant digits, so two ``BigReal`` built from the same
    inputs are bit-identical and ``parse(str(x)) == x``.
    """

    value: Decimal
    precision: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        object.__setattr__(self, "value", _round_sig(self.value, self.precision))

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_fraction(cls, q: Fraction, precision: int) -> "BigReal":
        """Exact rational -> BigReal, one correctly rounded division."""
        if q == 0:
            return cls(Decimal(0), precision)
        with localcontext() as ctx:
            ctx.prec = precision + 2
            ctx.rounding = ROUND_HALF_EVEN
            d = Decimal(q.numerator) / Decimal(q.denominator)
        return cls(d, precision)

    @classmethod
    def from_int(cls, n: int, precision: int) -> "BigReal":
        return cls(Decimal(n), precision)

    @classmethod
    def parse(cls, text: str, precision: int | None = None) -> "BigReal":
        """Parse decimal text; precision defaults to the digits present."""
        d = Decimal(text.strip())
        if precision is None:
            ndigits = len(d.as_tuple().digits)
            precision = max(ndigits, 1)
        return cls(d, precision)

    # -- conversions --------------------------------------------------------

    def to_fraction(self) -> Fraction:
        """Exact value of the stored (already rounded) decimal."""
        return Fraction(self.value)

    def __str__(self) -> str:
        return render_significant(self.value, self.precision)

    def render(self, digits: int | None = None) -> str:
        return render_significant(self.value, digits or self.precision)

    # -- predicates and ordering -------------------------------------------

    @property
    def sign(self) -> int:
        if self.value.is_zero():
            return 0
        return -1 if self.value.is_signed() else 1

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __lt__(self, other: "BigReal") -> bool:
        return self.value < other.value

    def __le__(self, other: "BigReal") -> bool:
        return self.value <= other.value

    # -- arithmetic (correctly rounded at the result precision) -------------

    def _result_prec(self, other: "BigReal", precision: int | None) -> int:
        if precision is not None:
            return precision
        return min(self.precision, other.precision)

    def add(self, other: "BigReal", precision: int | None = None) -> "BigReal":
        p = self._result_prec(other, precision)
        with localcontext() as ctx:
            ctx.prec = p + 2
            d = self.value + other.value
        return BigReal(d, p)

    def sub(self, other: "BigReal", precision: int | None = None) -> "BigReal":
        p = self._result_prec(other, precision)
        with localcontext() as ctx:
            ctx.prec = p + 2
            d = self.value - other.value
        return BigReal(d, p)

    def mul(self, other: "BigReal", precision: int | None = None) -> "BigReal":
        p = self._result_prec(other, precision)
        with localcontext() as ctx:
            ctx.prec = p + 2
            d = self.value * other.value
        return BigReal(d, p)

    def div(self, other: "BigReal", precision: int | None = None) -> "BigReal":
        if other.value.is_zero():
            raise ZeroDivisionError("BigReal division by zero")
        p = self._result_prec(other, precision)
        with localcontext() as ctx:
            ctx.prec = p + 2
            d = self.value / other.value
        return BigReal(d, p)

    def sqrt(self, precision: int | None = None) -> "BigReal":
        if self.value < 0:
            raise ValueError("BigReal sqrt of a negative value")
        p = precision if precision is not None else self.precision
        with localcontext() as ctx:
            ctx.prec = p + 2
            d = self.value.sqrt()
        return BigReal(d, p)

    # copy_negate/copy_abs: the operator forms would round to the ambient
    # decimal context, which is narrower than our precision.
    def __neg__(self) -> "BigReal":
        return BigReal(self.value.copy_negate(), self.precision)

    def __abs__(self) -> "BigReal":
        return BigReal(self.value.copy_abs(), self.precision)


# ---------------------------------------------------------------------------
# pi and sqrt(pi)
# ---------------------------------------------------------------------------


def _atan_inv_fraction(x: int, digits: int) -> Fraction:
    """arctan(1/x) as an exact partial sum good to ``digits`` digits.

    Alternating series, so the error is below the first omitted term;
    terms shrink by a factor x^2 each step.
    """
    bound = Fraction(1, 10**digits)
    total = Fraction(0)
    term = Fraction(1, x)
    n = 0
    while abs(term) > bound:
        total += term
        n += 1
        term = Fraction((-1) ** n, (2 * n + 1) * x ** (2 * n + 1))
    return total


@lru_cache(maxsize=None)
def _pi_fraction(digits: int) -> Fraction:
    """pi via Machin's formula, accurate to ``digits`` decimal digits."""
    d = digits + 5
    return 16 * _atan_inv_fraction(5, d) - 4 * _atan_inv_fraction(239, d)


def pi_big(precision: int) -> BigReal:
    """pi rounded to ``precision`` significant digits."""
    return BigReal.from_fraction(_pi_fraction(precision + 5), precision)


@lru_cache(maxsize=None)
def _sqrt_pi_decimal(digits: int) -> Decimal:
    q = _pi_fraction(digits + 5)
    with localcontext() as ctx:
        ctx.prec = digits + 5
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return d.sqrt()


def sqrt_pi(precision: int) -> BigReal:
    """Square root of pi to ``precision`` digits."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    return BigReal(_sqrt_pi_decimal(precision + 2), precision)


# ---------------------------------------------------------------------------
# gamma at integer and half-integer arguments
# ---------------------------------------------------------------------------


def gamma_int_exact(n: int) -> int:
    """Gamma(n) = (n-1)! for positive integer n."""
    if n <= 0:
        raise ValueError("gamma pole: nonpositive integer argument")
    return math.factorial(n - 1)


def gamma_half_exact(m: int) -> Fraction:
    """Gamma(m + 1/2) / sqrt(pi) as an exact rational, m >= 0.

    Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!).
    """
    if m < 0:
        raise ValueError("half-integer gamma below 1/2 is not needed here")
    return Fraction(math.factorial(2 * m), 4**m * math.factorial(m))


def gamma_half_int(twice_arg: int, precision: int) -> BigReal:
    """Gamma(twice_arg / 2) for positive twice_arg.

    Integer arguments give the exact factorial; half-integer arguments give
    the exact rational multiple of sqrt(pi), rendered at ``precision``.
    """
    if twice_arg <= 0:
        raise ValueError("gamma: argument must be positive")
    if twice_arg % 2 == 0:
        return BigReal.from_int(gamma_int_exact(twice_arg // 2), precision)
    m = (twice_arg - 1) // 2
    coeff = gamma_half_exact(m)
    with localcontext() as ctx:
        ctx.prec = precision + 4
        d = (
            Decimal(coeff.numerator)
            / Decimal(coeff.denominator)
            * _sqrt_pi_decimal(precision + 4)
        )
    return BigReal(d, precision)


def recip_gamma_exact(arg: Fraction) -> tuple[Fraction, int]:
    """1 / Gamma(arg) for integer or positive half-integer ``arg``.

    Returns ``(q, s)`` meaning q * pi^(s/2).  At nonpositive integers the
    reciprocal gamma is exactly zero, which is what lets the regularized
    hypergeometric series start cleanly past its vanishing head.
    """
    if arg.denominator == 1:
        n = int(arg)
        if n <= 0:
            return Fraction(0), 0
        return Fraction(1, gamma_int_exact(n)), 0
    if arg.denominator == 2:
        m = (arg.numerator - 1) // 2
        if m < 0:
            raise ValueError("reciprocal gamma below 1/2 not supported")
        return 1 / gamma_half_exact(m), -1
    raise ValueError(f"gamma argument must be integer or half-integer, got {arg}")


# ---------------------------------------------------------------------------
# Pochhammer symbols and binomials
# ---------------------------------------------------------------------------


def pochhammer(a: Fraction, n: int) -> Fraction:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    prod = Fraction(1)
    for i in range(n):
        prod *= a + i
    return prod


def pochhammer_reflect(a: Fraction, n: int) -> Fraction:
    """(-a)_n computed through the reflection (-a)_n = (-1)^n (a-n+1)_n."""
    return (-1) ** n * pochhammer(a - n + 1, n)


def binomial(n: int, r: int) -> int:
    """C(n, r) with the out-of-range convention C(n, r) = 0."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


# ---------------------------------------------------------------------------
# Prime-power factorization of near-integer reciprocals
# ---------------------------------------------------------------------------


def primes_up_to(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return tuple(i for i in range(2, bound + 1) if sieve[i])


@dataclass(frozen=True)
class PrimePowers:
    """Factorization sign * leftover * prod(p^e) of a positive integer.

    ``exponents`` holds only the primes that actually divide the integer;
    ``leftover`` carries whatever survives trial division by the factor base.
    """

    exponents: tuple[tuple[int, int], ...]
    leftover: int
    sign: int

    def exponent(self, p: int) -> int:
        for q, e in self.exponents:
            if q == p:
                return e
        return 0

    def reconstruct(self) -> int:
        n = self.leftover
        for p, e in self.exponents:
            n *= p**e
        return self.sign * n


def nearest_integer_gap(c: BigReal | Fraction) -> tuple[int, Fraction]:
    """Nearest integer to 1/|c| and the exact distance to it."""
    q = c if isinstance(c, Fraction) else c.to_fraction()
    if q == 0:
        raise ValueError("cannot take the reciprocal of zero")
    r = 1 / abs(q)
    nearest = round(r)
    return nearest, abs(r - nearest)


def factorize_reciprocal(
    c: BigReal | Fraction,
    rounding_tol: BigReal | Fraction | Decimal,
    prime_bound: int = DEFAULT_PRIME_BOUND,
) -> PrimePowers:
    """Round 1/|c| to an integer and trial-divide it over small primes.

    ``rounding_tol`` bounds the fractional distance between 1/|c| and the
    nearest integer (so it must lie strictly inside (0, 1/2): a gap of 1/2
    would make "nearest" meaningless).  A gap beyond the tolerance raises
    :class:`NotNearInteger` -- the series behind ``c`` has not converged far
    enough.  A leftover factor above the prime bound is not an error; it is
    reported in the result.
    """
    if isinstance(rounding_tol, BigReal):
        tol = rounding_tol.to_fraction()
    elif isinstance(rounding_tol, Decimal):
        tol = Fraction(rounding_tol)
    else:
        tol = Fraction(rounding_tol)
    if not (0 < tol < Fraction(1, 2)):
        raise ValueError("rounding_tol must lie in (0, 1/2)")

    q = c if isinstance(c, Fraction) else c.to_fraction()
    if q == 0:
        raise ValueError("cannot factorize the reciprocal of zero")
    nearest, gap = nearest_integer_gap(q)
    if nearest < 1 or gap > tol:
        raise NotNearInteger(
            f"1/|c| = {float(1 / abs(q)):.6g} is {float(gap):.3g} away from "
            f"the nearest integer (tolerance {float(tol):.3g})"
        )

    n = nearest
    exps = []
    for p in primes_up_to(prime_bound):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            exps.append((p, e))
    return PrimePowers(
        exponents=tuple(exps), leftover=n, sign=1 if q > 0 else -1
    )
