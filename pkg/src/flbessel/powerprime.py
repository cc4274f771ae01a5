"""Monomial conversion of Legendre expansions and prime-structure checks.

Expanding every P_L in a truncated expansion into monomials and gathering
like powers yields a polynomial approximant whose coefficient of x^m is

    c_m = sum_L a_L * [x^m](P_L),

a partial sum that converges (strikingly slowly in L) to the exact
ascending-series coefficient of the underlying function.  The exact
coefficients have reciprocals that are pure products of small primes once
the scale is divided out, and ``certify_prime_structure`` checks exactly
that: round 1/|c_m| to an integer, demand the rounding gap be small, and
trial-divide.  A gap that refuses to shrink is the footprint of an
under-truncated fold, not of a failed identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .legendre import monomials
from .mpnum import (
    BigReal,
    DEFAULT_GUARD_DIGITS,
    DEFAULT_PRIME_BOUND,
    NotNearInteger,
    PrimePowers,
    factorize_reciprocal,
    nearest_integer_gap,
)
from .series import FLSeries


@dataclass(frozen=True)
class PowerSeries:
    """Monomial coefficients folded out of an FLSeries.

    ``provenance`` records how many Legendre terms went into the fold; the
    coefficients are only as converged as that count allows.
    """

    kind: str
    order: int
    k: Fraction
    coeffs: tuple[tuple[int, BigReal], ...]
    provenance: int
    precision: int

    def coefficient(self, m: int) -> BigReal | None:
        for power, c in self.coeffs:
            if power == m:
                return c
        return None


@dataclass(frozen=True)
class FactorEntry:
    """Per-power certification outcome.

    ``factors`` is None when the reciprocal was not near an integer at the
    requested tolerance; ``gap`` always records the fractional distance
    between 1/|c_m| (scale divided out) and ``nearest``.
    """

    power: int
    factors: PrimePowers | None
    nearest: int
    gap: BigReal

    @property
    def certified(self) -> bool:
        return self.factors is not None


@dataclass(frozen=True)
class FactorReport:
    entries: tuple[FactorEntry, ...]

    def entry(self, m: int) -> FactorEntry | None:
        for e in self.entries:
            if e.power == m:
                return e
        return None

    @property
    def all_certified(self) -> bool:
        return all(e.certified for e in self.entries)


def to_power_series(
    s: FLSeries, max_power: int, guard: int = DEFAULT_GUARD_DIGITS
) -> PowerSeries:
    """Gather like powers of x across the expansion's Legendre terms.

    Folding a series whose entries stop short of ``max_power`` is allowed on
    purpose: the partial folds are exactly the convergence ladder worth
    inspecting row by row.
    """
    mono = {L: monomials(L).coeffs for L, _ in s.entries}
    coeffs: list[tuple[int, BigReal]] = []
    with localcontext() as ctx:
        ctx.prec = s.precision + guard
        for m in range(s.order % 2, max_power + 1, 2):
            total = Decimal(0)
            for L, a in s.entries:
                if m <= L:
                    q = mono[L][m]
                    if q:
                        total += a.value * (
                            Decimal(q.numerator) / Decimal(q.denominator)
                        )
            coeffs.append((m, BigReal(total, s.precision)))
    return PowerSeries(
        kind=s.kind,
        order=s.order,
        k=s.k,
        coeffs=tuple(coeffs),
        provenance=len(s.entries),
        precision=s.precision,
    )


def maclaurin_exact(
    kind: str, N: int, max_power: int, k: Fraction | int = 1
) -> tuple[tuple[int, Fraction], ...]:
    """Exact ascending-series coefficients of x^m for J_N(kx) or I_N(kx).

    The x^(2j+N) coefficient is (+-1)^j k^(2j+N) / (2^(2j+N) j! (j+N)!),
    alternating for J and all positive for I.
    """
    if kind not in ("J", "I"):
        raise ValueError(f"kind must be 'J' or 'I', got {kind!r}")
    k = Fraction(k)
    out = []
    j = 0
    while 2 * j + N <= max_power:
        m = 2 * j + N
        c = Fraction(1, 2**m) / (math.factorial(j) * math.factorial(j + N))
        if kind == "J" and j % 2 == 1:
            c = -c
        out.append((m, c * k**m))
        j += 1
    return tuple(out)


def exact_power_series(
    kind: str,
    N: int,
    max_power: int,
    k: Fraction | int = 1,
    precision: int = 70,
) -> PowerSeries:
    """The exact ascending-series coefficients rendered as a PowerSeries.

    ``provenance`` is 0: nothing was folded, these are the limits the folds
    converge to.  The default 70 digits leaves the reciprocal of the x^43
    coefficient (about 5e53) with room to spare for certification.
    """
    coeffs = tuple(
        (m, BigReal.from_fraction(c, precision))
        for m, c in maclaurin_exact(kind, N, max_power, k)
    )
    return PowerSeries(
        kind=kind, order=N, k=Fraction(k), coeffs=coeffs,
        provenance=0, precision=precision,
    )


def certify_prime_structure(
    p: PowerSeries,
    tol: Fraction | Decimal | BigReal = Fraction(1, 10**6),
    prime_bound: int = DEFAULT_PRIME_BOUND,
) -> FactorReport:
    """Factor the reciprocal of every coefficient over small primes.

    The scale's k^m is divided out first so the certificate targets the
    scale-free part.  Failures are recorded per entry, never raised.
    """
    entries = []
    for m, c in p.coeffs:
        q = c.to_fraction() / Fraction(p.k) ** m
        if q == 0:
            entries.append(
                FactorEntry(m, None, 0, BigReal.from_int(0, p.precision))
            )
            continue
        nearest, gap = nearest_integer_gap(q)
        try:
            factors = factorize_reciprocal(q, tol, prime_bound)
        except NotNearInteger:
            factors = None
        entries.append(
            FactorEntry(
                power=m,
                factors=factors,
                nearest=nearest,
                gap=BigReal.from_fraction(gap, p.precision),
            )
        )
    return FactorReport(entries=tuple(entries))


def compare_power_series(
    p: PowerSeries,
    exact: tuple[tuple[int, Fraction], ...],
    guard: int = DEFAULT_GUARD_DIGITS,
) -> tuple[tuple[int, BigReal], ...]:
    """Absolute deviation |c_m - exact_m| per power."""
    lookup = dict(exact)
    out = []
    with localcontext() as ctx:
        ctx.prec = p.precision + guard
        for m, c in p.coeffs:
            e = lookup.get(m, Fraction(0))
            ed = Decimal(e.numerator) / Decimal(e.denominator)
            out.append((m, BigReal(abs(c.value - ed), p.precision)))
    return tuple(out)
