"""Legendre-basis expansions of J_N(kx) and I_N(kx).

The expansion coefficient of P_L in the J_N(kx) series is, for L + N even
(and exactly zero otherwise),

    a_LN(k) = sqrt(pi) 2^(-2L-2) (2L+1) k^L sigma 2 Gamma(L+1)
              * 2F3~(L/2+1/2, L/2+1; L+3/2, (L-N)/2+1, (L+N)/2+1; -k^2/4)

where 2F3~ is the regularized function and sigma = (-1)^((L-N)/2) is the
real resolution of the quarter-turn phase under the parity gate -- no
complex arithmetic ever happens here.  The regularized form matters as soon
as N exceeds L: one of the plain form's lower parameters walks through a
nonpositive integer, and only the reciprocal-gamma weights keep the value
finite.

For N = 0 and N = 1 a parameter collision reduces the order to a plain 1F2
with an exact rational prefactor; both orders N in {0, 1} use that faster
path.  In every case the final coefficient is an exact rational (the
sqrt(pi) factors cancel analytically), rounded once at the end.

The modified-function coefficients are the same formula with argument
+k^2/4 and sigma = +1: substituting an imaginary scale into the J series
and unwinding the phases leaves a real series with all-positive entries.

``coeff_oracle`` is an independent derivation kept deliberately separate
from the hypergeometric route: it pushes the standard ascending series for
J_N through the exact rational closed form of the monomial-against-P_L
integral.  Tests require the two to agree; neither is allowed to lean on
the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from .mpnum import (
    BigReal,
    DEFAULT_GUARD_DIGITS,
    binomial,
    gamma_half_exact,
)
from .hypergeom import (
    TermCapExceeded,
    plain_sum_rational,
    regularized_sum_rational,
)

#: Hard ceiling on stored series entries; reaching it means the tail
#: threshold was never met.
TRUNCATION_CAP = 400


class TruncationCapExceeded(RuntimeError):
    """Series assembly ran past the entry cap without meeting its target."""


@dataclass(frozen=True)
class FLSeries:
    """A truncated Legendre-basis expansion of J_N(kx) or I_N(kx).

    ``entries`` holds (L, a_L) pairs with L = N (mod 2) ascending; the
    opposite parity is absent rather than stored as zero.
    """

    kind: str
    order: int
    k: Fraction
    entries: tuple[tuple[int, BigReal], ...]
    precision: int

    def coefficient(self, L: int) -> BigReal | None:
        for ell, a in self.entries:
            if ell == L:
                return a
        return None

    @property
    def l_max(self) -> int:
        return self.entries[-1][0] if self.entries else -1


@dataclass(frozen=True)
class AccuracyReport:
    """Worst absolute deviation of a series against a reference on a grid."""

    x_range: tuple[Fraction, Fraction]
    grid_points: int
    max_abs_error: BigReal
    argmax_x: Fraction


def _check_kind(kind: str) -> str:
    if kind not in ("J", "I"):
        raise ValueError(f"kind must be 'J' or 'I', got {kind!r}")
    return kind


def _phase_and_argument(kind: str, L: int, N: int, k: Fraction) -> tuple[int, Fraction]:
    """(sigma, z): the real quarter-turn phase and the series argument."""
    z = Fraction(k) ** 2 / 4
    if kind == "J":
        return (-1 if ((L - N) // 2) % 2 else 1), -z
    return 1, z


def coeff_rational_reduced(
    L: int, N: int, k: Fraction, z: Fraction, sigma: int,
    precision: int, guard: int = DEFAULT_GUARD_DIGITS,
) -> Fraction:
    """The reduced-order 1F2 route, valid for N in {0, 1} only.

    sqrt(pi)/Gamma(L+3/2) folds into the rational prefactor, so the whole
    value is an exact rational.
    """
    if N == 0:
        upper = (Fraction(L + 1, 2),)
        lower = (Fraction(L + 2, 2), Fraction(2 * L + 3, 2))
    else:
        upper = (Fraction(L + 2, 2),)
        lower = (Fraction(L + 3, 2), Fraction(2 * L + 3, 2))
    pref = (
        Fraction(2 * (2 * L + 1), 2 ** (2 * L + 2))
        * Fraction(k) ** L
        * sigma
        * binomial(L, (L - N) // 2)
        / gamma_half_exact(L + 1)
    )
    return pref * plain_sum_rational(upper, lower, z, precision, guard)


def coeff_rational_general(
    L: int, N: int, k: Fraction, z: Fraction, sigma: int,
    precision: int, guard: int = DEFAULT_GUARD_DIGITS,
) -> Fraction:
    """The regularized 2F3 route, finite for every N (including N > L)."""
    upper = (Fraction(L + 1, 2), Fraction(L + 2, 2))
    lower = (
        Fraction(2 * L + 3, 2),
        Fraction((L - N) // 2 + 1),
        Fraction((L + N) // 2 + 1),
    )
    q, sqrtpi_power = regularized_sum_rational(upper, lower, z, precision, guard)
    # Exactly one lower parameter is half-integer, so the regularized sum
    # carries 1/sqrt(pi) and the prefactor's sqrt(pi) cancels it.
    if q != 0 and sqrtpi_power != -1:
        raise AssertionError("unexpected sqrt(pi) power in regularized sum")
    return (
        Fraction(2 * (2 * L + 1), 2 ** (2 * L + 2))
        * Fraction(k) ** L
        * sigma
        * math.factorial(L)
        * q
    )


@lru_cache(maxsize=None)
def _coeff_rational(
    kind: str, L: int, N: int, k: Fraction, precision: int, guard: int
) -> Fraction:
    """Exact rational value of the P_L coefficient; 0 on parity mismatch."""
    if (L + N) % 2 == 1:
        return Fraction(0)
    sigma, z = _phase_and_argument(kind, L, N, k)
    if N in (0, 1):
        return coeff_rational_reduced(L, N, k, z, sigma, precision, guard)
    return coeff_rational_general(L, N, k, z, sigma, precision, guard)


def coeff_a(
    L: int,
    N: int,
    k: Fraction | int,
    precision: int,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> BigReal:
    """Coefficient of P_L in the J_N(kx) expansion."""
    q = _coeff_rational("J", L, N, Fraction(k), precision, guard)
    return BigReal.from_fraction(q, precision)


def coeff_a_modified(
    L: int,
    N: int,
    k: Fraction | int,
    precision: int,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> BigReal:
    """Coefficient of P_L in the I_N(kx) expansion."""
    q = _coeff_rational("I", L, N, Fraction(k), precision, guard)
    return BigReal.from_fraction(q, precision)


def build_series(
    kind: str,
    N: int,
    k: Fraction | int,
    *,
    l_max: int | None = None,
    threshold: Fraction | Decimal | BigReal | None = None,
    precision: int = 50,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> FLSeries:
    """Assemble the expansion up to L_max or down to a tail threshold.

    Exactly one of ``l_max`` / ``threshold`` selects the mode; with neither
    given, threshold mode runs at the default 10^-(precision+2).  In
    threshold mode assembly stops once two consecutive coefficients fall
    below the threshold, and that trailing run of negligible entries is
    dropped from the result.
    """
    _check_kind(kind)
    if N < 0:
        raise ValueError("order must be nonnegative")
    if l_max is not None and threshold is not None:
        raise ValueError("give either l_max or threshold, not both")
    k = Fraction(k)

    start = N % 2
    entries: list[tuple[int, BigReal]] = []

    if l_max is not None:
        for L in range(start, l_max + 1, 2):
            if len(entries) >= TRUNCATION_CAP:
                raise TruncationCapExceeded(f"more than {TRUNCATION_CAP} entries")
            entries.append((L, coeff_a(L, N, k, precision, guard)
                            if kind == "J" else coeff_a_modified(L, N, k, precision, guard)))
        return FLSeries(kind, N, k, tuple(entries), precision)

    if threshold is None:
        thresh = Decimal(10) ** -(precision + 2)
    elif isinstance(threshold, BigReal):
        thresh = threshold.value
    elif isinstance(threshold, Fraction):
        thresh = Decimal(threshold.numerator) / Decimal(threshold.denominator)
    else:
        thresh = Decimal(threshold)

    small_run = 0
    L = start
    while small_run < 2:
        if len(entries) >= TRUNCATION_CAP:
            raise TruncationCapExceeded(f"more than {TRUNCATION_CAP} entries")
        a = (coeff_a if kind == "J" else coeff_a_modified)(L, N, k, precision, guard)
        entries.append((L, a))
        small_run = small_run + 1 if a.value.copy_abs() < thresh else 0
        L += 2
    while entries and entries[-1][1].value.copy_abs() < thresh:
        entries.pop()
    return FLSeries(kind, N, k, tuple(entries), precision)


def eval_series(
    s: FLSeries,
    x: Fraction | int,
    precision: int | None = None,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> BigReal:
    """Sum a_L P_L(x) with exact rational P_L values.

    Arguments outside [-1, 1] are fine; the polynomial growth there is the
    series' own problem and is what ``accuracy_scan`` quantifies.
    """
    x = Fraction(x)
    p = precision if precision is not None else s.precision
    if not s.entries:
        return BigReal.from_int(0, p)
    lmax = s.l_max
    wanted = {L for L, _ in s.entries}
    coeffs = {L: a for L, a in s.entries}

    total = Decimal(0)
    with localcontext() as ctx:
        ctx.prec = p + guard
        pm1, pl = Fraction(1), Fraction(x)
        for L in range(0, lmax + 1):
            pval = pm1 if L == 0 else (pl if L == 1 else None)
            if pval is None:
                pm1, pl = pl, (Fraction(2 * L - 1) * x * pl - (L - 1) * pm1) / L
                pval = pl
            if L in wanted:
                pdec = Decimal(pval.numerator) / Decimal(pval.denominator)
                total += coeffs[L].value * pdec
    return BigReal(total, p)


# ---------------------------------------------------------------------------
# references: ascending series and the classic optimized polynomials
# ---------------------------------------------------------------------------


def _maclaurin_rational(
    kind: str,
    N: int,
    k: Fraction,
    x: Fraction,
    precision: int,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> Fraction:
    """Ascending power series for J_N(kx) or I_N(kx), summed to convergence."""
    _check_kind(kind)
    half = Fraction(k) * Fraction(x) / 2
    if half == 0:
        return Fraction(1) if N == 0 else Fraction(0)
    hh = half * half
    if kind == "J":
        hh = -hh
    term = half**N / math.factorial(N)
    total = term
    floor = Fraction(1, 10 ** (precision + guard))
    small_run = 0
    j = 0
    while small_run < 2:
        if j > 10 * precision + 500:
            raise TermCapExceeded("ascending series did not converge")
        term = term * hh / ((j + 1) * (j + 1 + N))
        j += 1
        total += term
        thresh = floor * max(abs(total), Fraction(1))
        small_run = small_run + 1 if abs(term) < thresh else 0
    return total


def maclaurin_ref(
    kind: str,
    N: int,
    k: Fraction | int,
    x: Fraction | int,
    precision: int,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> BigReal:
    """Reference value of J_N(kx) or I_N(kx) from the ascending series."""
    q = _maclaurin_rational(kind, N, Fraction(k), Fraction(x), precision, guard)
    return BigReal.from_fraction(q, precision)


def _monomial_projection(m: int, L: int) -> Fraction:
    """Exact value of the integral of x^m P_L(x) over [-1, 1].

    Zero for m < L or opposite parity.  Rodrigues' formula plus L
    integrations by parts reduces the integral to a Beta function:

        m! Gamma(s + 1/2) / ((m-L)! 2^L Gamma(s + L + 3/2)),  s = (m-L)/2,

    and the gamma ratio is rational because both arguments are
    half-integers.
    """
    if m < L or (m - L) % 2 == 1:
        return Fraction(0)
    s = (m - L) // 2
    return (
        Fraction(math.factorial(m)) * gamma_half_exact(s)
        / (math.factorial(m - L) * 2**L * gamma_half_exact(s + L + 1))
    )


def coeff_oracle(
    L: int,
    N: int,
    k: Fraction | int,
    maclaurin_terms: int,
    precision: int,
    kind: str = "J",
) -> BigReal:
    """Brute-force coefficient from the orthogonality projection.

    Replaces the function under the projection integral with its ascending
    series and integrates term by term, all in exact rationals.  This path
    never touches the hypergeometric machinery, which is the point: it is
    the independent witness the closed form is tested against.  The caller
    picks ``maclaurin_terms`` large enough for the target precision
    (roughly L/2 + precision is comfortable).
    """
    _check_kind(kind)
    if (L + N) % 2 == 1:
        return BigReal.from_int(0, precision)
    k = Fraction(k)
    total = Fraction(0)
    for j in range(maclaurin_terms):
        m = 2 * j + N
        proj = _monomial_projection(m, L)
        if proj == 0:
            continue
        mac = Fraction(1, 2 ** (2 * j + N)) / (
            math.factorial(j) * math.factorial(j + N)
        )
        if kind == "J" and j % 2 == 1:
            mac = -mac
        total += mac * k**m * proj
    return BigReal.from_fraction(Fraction(2 * L + 1, 2) * total, precision)


#: Coefficients of the classic least-maximum polynomial fits (E. E. Allen),
#: in the scaled variable t = x/3 (J forms) or t = x/3.75 (I forms).  J1 and
#: I1 list x^-1 J1 and x^-1 I1.
_ALLEN: dict[str, tuple[Fraction, tuple[Fraction, ...]]] = {
    "J0": (Fraction(3), tuple(Fraction(c) for c in (
        "1", "-2.2499997", "1.2656208", "-0.3163866",
        "0.0444479", "-0.0039444", "0.0002100"))),
    "J1": (Fraction(3), tuple(Fraction(c) for c in (
        "0.5", "-0.56249985", "0.21093573", "-0.03954289",
        "0.00443319", "-0.00031761", "0.00001109"))),
    "I0": (Fraction(15, 4), tuple(Fraction(c) for c in (
        "1", "3.5156229", "3.0899424", "1.2067492",
        "0.2659732", "0.0360768", "0.0045813"))),
    "I1": (Fraction(15, 4), tuple(Fraction(c) for c in (
        "0.5", "0.87890594", "0.51498869", "0.15084934",
        "0.02658733", "0.00301532", "0.00032411"))),
}

#: Nominal validity range of each fit (|x| bound).
ALLEN_RANGE = {"J0": Fraction(3), "J1": Fraction(3),
               "I0": Fraction(15, 4), "I1": Fraction(15, 4)}


def eval_allen(
    which: str, x: BigReal | Fraction | int, precision: int = 16
) -> BigReal:
    """The published seven-term polynomial fits, evaluated exactly.

    Valid inside |x| <= 3 (J forms) or |x| <= 3.75 (I forms); evaluation
    outside that range is allowed and simply means the fit's error bound no
    longer applies.
    """
    if which not in _ALLEN:
        raise ValueError(f"unknown fit {which!r}; expected one of {sorted(_ALLEN)}")
    scale, coeffs = _ALLEN[which]
    q = x.to_fraction() if isinstance(x, BigReal) else Fraction(x)
    t2 = (q / scale) ** 2
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * t2 + c
    if which in ("J1", "I1"):
        total *= q
    return BigReal.from_fraction(total, precision)


def accuracy_scan(
    s: FLSeries,
    x_lo: Fraction | int,
    x_hi: Fraction | int,
    grid: int,
    reference: str = "maclaurin",
    precision: int | None = None,
) -> AccuracyReport:
    """Max |series - reference| over a uniform grid of ``grid`` points."""
    if grid < 2:
        raise ValueError("grid must have at least 2 points")
    if reference not in ("maclaurin", "allen"):
        raise ValueError("reference must be 'maclaurin' or 'allen'")
    x_lo, x_hi = Fraction(x_lo), Fraction(x_hi)
    p = precision if precision is not None else s.precision
    allen_name = f"{s.kind}{s.order}"

    worst = Decimal(0)
    worst_x = x_lo
    step = (x_hi - x_lo) / (grid - 1)
    with localcontext() as ctx:
        ctx.prec = p + DEFAULT_GUARD_DIGITS
        for i in range(grid):
            x = x_lo + i * step
            got = eval_series(s, x, p).value
            if reference == "maclaurin":
                ref = maclaurin_ref(s.kind, s.order, s.k, x, p + 10).value
            else:
                ref = eval_allen(allen_name, x, p).value
            err = abs(got - ref)
            if err > worst:
                worst, worst_x = err, x
    return AccuracyReport(
        x_range=(x_lo, x_hi),
        grid_points=grid,
        max_abs_error=BigReal(worst, p),
        argmax_x=worst_x,
    )
