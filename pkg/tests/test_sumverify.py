"""Summed-series identities, bracket variants, partial sums, Cauchy checks."""

from __future__ import annotations

import random
from decimal import Decimal
from fractions import Fraction

import pytest

from flbessel.powerprime import to_power_series
from flbessel.sumverify import (
    SumSpec,
    _brackets,
    cauchy_check,
    partial_sums,
    partial_sums_rational,
    rhs_rational,
    summed_series_lhs,
    summed_series_rhs,
    term_rational,
    verify_identity,
)
from refdata import table1_rows, ulp_of

F = Fraction


def spec(family="j0", h=0, k=1, terms=17, precision=50, variant="pochhammer"):
    return SumSpec(family=family, h=h, k=F(k), L_terms=terms,
                   precision=precision, variant=variant)


def test_spec_validation():
    with pytest.raises(ValueError):
        spec(family="y0")
    with pytest.raises(ValueError):
        spec(h=3, terms=2)  # fewer terms than the vanished head
    with pytest.raises(ValueError):
        spec(variant="gamma")


def test_bracket_variants_agree_randomly():
    rng = random.Random(1234)
    for _ in range(100):
        h = rng.randint(0, 10)
        fam = rng.choice(("j0", "j1"))
        L = 2 * rng.randint(h, h + 40) + (1 if fam == "j1" else 0)
        m = (L - (1 if fam == "j1" else 0)) // 2 - h
        poch, refl, gamm = _brackets(fam, L, h, m)
        assert poch == refl == gamm


def test_first_h_terms_vanish():
    for fam in ("j0", "j1"):
        off = 1 if fam == "j1" else 0
        for h in range(0, 21, 4):
            sp = spec(family=fam, h=h, terms=h + 5)
            for i in range(h):
                assert term_rational(sp, 2 * i + off) == 0
            assert term_rational(sp, 2 * h + off) != 0


def test_rhs_values():
    assert rhs_rational(spec(family="j0", h=0, k=7)) == 1
    assert rhs_rational(spec(family="j0", h=2, k=1, terms=10)) == F(1, 64)
    assert summed_series_rhs(spec(family="j0", h=2, terms=10)).value == Decimal(
        "0.015625"
    )
    assert rhs_rational(spec(family="j1", h=1, k=2, terms=10)) == F(-1, 2)


def test_lhs_reaches_rhs_at_published_truncations():
    r0 = verify_identity(spec(family="j0", h=0, terms=44), F(1, 10**33))
    assert r0.passed

    r1 = verify_identity(spec(family="j0", h=1, terms=47), F(1, 10**30))
    assert r1.passed and r1.rhs.value == Decimal("-0.25")

    r2 = verify_identity(spec(family="j1", h=0, terms=45), F(1, 10**33))
    assert r2.passed and r2.rhs.value == Decimal("0.5")


def test_under_truncation_fails_without_raising():
    r = verify_identity(spec(family="j0", h=0, terms=5), F(1, 10**33))
    assert not r.passed
    assert r.rel_diff.value > Decimal(10) ** -33


def test_partial_sums_match_convergence_table():
    rows = table1_rows()
    parts = partial_sums(spec(terms=17, precision=50))
    assert len(parts) == 17
    for got, row in zip(parts, rows):
        assert abs(got.value - Decimal(row)) <= ulp_of(row)


def test_consistency_with_power_series_fold(j0_74terms, j1_78terms):
    # the h-th summed series is the x^(2h) (resp. x^(2h+1)) coefficient
    p0 = to_power_series(j0_74terms, 10)
    for h in (0, 1, 2, 5):
        lhs = summed_series_lhs(spec(family="j0", h=h, terms=74))
        cm = p0.coefficient(2 * h)
        assert abs(lhs.value - cm.value) < Decimal(10) ** -44
    p1 = to_power_series(j1_78terms, 11)
    for h in (0, 3):
        lhs = summed_series_lhs(spec(family="j1", h=h, terms=78))
        cm = p1.coefficient(2 * h + 1)
        assert abs(lhs.value - cm.value) < Decimal(10) ** -44


def test_even_only_display_transcribed_literally_is_half_the_term():
    # The standalone even-only (h=0, k=1) display omits the parity-gate
    # factor of two that its general form carries; transcribed literally it
    # is exactly half of the summand implemented here (which does reach the
    # limit 1).  Pin that relationship so the discrepancy stays visible.
    import math

    from flbessel.mpnum import gamma_half_exact, pochhammer

    sp = spec(h=0, terms=17)
    for L in (0, 2, 4, 10, 16):
        j = L // 2
        literal = (
            F((-1) ** (j % 2))
            * (2 * L + 1)
            * math.comb(L, j)
            * math.comb(2 * L, L)
            * pochhammer(F(1, 2) - F(L, 2), j)
            * pochhammer(-F(L, 2), j)
            / F(2 ** (3 * L + 2))
            / (
                math.factorial(j)
                * pochhammer(F(1, 2) - L, j)
                * gamma_half_exact(L + 1)
            )
        )
        from flbessel.sumverify import _f12

        literal *= _f12(0, L, F(1), 50, 16)
        assert 2 * literal == term_rational(sp, L)


def test_variants_give_identical_sums():
    vals = {
        v: summed_series_lhs(spec(family="j0", h=3, terms=40, variant=v))
        for v in ("pochhammer", "reflected", "gammaform")
    }
    assert vals["pochhammer"] == vals["reflected"] == vals["gammaform"]


def test_identity_suite_small_h_all_scales():
    for fam in ("j0", "j1"):
        for k in (F(1, 2), F(1), F(2)):
            for h in range(0, 21, 5):
                rep = verify_identity(
                    spec(family=fam, h=h, k=k, terms=h + 80), F(1, 10**30)
                )
                assert rep.passed, (fam, k, h, str(rep.rel_diff))


def test_cauchy_check():
    rows = table1_rows()
    parts = partial_sums_rational(spec(terms=17, precision=50))
    assert cauchy_check(parts, 10, 9, F(1, 10**21))
    assert cauchy_check(parts, 16, 15, F(2, 10**46))
    assert cauchy_check([F(1), F(1)], 1, 0, F(1, 10**30))
    with pytest.raises(IndexError):
        cauchy_check(parts, 9, 10, F(1, 10))
    with pytest.raises(IndexError):
        cauchy_check(parts, 40, 2, F(1, 10))
    assert len(rows) == len(parts)
