"""Power-series folding, exact coefficients, prime-structure certification."""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

from flbessel.powerprime import (
    certify_prime_structure,
    compare_power_series,
    exact_power_series,
    maclaurin_exact,
    to_power_series,
)
from flbessel.series import build_series
from refdata import J0_EXPONENTS, J1_EXPONENTS, table1_rows, ulp_of

F = Fraction


def test_maclaurin_exact_examples():
    j0 = dict(maclaurin_exact("J", 0, 10))
    assert j0[6] == F(-1, 2304)
    assert j0[0] == 1 and j0[2] == F(-1, 4)

    j1 = dict(maclaurin_exact("J", 1, 43))
    denom = (2**80) * (3**18) * (5**8) * (7**6) * (11**3) * (13**2) * (17**2) * (19**2)
    assert j1[43] == F(-1, denom)

    i0 = dict(maclaurin_exact("I", 0, 44))
    from flbessel.mpnum import BigReal

    assert (
        str(BigReal.from_fraction(i0[44], 38))
        == "4.4993212828093539168451396307446688497e-56"
    )


def test_maclaurin_scale_folds_in():
    base = dict(maclaurin_exact("J", 0, 8))
    scaled = dict(maclaurin_exact("J", 0, 8, k=F(1, 2)))
    for m, c in scaled.items():
        assert c == base[m] * F(1, 2) ** m


def test_i_and_j_coefficients_match_in_magnitude():
    j = maclaurin_exact("J", 0, 46)
    i = maclaurin_exact("I", 0, 46)
    for (mj, cj), (mi, ci) in zip(j, i):
        assert mj == mi and abs(cj) == ci


def test_fold_reproduces_low_powers(j0_74terms, j1_78terms):
    p0 = to_power_series(j0_74terms, 16)
    c4 = p0.coefficient(4)
    assert abs(c4.value - Decimal("0.015625")) < Decimal(10) ** -38
    p1 = to_power_series(j1_78terms, 5)
    c5 = p1.coefficient(5)
    with localcontext() as ctx:
        ctx.prec = 60
        want = Decimal(1) / Decimal(384)
        assert abs(c5.value - want) < Decimal(10) ** -39


def test_single_entry_fold_is_first_table_row(j0_42):
    one = build_series("J", 0, 1, l_max=0, precision=50)
    p = to_power_series(one, 0)
    row0 = table1_rows()[0]
    assert abs(p.coefficient(0).value - Decimal(row0)) <= ulp_of(row0)


def test_fold_ladder_matches_convergence_table(j0_42):
    # folding 1..17 Legendre terms reproduces the published constant-term
    # column to at least 45 digits
    rows = table1_rows()
    for n, row in enumerate(rows, start=1):
        sub = build_series("J", 0, 1, l_max=2 * (n - 1), precision=50)
        p = to_power_series(sub, 0)
        assert abs(p.coefficient(0).value - Decimal(row)) < Decimal(10) ** -45


def test_compare_power_series(j0_74terms):
    p = to_power_series(j0_74terms, 42)
    errs = dict(compare_power_series(p, maclaurin_exact("J", 0, 42)))
    exact = dict(maclaurin_exact("J", 0, 42))
    for m, err in errs.items():
        assert err.value <= abs(Decimal(exact[m].numerator) / Decimal(exact[m].denominator)) * Decimal(10) ** -36


def test_compare_partial_fold_error_is_the_table_gap():
    one = build_series("J", 0, 1, l_max=0, precision=50)
    p = to_power_series(one, 0)
    errs = dict(compare_power_series(p, maclaurin_exact("J", 0, 0)))
    assert abs(errs[0].value - Decimal("0.0802695899102397606855788059194")) < Decimal(
        "1e-28"
    )


def test_certify_converged_x16(j0_74terms):
    p = to_power_series(j0_74terms, 16)
    rep = certify_prime_structure(p)
    e = rep.entry(16)
    assert e.certified
    assert e.factors.exponents == ((2, 30), (3, 4), (5, 2), (7, 2))
    assert e.factors.leftover == 1
    assert e.gap.value / e.nearest < Decimal("1e-12")


def test_certify_under_truncated_x16_not_near_integer():
    s = build_series("J", 0, 1, l_max=24, precision=48)
    p = to_power_series(s, 16)
    rep = certify_prime_structure(p)
    e = rep.entry(16)
    assert not e.certified
    assert e.nearest == 106542032486496
    with localcontext() as ctx:
        ctx.prec = 60
        recip = Decimal(1) / p.coefficient(16).value
        assert abs(recip - Decimal("106542032486495.6")) < 1


def test_certify_x0_is_unit(j0_74terms):
    p = to_power_series(j0_74terms, 0)
    e = certify_prime_structure(p).entry(0)
    assert e.certified and e.factors.exponents == () and e.factors.leftover == 1


def test_certify_divides_out_scale():
    s = build_series("J", 0, F(1, 2), l_max=40, precision=50)
    p = to_power_series(s, 8)
    rep = certify_prime_structure(p)
    for m, want in ((4, (2, 6)), (8, (2, 14))):
        e = rep.entry(m)
        assert e.certified and e.factors.exponents[0] == want


def test_exact_series_certifies_every_published_tuple():
    for kind_order, max_power, table in (
        ((0,), 42, J0_EXPONENTS),
        ((1,), 43, J1_EXPONENTS),
    ):
        N = kind_order[0]
        p = exact_power_series("J", N, max_power, precision=70)
        rep = certify_prime_structure(p)
        assert rep.all_certified
        for m, exps in table.items():
            e = rep.entry(m)
            assert dict(e.factors.exponents) == exps, (N, m)
            assert e.factors.leftover == 1
        # x^0 of the even series is 1
        if N == 0:
            assert rep.entry(0).factors.exponents == ()


def test_certified_sign_patterns(j0_74terms):
    p = to_power_series(j0_74terms, 42)
    for m, c in p.coeffs:
        assert c.sign == (1 if (m // 2) % 2 == 0 else -1)
    i = exact_power_series("I", 0, 46)
    assert all(c.sign > 0 for _, c in i.coeffs)


def test_fold_error_non_increasing_with_provenance():
    exact = dict(maclaurin_exact("J", 0, 16))
    with localcontext() as ctx:
        ctx.prec = 70
        want = Decimal(exact[16].numerator) / Decimal(exact[16].denominator)
        last = None
        for lmax in (24, 26, 28, 34, 44, 60):
            s = build_series("J", 0, 1, l_max=lmax, precision=50)
            err = abs(to_power_series(s, 16).coefficient(16).value - want)
            if last is not None:
                assert err <= last + Decimal(10) ** -64
            last = err
