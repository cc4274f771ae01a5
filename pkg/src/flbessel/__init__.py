"""High-precision Legendre-basis expansions of Bessel functions.

The package computes the coefficients of J_N(kx) and I_N(kx) expanded over
Legendre polynomials from hypergeometric closed forms, converts the
expansions to ordinary power series, certifies that the power-series
coefficients have inverse-prime-power structure, and numerically verifies
the summed-series identities the expansion gives rise to.  Everything is
exact rational arithmetic up to a single final rounding, so results are
deterministic to the last displayed digit.
"""

from .mpnum import (
    BigReal,
    NotNearInteger,
    PrimePowers,
    Rat,
    binomial,
    factorize_reciprocal,
    gamma_half_int,
    pochhammer,
    pochhammer_reflect,
    sqrt_pi,
)
from .hypergeom import (
    HypParams,
    LowerParamPole,
    ShapeUnsupported,
    TermCapExceeded,
    hyp_pfq,
    hyp_pfq_regularized,
)
from .legendre import LegendreMonomials, ZeroArgument, eval_P, eval_P_via_2f1, monomials
from .series import (
    AccuracyReport,
    FLSeries,
    TruncationCapExceeded,
    accuracy_scan,
    build_series,
    coeff_a,
    coeff_a_modified,
    coeff_oracle,
    eval_allen,
    eval_series,
    maclaurin_ref,
)
from .powerprime import (
    FactorEntry,
    FactorReport,
    PowerSeries,
    certify_prime_structure,
    compare_power_series,
    maclaurin_exact,
    to_power_series,
)
from .sumverify import (
    SumSpec,
    VariantMismatch,
    VerifyReport,
    cauchy_check,
    partial_sums,
    summed_series_lhs,
    summed_series_rhs,
    verify_identity,
)
from .emit import (
    DigitsExceedPrecision,
    EmitTarget,
    UncertifiedFactorization,
    emit_json,
    emit_legendre_code,
    emit_power_code,
    parse_json,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyReport",
    "BigReal",
    "DigitsExceedPrecision",
    "EmitTarget",
    "FLSeries",
    "FactorEntry",
    "FactorReport",
    "HypParams",
    "LegendreMonomials",
    "LowerParamPole",
    "NotNearInteger",
    "PowerSeries",
    "PrimePowers",
    "Rat",
    "ShapeUnsupported",
    "SumSpec",
    "TermCapExceeded",
    "TruncationCapExceeded",
    "UncertifiedFactorization",
    "VariantMismatch",
    "VerifyReport",
    "ZeroArgument",
    "accuracy_scan",
    "binomial",
    "build_series",
    "cauchy_check",
    "certify_prime_structure",
    "coeff_a",
    "coeff_a_modified",
    "coeff_oracle",
    "compare_power_series",
    "emit_json",
    "emit_legendre_code",
    "emit_power_code",
    "eval_P",
    "eval_P_via_2f1",
    "eval_allen",
    "eval_series",
    "factorize_reciprocal",
    "gamma_half_int",
    "hyp_pfq",
    "hyp_pfq_regularized",
    "maclaurin_exact",
    "maclaurin_ref",
    "monomials",
    "parse_json",
    "partial_sums",
    "pochhammer",
    "pochhammer_reflect",
    "sqrt_pi",
    "summed_series_lhs",
    "summed_series_rhs",
    "to_power_series",
    "verify_identity",
]
