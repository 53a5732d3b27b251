"""faclab: exact-arithmetic toolkit for the factorial functional on
multivariate polynomials, compositional inversion of power series, and
polynomial-family conjecture scans."""

from .algebra import (
    GaussianRational,
    MultiPoly,
    UniPoly,
    binomial,
    factorial,
    uni_gcd,
)
from .bridge import (
    EFamilyElement,
    ReducedElement,
    check_bridge_identity,
    p_poly,
    probe_bridge_windows,
    reduce_element,
    verify_hypergeometric_form,
    verify_mu_recurrence,
    verify_p_recurrence,
    verify_recurrence_certificate,
)
from .expr import ExprError, format_poly, parse_grid, parse_poly, parse_scalar
from .factorial_map import (
    MembershipVerdict,
    factorial_value,
    factorial_value_power,
    strong_scan,
    window_membership,
)
from .inversion import (
    InverseCoefficients,
    UniSeries,
    aif_u,
    congruence_preserved,
    lagrange_u,
    mif_u,
    rigidity_scan,
    series_compose,
    series_inverse,
)
from .two_monomials import (
    ExponentPair,
    Recurrence,
    RpcFinding,
    UnderdeterminedSystemError,
    apply_recurrence,
    check_pab_identity,
    common_zero_degree,
    discover_recurrence,
    pab_poly,
    rpc_scan,
    verify_difference_identity,
)

__version__ = "0.1.0"

__all__ = [
    "EFamilyElement",
    "ExponentPair",
    "ExprError",
    "GaussianRational",
    "InverseCoefficients",
    "MembershipVerdict",
    "MultiPoly",
    "Recurrence",
    "ReducedElement",
    "RpcFinding",
    "UnderdeterminedSystemError",
    "UniPoly",
    "UniSeries",
    "aif_u",
    "apply_recurrence",
    "binomial",
    "check_bridge_identity",
    "check_pab_identity",
    "common_zero_degree",
    "congruence_preserved",
    "discover_recurrence",
    "factorial",
    "factorial_value",
    "factorial_value_power",
    "format_poly",
    "lagrange_u",
    "mif_u",
    "p_poly",
    "pab_poly",
    "parse_grid",
    "parse_poly",
    "parse_scalar",
    "probe_bridge_windows",
    "reduce_element",
    "rigidity_scan",
    "rpc_scan",
    "series_compose",
    "series_inverse",
    "strong_scan",
    "uni_gcd",
    "verify_difference_identity",
    "verify_hypergeometric_form",
    "verify_mu_recurrence",
    "verify_p_recurrence",
    "verify_recurrence_certificate",
    "window_membership",
]
