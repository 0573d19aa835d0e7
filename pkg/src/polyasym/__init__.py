"""Convergent expansions with large-degree asymptotics for classical polynomials."""

from .numerics import (
    PrecisionCtx,
    SignedLogValue,
    binom_general,
    charlier_direct,
    chebyshev_T,
    chebyshev_U,
    hermite_eval,
    jacobi_direct,
    laguerre_direct,
    pochhammer,
)
from .results import ContourSpec, ExpansionResult
from .two_point_taylor import (
    ABCoeffs,
    CassiniOval,
    TwoPointCoeffs,
    cassini_region,
    single_point_coeffs,
    to_AB,
    two_point_coeffs,
)
from .charlier import CharlierParams, charlier_expand, charlier_zeros
from .laguerre import LaguerreParams, laguerre_expand
from .jacobi import JacobiParams, jacobi_expand
from .bessel_kummer import (
    BesselParams,
    KummerParams,
    besseli_expand,
    besselk_expand,
    kummer_expand,
    tricomi_coeffs,
)

__all__ = [
    "PrecisionCtx",
    "SignedLogValue",
    "pochhammer",
    "binom_general",
    "hermite_eval",
    "chebyshev_T",
    "chebyshev_U",
    "laguerre_direct",
    "jacobi_direct",
    "charlier_direct",
    "ContourSpec",
    "ExpansionResult",
    "TwoPointCoeffs",
    "ABCoeffs",
    "CassiniOval",
    "single_point_coeffs",
    "two_point_coeffs",
    "to_AB",
    "cassini_region",
    "CharlierParams",
    "charlier_expand",
    "charlier_zeros",
    "LaguerreParams",
    "laguerre_expand",
    "JacobiParams",
    "jacobi_expand",
    "BesselParams",
    "KummerParams",
    "besseli_expand",
    "besselk_expand",
    "kummer_expand",
    "tricomi_coeffs",
]

__version__ = "0.1.0"
