"""Exact-arithmetic irreducibility certificates for multivariate
polynomials over Q, through p-adic lifting conditions."""

from .errors import ConfigError, LiftcertError, ResourceLimitExceeded
from .exactnum import INFINITY, Rational, Val, vp
from .finitefield import (
    ResidueField,
    ResiduePoly,
    is_irreducible_multivariate,
    is_irreducible_univariate,
)
from .lifting import (
    LiftingCertificate,
    certify_irreducible,
    check_lifting,
    generate_lifting,
    suggest_pairs,
)
from .multipoly import MultiPoly, content_valuation, phi_expand, reconstruct
from .oracle import FactorizationResult, brute_factor
from .parse import ParseError, parse_polynomial
from .valuation import (
    Inert,
    PairConfig,
    RationalCenter,
    compute_e_h,
    compute_lambda,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "LiftcertError",
    "ResourceLimitExceeded",
    "INFINITY",
    "Rational",
    "Val",
    "vp",
    "ResidueField",
    "ResiduePoly",
    "is_irreducible_multivariate",
    "is_irreducible_univariate",
    "LiftingCertificate",
    "certify_irreducible",
    "check_lifting",
    "generate_lifting",
    "suggest_pairs",
    "MultiPoly",
    "content_valuation",
    "phi_expand",
    "reconstruct",
    "FactorizationResult",
    "brute_factor",
    "ParseError",
    "parse_polynomial",
    "Inert",
    "PairConfig",
    "RationalCenter",
    "compute_e_h",
    "compute_lambda",
]
