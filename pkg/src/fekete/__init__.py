"""Fekete polynomials: construction, special values, Galois certificates and
arithmetic checks."""

from .construct import FeketeDefect, build, f_poly, fekete_polynomial, g_poly, special_values
from .galois import (
    GaloisCertificate,
    check_quadruple,
    check_triple,
    find_smallest_quadruple,
    find_smallest_triple,
    irreducibility_certify,
)
from .modular import discriminant_valuation_report, modp_shape
from .polynomials import FactorizationPattern, IntPolynomial, ModPolynomial

__version__ = "0.1.0"

__all__ = [
    "FactorizationPattern",
    "FeketeDefect",
    "GaloisCertificate",
    "IntPolynomial",
    "ModPolynomial",
    "build",
    "check_quadruple",
    "check_triple",
    "discriminant_valuation_report",
    "f_poly",
    "fekete_polynomial",
    "find_smallest_quadruple",
    "find_smallest_triple",
    "g_poly",
    "irreducibility_certify",
    "modp_shape",
    "special_values",
]
