"""Reversed Dickson polynomials over odd-characteristic finite fields.

Dembowski-Ostrom detection, planarity tests and curve point counts.
"""

__version__ = "0.1.0"

from .errors import PlanariumError
from .ffcore import Elem, FieldCtx, build_field, enumerate_field, frobenius, parse_field
from .poly import BiPoly, UniPoly, difference_poly, reduce_qmap
from .rdp import SymbolicRDP, hat_poly, rdp_coeffs_closed, rdp_coeffs_recursive, rdp_instantiate
from .classify import (
    is_do_exponent,
    is_do_polynomial,
    legendre_valuation,
    scan_and_verify,
    theorem_predicate,
)
from .planarity import (
    decide_planarity,
    image_set_size,
    is_planar_delta,
    is_planar_do,
    is_planar_linearized,
    planar_monomial_rule,
)
from .curves import count_affine_points, threshold_degree_check, weil_lower_bound

__all__ = [
    "PlanariumError", "Elem", "FieldCtx", "build_field", "enumerate_field", "frobenius",
    "parse_field", "BiPoly", "UniPoly", "difference_poly", "reduce_qmap", "SymbolicRDP",
    "hat_poly", "rdp_coeffs_closed", "rdp_coeffs_recursive", "rdp_instantiate",
    "is_do_exponent", "is_do_polynomial", "legendre_valuation", "scan_and_verify",
    "theorem_predicate", "decide_planarity", "image_set_size", "is_planar_delta",
    "is_planar_do", "is_planar_linearized", "planar_monomial_rule", "count_affine_points",
    "threshold_degree_check", "weil_lower_bound",
]
