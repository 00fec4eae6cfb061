"""Exact arithmetic for the torus skein algebra, the quantum torus and
skein dilogarithms, with verifiers for the pentagon relation."""

from .dilog import (
    ad_property_check,
    adjoint,
    dilog_inverse,
    identity_2_2_check,
    pentagon_check,
    skein_dilog,
)
from .lattice import LatticeVector, delta_degree, det2, in_positive_cone, pbw_compare, primitive_decompose
from .morphism import dilog_compatibility_check, homomorphism_check, project
from .quantum_torus import QTSeries, X, phi_product_series, phi_series, qt_mul, verify_phi_pentagon
from .report import VerificationReport
from .scalars import LaurentPoly, Scalar, parse_scalar, quantum_integer
from .torus_skein import P, PBWMonomial, SkeinElement, bracket, commutator, jacobi_check, multiply, normal_order

__all__ = [
    "LatticeVector", "LaurentPoly", "P", "PBWMonomial", "QTSeries", "Scalar", "SkeinElement",
    "VerificationReport", "X", "ad_property_check", "adjoint", "bracket", "commutator",
    "delta_degree", "det2", "dilog_compatibility_check", "dilog_inverse", "homomorphism_check",
    "identity_2_2_check", "in_positive_cone", "jacobi_check", "multiply", "normal_order",
    "parse_scalar", "pbw_compare", "pentagon_check", "phi_product_series", "phi_series",
    "primitive_decompose", "project", "qt_mul", "quantum_integer", "skein_dilog",
    "verify_phi_pentagon",
]
