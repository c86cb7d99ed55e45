"""Lorentz-group small groups and nonlinear constitutive relations.

The package provides the spinor parametrization of the proper orthochronous
Lorentz group with its complex orthogonal and real 4x4 vector images, the
stabilizer subgroup and canonical frame of an arbitrary noncommutativity
vector K = n + i*m, rotation/boost factorizations, and the first-order
constitutive relations of noncommutative electrodynamics with their
covariance and discrete dual symmetry.  The ``ncframe`` CLI exposes the main
operations with JSON input/output.
"""

from . import errors
from .electrodynamics import (
    NATURAL,
    DualFrame,
    FieldState,
    UnitSystem,
    constitutive_forward,
    constitutive_inverse,
    constitutive_real_forward,
    constitutive_real_inverse,
    covariance_residual,
    dual_invariance_residual,
    dual_transform,
    gr_constraint_residual,
    gr_from_fields,
    grid_curl,
    grid_divergence,
    maxwell_variable_check,
)
from .factorization import (
    FactorOrder,
    RotationBoostPair,
    factor_boost_rotation,
    factor_isotropic,
    factor_rotation_boost,
    scale_freedom_report,
)
from .group import (
    ETA,
    ComplexRotation,
    GammaDelta,
    Lorentz4,
    SpinorElement,
    gamma_delta_from_spinor,
    gibbs_compose,
    lorentz4_from_spinor,
    project_to_group,
    so3c_from_spinor,
    spinor_compose,
    spinor_from_boost,
    spinor_from_gamma_delta,
    spinor_from_rotation,
    verify_su2_boost_identities,
)
from .linalg import axial_matrix, bilinear_dot, cross, hnorm, inf_norm, mat3_inverse
from .stabilizer import (
    EPS_ISO,
    NCClass,
    NCParameter,
    StabilizerElement,
    Subcase,
    K_to_theta,
    canonical_frame,
    classify,
    classify_theta,
    invariants,
    isotropic_stabilizer_element,
    reduce_to_real,
    rotation_between,
    stabilizer_element,
    theta_to_K,
    unit_delta,
)

__version__ = "0.1.0"

__all__ = [
    "ETA",
    "EPS_ISO",
    "NATURAL",
    "ComplexRotation",
    "DualFrame",
    "FactorOrder",
    "FieldState",
    "GammaDelta",
    "K_to_theta",
    "Lorentz4",
    "NCClass",
    "NCParameter",
    "RotationBoostPair",
    "SpinorElement",
    "StabilizerElement",
    "Subcase",
    "UnitSystem",
    "axial_matrix",
    "bilinear_dot",
    "canonical_frame",
    "classify",
    "classify_theta",
    "constitutive_forward",
    "constitutive_inverse",
    "constitutive_real_forward",
    "constitutive_real_inverse",
    "covariance_residual",
    "cross",
    "dual_invariance_residual",
    "dual_transform",
    "errors",
    "factor_boost_rotation",
    "factor_isotropic",
    "factor_rotation_boost",
    "gamma_delta_from_spinor",
    "gibbs_compose",
    "gr_constraint_residual",
    "gr_from_fields",
    "grid_curl",
    "grid_divergence",
    "hnorm",
    "inf_norm",
    "invariants",
    "isotropic_stabilizer_element",
    "lorentz4_from_spinor",
    "mat3_inverse",
    "maxwell_variable_check",
    "project_to_group",
    "reduce_to_real",
    "rotation_between",
    "scale_freedom_report",
    "so3c_from_spinor",
    "spinor_compose",
    "spinor_from_boost",
    "spinor_from_gamma_delta",
    "spinor_from_rotation",
    "stabilizer_element",
    "theta_to_K",
    "unit_delta",
    "verify_su2_boost_identities",
]
