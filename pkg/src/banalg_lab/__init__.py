"""Desk-scale laboratory for isometries between invertible groups of matrix algebras."""

__version__ = "0.1.0"

from .algebras import (
    AlgebraSpec,
    Element,
    NormSpec,
    dame_algebra,
    diagonal_algebra,
    full_matrix_algebra,
    invert,
    mul,
    norm,
    radical,
    radical_member_sampling,
    spectral_radius,
    spectrum,
    upper_triangular_algebra,
)
from .classify import ClassificationResult, classify, refute_multiplicativity
from .extension import (
    ExtensionResult,
    build_extension,
    check_midpoint,
    estimate_u0,
    verify_extension,
)
from .gallery import run_cx2, run_dame
from .numrange import in_omega, mu_sup_re, numerical_radius
from .oracles import (
    IsometryOracle,
    audit_oracle,
    identity_oracle,
    matrix_form_oracle,
    translation_oracle,
)

__all__ = [
    "AlgebraSpec",
    "ClassificationResult",
    "Element",
    "ExtensionResult",
    "IsometryOracle",
    "NormSpec",
    "audit_oracle",
    "build_extension",
    "check_midpoint",
    "classify",
    "dame_algebra",
    "diagonal_algebra",
    "estimate_u0",
    "full_matrix_algebra",
    "identity_oracle",
    "in_omega",
    "invert",
    "matrix_form_oracle",
    "mu_sup_re",
    "mul",
    "norm",
    "numerical_radius",
    "radical",
    "radical_member_sampling",
    "refute_multiplicativity",
    "run_cx2",
    "run_dame",
    "spectral_radius",
    "spectrum",
    "translation_oracle",
    "upper_triangular_algebra",
    "verify_extension",
]
