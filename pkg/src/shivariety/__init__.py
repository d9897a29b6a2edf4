"""Affine Weyl groups as the integral points of their Shi variety."""
from .root_system import RootSystem, RootSystemError, build_root_system, parse_type, root_system
from .affine_weyl import AffineElement, AffineWeylGroup, FiniteWeylElement, affine_weyl_group
from .kernels import BACKEND
from .phi_rep import AffineIsometry, isometry_of, phi_representation
from .variety import (
    AdmissibleVector,
    ComponentTable,
    ResourceGuardError,
    act_on_component,
    enumerate_admitted,
    generator_components,
    lambda_vector,
)

__all__ = [
    "AdmissibleVector",
    "AffineElement",
    "AffineIsometry",
    "AffineWeylGroup",
    "BACKEND",
    "ComponentTable",
    "FiniteWeylElement",
    "RootSystem",
    "ResourceGuardError",
    "RootSystemError",
    "act_on_component",
    "affine_weyl_group",
    "build_root_system",
    "enumerate_admitted",
    "generator_components",
    "isometry_of",
    "lambda_vector",
    "parse_type",
    "phi_representation",
    "root_system",
]
__version__ = "0.1.0"
