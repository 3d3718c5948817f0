"""Naturally reductive structures on 4-dimensional pseudo-Euclidean spaces, in exact arithmetic."""
from .analysis import AnalysisReport, analyze
from .catalog import FAMILIES, FamilySpec, ParamOutOfDomain, expected_properties, list_families, make_family
from .decomposition import Decomposition, check_projection_conditions, decompose
from .exact_linalg import Matrix, Q, Subspace, span
from .geometry import (classify_geometry, covariant_derivative_R, holonomy, levi_civita_curvature,
                       riemann_symmetry_defects)
from .lie_algebra import (LieAlgebra, ReductiveSplit, change_basis, derived_series, is_nilpotent_ideal,
                          jacobi_check, match_brackets)
from .metric_space import MetricSpace, lorentz_space, neutral_space, validate_metric, witt_space
from .normal_forms import NormalFormTag, classify, classify_lorentz, classify_neutral
from .serialization import FormatError, structure_from_json, structure_to_json
from .splits import build_lie_algebra, nr_from_split
from .structure import (CurvatureTensor, NRStructure, TorsionTensor, torsion_constraints,
                        validate_structure)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "analyze",
    "FAMILIES",
    "FamilySpec",
    "ParamOutOfDomain",
    "expected_properties",
    "list_families",
    "make_family",
    "Decomposition",
    "check_projection_conditions",
    "decompose",
    "Matrix",
    "Q",
    "Subspace",
    "span",
    "classify_geometry",
    "covariant_derivative_R",
    "holonomy",
    "levi_civita_curvature",
    "riemann_symmetry_defects",
    "LieAlgebra",
    "ReductiveSplit",
    "change_basis",
    "derived_series",
    "is_nilpotent_ideal",
    "jacobi_check",
    "match_brackets",
    "MetricSpace",
    "lorentz_space",
    "neutral_space",
    "validate_metric",
    "witt_space",
    "NormalFormTag",
    "classify",
    "classify_lorentz",
    "classify_neutral",
    "FormatError",
    "structure_from_json",
    "structure_to_json",
    "build_lie_algebra",
    "nr_from_split",
    "CurvatureTensor",
    "NRStructure",
    "TorsionTensor",
    "torsion_constraints",
    "validate_structure",
]
