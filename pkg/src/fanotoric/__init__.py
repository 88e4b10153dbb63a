"""Exact Fano criterion for homogeneous toric bundles over flag manifolds."""

from .errors import DomainError, InputError
from .fanobundle import (
    FanoVerdict,
    MarginEntry,
    TauMap,
    check_tau_integrality,
    fano_check,
    fano_margins,
    pullback_point,
    tau_is_surjective,
)
from .flagbase import (
    FlagManifold,
    Painting,
    build_flag,
    chamber_margins,
    express_in_zk,
    in_chamber,
)
from .rootsys import (
    FunctionalH,
    RootSystem,
    SimpleType,
    VectorH,
    build_root_system,
    diagram_automorphisms,
    evaluate,
    killing_dual,
)
from .toricfiber import (
    Fan,
    FanDiagnostics,
    Polytope,
    canonical_polytope,
    is_fano,
    point_fan,
    product,
    projective_space,
    validate_fan,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "InputError",
    "Fan",
    "FanDiagnostics",
    "FanoVerdict",
    "FlagManifold",
    "FunctionalH",
    "MarginEntry",
    "Painting",
    "Polytope",
    "RootSystem",
    "SimpleType",
    "TauMap",
    "VectorH",
    "build_flag",
    "build_root_system",
    "canonical_polytope",
    "chamber_margins",
    "check_tau_integrality",
    "diagram_automorphisms",
    "evaluate",
    "express_in_zk",
    "fano_check",
    "fano_margins",
    "in_chamber",
    "is_fano",
    "killing_dual",
    "point_fan",
    "product",
    "projective_space",
    "pullback_point",
    "tau_is_surjective",
    "validate_fan",
]
