"""Equivariant graphs, finite orthogonal groups and ribbon surfaces."""
from .matrices import (DEFAULT_TOL, GroupNotFinite, MatrixGroup, default_tol, generate_group,
                       reflection, rotary_reflection, rotation)
from .graphs import (ArcCollision, EmbeddedGraph, InvarianceReport, build_dipole, build_genus21,
                     build_platonic, build_triacontahedron, check_invariance)

__all__ = [
    "DEFAULT_TOL", "GroupNotFinite", "MatrixGroup", "default_tol", "generate_group", "reflection",
    "rotary_reflection", "rotation", "ArcCollision", "EmbeddedGraph", "InvarianceReport",
    "build_dipole", "build_genus21", "build_platonic", "build_triacontahedron", "check_invariance",
]

from .ribbon import (RibbonError, RibbonGraph, combinatorial_ribbon, polygon_surface_type,  # noqa: E402
                     ribbon_from_embedding, ribbon_surface_type)
from .export import SCHEMA, export_geometry, from_json, to_json, to_obj  # noqa: E402
from . import fixtures  # noqa: E402

__all__ += ["RibbonError", "RibbonGraph", "combinatorial_ribbon", "polygon_surface_type",
            "ribbon_from_embedding", "ribbon_surface_type", "SCHEMA", "export_geometry",
            "from_json", "to_json", "to_obj", "fixtures"]
