"""Exact enumeration of regular triangulations of integer point sets.

The package walks the flip graph by reverse search: each triangulation's
predecessor is its lexicographically largest GKZ upflip neighbor, which
yields a spanning tree of the regular triangulations needing no visited set.
Whether a flip leads to a regular triangulation is decided through the
extremal-ray criterion on flip GKZ displacements — usually by sparse column
reductions alone, falling back to one small exact LP per undecided flip.
All arithmetic is exact (integers and fractions); every LP answer carries a
witness or certificate that is re-verified before being returned.
"""

from .errors import (
    DegenerateConfigError,
    DimensionError,
    InvalidInputError,
    NoDependenceError,
    NotCorankOneError,
    RegulartriError,
    ResourceLimitError,
    StaleFlipError,
    TriangulationError,
)
from .catalog import (
    cube,
    cube_symmetry_generators,
    nested_triangles,
    nested_triangles_pinwheel,
    simplex_product,
    simplex_product_symmetry_generators,
    square,
    triangle_with_interior,
)
from .exact import Matrix, Rational, determinant, kernel_vector, rank
from .flips import Flip, apply_flip, find_flips, flip_gkz
from .lp import Feasibility, nonneg_combination, strict_homogeneous
from .points import CorankOneConfig, PointConfiguration, new_configuration
from .regularity import (
    RayStats,
    RegularityVerdict,
    ScreeningOutcome,
    TaggedVector,
    extremal_rays,
    is_regular,
    naive_extremal_rays,
    regular_flips,
    regularity_rows,
    screen_rays,
)
from .search import (
    SearchMode,
    SearchStats,
    baseline_dfs,
    enumerate_triangulations,
    find_root,
    predecessor,
    reverse_search,
)
from .symmetry import canonical_form, expand_group, is_symmetry, orbit_count, relabel
from .triangulation import (
    Triangulation,
    ValidationResult,
    ensure_valid,
    format_triangulation,
    gkz,
    lex_compare,
    parse_triangulation,
    placing_triangulation,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "CorankOneConfig",
    "DegenerateConfigError",
    "DimensionError",
    "Feasibility",
    "Flip",
    "InvalidInputError",
    "Matrix",
    "NoDependenceError",
    "NotCorankOneError",
    "PointConfiguration",
    "Rational",
    "RayStats",
    "RegularityVerdict",
    "RegulartriError",
    "ResourceLimitError",
    "ScreeningOutcome",
    "SearchMode",
    "SearchStats",
    "StaleFlipError",
    "TaggedVector",
    "Triangulation",
    "TriangulationError",
    "ValidationResult",
    "apply_flip",
    "baseline_dfs",
    "canonical_form",
    "cube",
    "cube_symmetry_generators",
    "determinant",
    "ensure_valid",
    "enumerate_triangulations",
    "expand_group",
    "extremal_rays",
    "find_flips",
    "find_root",
    "flip_gkz",
    "format_triangulation",
    "gkz",
    "is_regular",
    "is_symmetry",
    "kernel_vector",
    "lex_compare",
    "naive_extremal_rays",
    "nested_triangles",
    "nested_triangles_pinwheel",
    "new_configuration",
    "nonneg_combination",
    "orbit_count",
    "parse_triangulation",
    "placing_triangulation",
    "predecessor",
    "rank",
    "regular_flips",
    "regularity_rows",
    "relabel",
    "reverse_search",
    "screen_rays",
    "simplex_product",
    "simplex_product_symmetry_generators",
    "square",
    "strict_homogeneous",
    "triangle_with_interior",
    "validate",
]
