"""Boundary edge codes for benzenoids.

A benzenoid's boundary, walked counterclockwise, visits each boundary
vertex with 1 to 5 incident boundary edges ahead of it; recording those
counts gives a cyclic word over {1..5} that determines the molecule up
to rotation, reflection and translation.  This package provides the
code algebra, the hexagonal lattice embedding, convexity analysis,
parametric families, named small compounds, exhaustive enumeration and
SVG/TikZ rendering.
"""

from ._kernel import BACKEND
from .codes import (
    BENZENE,
    Code,
    ConvexityClass,
    ConvexityKind,
    canonical,
    classify,
    concat,
    convexity_deficit,
    equivalent,
    is_k_convex,
    min_window_average,
    one_contact_attach,
    parse_code,
    reverse,
    rotate,
    winding,
)
from .enumeration import (
    EnumerationReport,
    SearchConfig,
    check_unimodal,
    count_benzenoids,
    enumerate_benzenoids,
    enumerate_unbranched_fusenes,
    max_cd_unbranched_benzenoids,
    report,
    run_search,
)
from .errors import (
    BechexError,
    BenzeneNotComposable,
    Disconnected,
    Holed,
    InvalidSymbols,
    NotClosed,
    NotFound,
    ParamOutOfRange,
    ResourceLimit,
    SelfIntersecting,
    SplitOutOfRange,
    WindowEmpty,
    WindowTooLong,
)
from .families import (
    FAMILY_IDS,
    NamedCompound,
    compounds,
    expected_cd,
    expected_h,
    family_description,
    find_by_code,
    generate,
    helicene,
    lookup,
    spiral,
)
from .lattice import (
    Benzenoid,
    BoundaryWalk,
    Condensation,
    canonical_cells,
    condensation_class,
    embed,
    inner_dual,
    is_simply_connected,
    mirror_cells,
    normalize_cells,
    trace,
    walk,
)
from .render import RenderOptions, to_svg, to_tikz

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "BENZENE",
    "BechexError",
    "Benzenoid",
    "BenzeneNotComposable",
    "BoundaryWalk",
    "Code",
    "Condensation",
    "ConvexityClass",
    "ConvexityKind",
    "Disconnected",
    "EnumerationReport",
    "FAMILY_IDS",
    "Holed",
    "InvalidSymbols",
    "NamedCompound",
    "NotClosed",
    "NotFound",
    "ParamOutOfRange",
    "RenderOptions",
    "ResourceLimit",
    "SearchConfig",
    "SelfIntersecting",
    "SplitOutOfRange",
    "WindowEmpty",
    "WindowTooLong",
    "canonical",
    "canonical_cells",
    "check_unimodal",
    "classify",
    "compounds",
    "concat",
    "condensation_class",
    "convexity_deficit",
    "count_benzenoids",
    "embed",
    "enumerate_benzenoids",
    "enumerate_unbranched_fusenes",
    "equivalent",
    "expected_cd",
    "expected_h",
    "family_description",
    "find_by_code",
    "generate",
    "helicene",
    "inner_dual",
    "is_k_convex",
    "is_simply_connected",
    "lookup",
    "max_cd_unbranched_benzenoids",
    "min_window_average",
    "mirror_cells",
    "normalize_cells",
    "one_contact_attach",
    "parse_code",
    "report",
    "reverse",
    "rotate",
    "run_search",
    "spiral",
    "to_svg",
    "to_tikz",
    "trace",
    "walk",
    "winding",
    "__version__",
]
