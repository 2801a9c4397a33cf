"""Right-angled hyperbolic hexagons, their arc triples, measured foliations
and the compactification of the hexagon's Teichmüller space."""

from .arcs import (
    ARCS,
    ArcClass,
    ArcTriple,
    compatible_triples,
    crosses,
    parse_arc,
    parse_triple,
    triple_case,
)
from .errors import (
    HexatlasError,
    Infeasible,
    NonPositiveLength,
    NotAdmissible,
    NotConverged,
    NotInChart,
    NotInGoodPosition,
    SequenceSyntaxError,
    UnsupportedSpec,
    ZeroCoords,
    ZeroFoliation,
)
from .foliation import (
    ChartCoords,
    FoliationClass,
    PMFCellComplex,
    PMFPoint,
    charts_containing,
    from_chart,
    good_position,
    intersection_number,
    pl_transition,
    pmf_cell_complex,
    projectivize,
    to_chart,
)
from .hexagon import (
    FeetSolution,
    HexagonLengths,
    PentagonLengths,
    complete_pentagon,
    opposite_side,
    pentagon_between,
    perpendicular_feet,
    scaled_opposite,
    scaling_kernel,
    solve_from_alternating,
    solve_from_triple,
)
from .teichmueller import (
    BoundaryLimit,
    DivergenceReport,
    ProjectivePoint6,
    SequenceSpec,
    TeichPoint,
    boundary_chart,
    boundary_limit,
    diverges,
    in_thick_part,
    length_vector6,
    pants_double,
    projective_embed,
    projective_embed_f,
    q_projection,
    reconstruct,
    teich_from_triple,
)

__version__ = "0.1.0"

__all__ = [
    "ARCS",
    "ArcClass",
    "ArcTriple",
    "compatible_triples",
    "crosses",
    "parse_arc",
    "parse_triple",
    "triple_case",
    "HexatlasError",
    "Infeasible",
    "NonPositiveLength",
    "NotAdmissible",
    "NotConverged",
    "NotInChart",
    "NotInGoodPosition",
    "SequenceSyntaxError",
    "UnsupportedSpec",
    "ZeroCoords",
    "ZeroFoliation",
    "ChartCoords",
    "FoliationClass",
    "PMFCellComplex",
    "PMFPoint",
    "charts_containing",
    "from_chart",
    "good_position",
    "intersection_number",
    "pl_transition",
    "pmf_cell_complex",
    "projectivize",
    "to_chart",
    "FeetSolution",
    "HexagonLengths",
    "PentagonLengths",
    "complete_pentagon",
    "opposite_side",
    "pentagon_between",
    "perpendicular_feet",
    "scaled_opposite",
    "scaling_kernel",
    "solve_from_alternating",
    "solve_from_triple",
    "BoundaryLimit",
    "DivergenceReport",
    "ProjectivePoint6",
    "SequenceSpec",
    "TeichPoint",
    "boundary_chart",
    "boundary_limit",
    "diverges",
    "in_thick_part",
    "length_vector6",
    "pants_double",
    "projective_embed",
    "projective_embed_f",
    "q_projection",
    "reconstruct",
    "teich_from_triple",
]
