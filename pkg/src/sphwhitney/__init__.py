"""Whitney forms and area formulas for geodesic triangles on the unit sphere."""

from . import errors
from .area import AreaMethod, AreaReport, angular_excess, area, area_report, gram_det
from .barycentric import (
    Barycentric,
    EdgeLabel,
    SubAreas,
    VertexLabel,
    barycentric,
    f_factor,
    sub_areas,
)
from .fieldgrid import FieldGrid, figure_preset, sample_grid, write_csv
from .forms import (
    Covector,
    TwoForm,
    d_lambda,
    d_sub_area,
    f_vector,
    omega,
    whitney1,
    whitney1_oriented,
    whitney2,
)
from .geom import (
    SphericalTriangle,
    TangentBasis,
    det3,
    geodesic_point,
    make_triangle,
    midpoints,
    normalize,
    side_lengths,
    tangent_basis,
)
from .quadrature import (
    ArcRule,
    TriangleRule,
    VERIFY_TOLERANCES,
    integrate_arc,
    integrate_triangle,
    verify_triangle,
)

__version__ = "0.1.0"

__all__ = [
    "AreaMethod",
    "AreaReport",
    "ArcRule",
    "Barycentric",
    "Covector",
    "EdgeLabel",
    "FieldGrid",
    "SphericalTriangle",
    "SubAreas",
    "TangentBasis",
    "TriangleRule",
    "TwoForm",
    "VERIFY_TOLERANCES",
    "VertexLabel",
    "angular_excess",
    "area",
    "area_report",
    "barycentric",
    "d_lambda",
    "d_sub_area",
    "det3",
    "errors",
    "f_factor",
    "f_vector",
    "figure_preset",
    "geodesic_point",
    "gram_det",
    "integrate_arc",
    "integrate_triangle",
    "make_triangle",
    "midpoints",
    "normalize",
    "omega",
    "sample_grid",
    "side_lengths",
    "sub_areas",
    "tangent_basis",
    "verify_triangle",
    "whitney1",
    "whitney1_oriented",
    "whitney2",
    "write_csv",
]
