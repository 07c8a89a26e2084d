"""Flat U(1) connections on the punctured plane.

Computes holonomy, gauge orbits, de Rham periods and moduli-circle
coordinates for flat u(1)-valued connections, verifying numerically that
gauge classes form a circle of circumference |e| = sqrt(4*pi*alpha) and
classifying holonomy groups as Z_q (rational holonomy parameter) or Z
(irrational).
"""

from ._kernels import BACKEND
from .errors import (
    AbflatError,
    DegeneratePath,
    GradientInconsistent,
    MalformedRatio,
    NonPositiveAlpha,
    NotClosed,
    NotGenerator,
    NumericalError,
    QuadratureNoConvergence,
    SamplingUnresolved,
    SegmentThroughOrigin,
    ValidationError,
    VertexAtOrigin,
    WindingNotInteger,
)
from .forms import (
    FlatConnection,
    FlatnessReport,
    GradientReport,
    SampledCovectorField,
    ScalarField,
    canonical_a0_at,
    canonical_field,
    connection_field,
    line_integral,
    line_integral_sampled,
    polynomial_field,
    radial_log_field,
    verify_field,
    verify_flat,
)
from .gauge import (
    ExpBeta,
    GaugeMap,
    Product,
    WindingMap,
    construct_fn,
    evaluate_map,
    exp_sharp,
    gauge_apply,
    map_winding,
)
from .geometry import (
    PolyPath,
    PuncturedPoint,
    concatenate,
    regular_polygon,
    segment_angle,
    validate_path,
    winding_number,
)
from .moduli import (
    Classification,
    Cyclic,
    DeclaredIrrational,
    EquivalenceWitness,
    ExactRational,
    FloatRatio,
    FluxRatio,
    HolonomyGroup,
    InfiniteCyclic,
    ModuliCoordinate,
    PhysicalConstants,
    Trivial,
    classify_holonomy,
    exact_rational,
    gauge_equivalent,
    holonomy,
    holonomy_spectrum,
    make_constants,
    period,
    reduce_to_moduli,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # errors
    "AbflatError",
    "ValidationError",
    "NumericalError",
    "VertexAtOrigin",
    "SegmentThroughOrigin",
    "DegeneratePath",
    "NotClosed",
    "NotGenerator",
    "GradientInconsistent",
    "NonPositiveAlpha",
    "MalformedRatio",
    "WindingNotInteger",
    "QuadratureNoConvergence",
    "SamplingUnresolved",
    # geometry
    "PuncturedPoint",
    "PolyPath",
    "validate_path",
    "segment_angle",
    "winding_number",
    "concatenate",
    "regular_polygon",
    # forms
    "ScalarField",
    "FlatConnection",
    "SampledCovectorField",
    "FlatnessReport",
    "GradientReport",
    "canonical_a0_at",
    "canonical_field",
    "connection_field",
    "line_integral",
    "line_integral_sampled",
    "verify_flat",
    "verify_field",
    "polynomial_field",
    "radial_log_field",
    # gauge
    "GaugeMap",
    "WindingMap",
    "ExpBeta",
    "Product",
    "construct_fn",
    "exp_sharp",
    "evaluate_map",
    "map_winding",
    "gauge_apply",
    # moduli
    "PhysicalConstants",
    "ModuliCoordinate",
    "FluxRatio",
    "ExactRational",
    "DeclaredIrrational",
    "FloatRatio",
    "HolonomyGroup",
    "Trivial",
    "Cyclic",
    "InfiniteCyclic",
    "Classification",
    "EquivalenceWitness",
    "make_constants",
    "period",
    "holonomy",
    "reduce_to_moduli",
    "gauge_equivalent",
    "classify_holonomy",
    "holonomy_spectrum",
    "exact_rational",
]
