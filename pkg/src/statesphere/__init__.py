"""Uncertainty geometry on the sphere of unit quantum states."""

from .canonical import Grid, commutator_residual, gaussian, momentum_op, position_op
from .errors import (
    DegenerateX,
    DimensionMismatch,
    DimensionTooSmall,
    GeometryError,
    InvalidParameter,
    NotHermitian,
    NotNormalized,
    SupportViolation,
    ZeroVector,
)
from .evolution import FlowTrace, default_dt, flow, projected_speed, trace_flow
from .hilbert import (
    Observable,
    SpectralDecomposition,
    State,
    brackets,
    centered,
    expectation,
    inner,
    normalize,
    spectral,
    validate_state,
)
from .optimize import (
    OptimizeResult,
    minimize_multistart,
    minimize_product,
    objective,
    riemannian_grad,
)
from .projective import (
    EigenSet,
    Ray,
    TriangleReport,
    dist_to_eigenset,
    eigenset,
    eigenset_distance,
    fs_distance,
    horizontal,
    triangle_report,
)
from .realify import (
    AdaptedCoordinates,
    RealizedVector,
    adapted_basis,
    metric_g,
    parallelogram_area,
    realize,
    symplectic,
)
from .uncertainty import (
    MinimalConditionResult,
    TangentVector,
    UncertaintyReport,
    minimal_condition,
    relations_report,
    std_dev,
    tangent_field,
)

__version__ = "0.1.0"
