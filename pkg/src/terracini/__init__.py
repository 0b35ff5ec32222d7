"""Secant-variety invariants of parameterized projective varieties over F_p."""

__version__ = "0.1.0"

from .linalg import DEFAULT_PRIME, FALLBACK_PRIME, Matrix, nullspace_basis, rank, rowspace_intersection
from .poly import Poly, PolyMap, evaluate, jacobian_at, linear_transform, partial_derivative
from .sampling import SampleConfig, SamplingError
from .varieties import (
    VarietySpec,
    ambient_span_dim,
    cone_over,
    from_json,
    linear_space,
    pluecker_lines,
    point_spec,
    project_from_point,
    projective_dimension,
    reduce_to_span,
    scroll,
    segre,
    veronese,
)
from .grammar import SpecParseError, build_spec, format_spec, parse_spec
from .secant import (
    DefectProfile,
    TangentFrame,
    defect_profile,
    drop_sequence_direct,
    join_dimension,
    relative_dimensions,
    secant_dimension,
    secant_dimension_by_join,
    tangent_frame,
    tangent_variety_dimension,
    tangential_projection,
    vertex_dimension,
)
from .classifier import (
    ClassificationReport,
    SurfaceType,
    Verdict,
    check_additivity,
    check_superadditivity,
    classify,
    identify_defective_surface,
    n_scorza,
    phi_bound,
    zak_bound,
)
from .report import ReportDocument, emit_json, emit_text, parse_json
