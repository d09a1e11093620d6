"""Stable evaluation of Gauss hypergeometric parameter families.

Evaluates f_n = F(a + e1*n, b + e2*n; c + e3*n; z) over the 26 unit shift
directions by reducing each to one of five basic three-term recurrences,
classifying which solution is minimal or dominant at z, and running the
recursion in the numerically stable direction with overflow-safe scaling.
"""

from .connection import (
    ARGUMENT_KINDS,
    ConnectionExpansion,
    apply_connection,
    expand_to,
    select_transform,
    transform_argument,
)
from .domains import (
    BoundarySample,
    CharacteristicData,
    GridNode,
    RegionClassification,
    SolutionLabel,
    characteristic_roots,
    classify,
    iter_region_grid,
    region_grid,
    trace_boundary,
)
from .engine import (
    DirectionAdvice,
    RecursionRun,
    ScaledValue,
    advise_direction,
    eval_by_c_recursion,
    jacobi_eval,
    run_recursion,
)
from .errors import (
    BoundaryIndeterminate,
    CatastrophicCancellation,
    DegenerateConnection,
    DomainError,
    GaussRecError,
    NoConvergence,
    PoleOfGamma,
    SingularPoint,
    SingularPrefactor,
    StepSingular,
    TraceFailure,
    VoidShift,
)
from .evaluate import EvalResult, eval_f21, eval_f21_detailed
from .kernels import (
    BASIC_FORMS,
    RecurrenceCoefficients,
    coefficient_limits,
    coefficients,
    residual,
    shifted_params,
)
from .reduction import ReductionPlan, ShiftVector, basic_member, family_prefactor, reduce_case
from .series import series_f21
from .solutions import (
    LabeledSolution,
    backward_companions_k15,
    f_solution,
    g_solution,
    h_solution_k6,
)
from .types import ParameterSet, SeriesResult

__version__ = "1.0.0"
