"""SU(1,1) squeezing-operator calculus with matrix-representation oracles.

Layers, bottom up:

* :mod:`squeezeops.algebra` -- closed-form parameter calculus: composition
  on the unit disk, normal-ordered fragmentation, adjoint action.
* :mod:`squeezeops.representations` -- 2x2 defining and truncated
  Fock-space matrices, with the matrix exponential used as ground truth.
* :mod:`squeezeops.timefunc` -- a small expression language over t with
  exact symbolic differentiation for coefficient schedules.
* :mod:`squeezeops.transform` -- time-dependent canonical transformations
  of quadratic Hamiltonians: step operators, fusion, transformed
  Hamiltonians, the classical generating function, and the mismatch of
  its naive operator exponential.
* :mod:`squeezeops.scenario` -- scenario files and CSV time scans.
* :mod:`squeezeops.verify` -- the oracle verification suites.
"""

from .algebra import (
    DiskPoint,
    Fragmentation,
    GeneratorCoeffs,
    SqueezeParam,
    adjoint_action,
    argtanh,
    compose_full,
    compose_pure,
    fragment,
    from_disk,
    inverse,
    killing_form,
    param_distance,
    to_disk,
    transpose_phase,
    wrap_angle,
)
from .representations import (
    AlgebraGenerators,
    FockBasis,
    FockOperators,
    defining_generators,
    expm,
    fock_generators,
    position_momentum,
    project,
    realize,
    realize_fragmentation,
    spectral_norm,
)
from .scenario import (
    CSV_COLUMNS,
    ScanGrid,
    Scenario,
    ScenarioError,
    load_scenario,
    run_scan,
)
from .timefunc import (
    EvalDomainError,
    ParseError,
    TimeFunction,
    derivative,
    evaluate,
    parse,
    render,
)
from .transform import (
    CoefficientSample,
    FusionMismatchError,
    PhasePoint,
    QuadForm,
    SystemConstants,
    TruncationNoiseError,
    dirac_mismatch,
    dirac_mismatch_report,
    f2_eval,
    gamma_mix,
    h1_of,
    h_of,
    ho_of,
    omega_squared,
    phase_space_map,
    quadform_matrix,
    w1_params,
    w2_params,
    w_combined,
)
from .verify import VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "AlgebraGenerators",
    "CSV_COLUMNS",
    "CoefficientSample",
    "DiskPoint",
    "EvalDomainError",
    "FockBasis",
    "FockOperators",
    "Fragmentation",
    "FusionMismatchError",
    "GeneratorCoeffs",
    "ParseError",
    "PhasePoint",
    "QuadForm",
    "ScanGrid",
    "Scenario",
    "ScenarioError",
    "SqueezeParam",
    "SystemConstants",
    "TimeFunction",
    "TruncationNoiseError",
    "VerifyReport",
    "adjoint_action",
    "argtanh",
    "compose_full",
    "compose_pure",
    "defining_generators",
    "derivative",
    "dirac_mismatch",
    "dirac_mismatch_report",
    "evaluate",
    "expm",
    "f2_eval",
    "fock_generators",
    "fragment",
    "from_disk",
    "gamma_mix",
    "h1_of",
    "h_of",
    "ho_of",
    "inverse",
    "killing_form",
    "load_scenario",
    "omega_squared",
    "param_distance",
    "parse",
    "phase_space_map",
    "position_momentum",
    "project",
    "quadform_matrix",
    "realize",
    "realize_fragmentation",
    "render",
    "run_scan",
    "run_verify",
    "spectral_norm",
    "to_disk",
    "transpose_phase",
    "w1_params",
    "w2_params",
    "w_combined",
    "wrap_angle",
    "__version__",
]
