"""Gate synthesis and state transfer with two fixed, non-orthogonal rotation axes."""

from .cartan import CNOT, CartanSpec, assemble, cnot_error, cnot_spec, cnot_sweep, ising_flow
from .decomp import (
    DecompositionResult,
    TargetGate,
    decompose_su2,
    generalized_euler_angles,
    lowenthal_bound,
    lowenthal_bound_kappa,
    reconstruct,
    reconstruct_su2,
    standard_euler_angles,
)
from .errors import DegenerateGate, DomainError, FrameError, NumericError, OptEulerError
from .fidelity import (
    ErrorReport,
    TiltModel,
    average_tilt_error,
    gate_fidelity,
    max_tilt_error,
    standard_sequence_error,
    threshold_kappa,
    tilted_z_fidelity,
)
from .gates import NAMED_GATES, named_gate
from .rotkit import (
    AxisFrame,
    BlochState,
    GeneratorVector,
    PolarCoords,
    bloch_roundtrip,
    polar,
    rotation_about_axis,
    single_step_params,
    so3_from_generator,
    so3_from_su2,
    su2_exp,
    su2_from_params,
)
from .sequence import EulerSequence, Step
from .transfer import (
    TransferProblem,
    ladder_transfer,
    min_steps_g_first,
    min_steps_h_first,
    minimal_step_count,
    pr1,
    pr2,
    shortest_transfer,
    transfer_sequence,
)

__version__ = "0.1.0"
