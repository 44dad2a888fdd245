"""Time-optimal two-qubit gate analysis and hard-pulse synthesis for a
heteronuclear spin pair with fixed ZZ coupling."""

__version__ = "0.1.0"

from .config import set_tol_scale, tolerances
from .errors import (
    DegenerateSpectrum,
    HardPulseRegimeViolated,
    NonHermitian,
    NonPositiveCoupling,
    NonRealG2,
    NonUnitary,
    NotLocal,
    PositiveDiscriminant,
    ReconstructionFailed,
    ResidualTooLarge,
    ScheduleFormatError,
    SpinPairError,
)
from .gates import CNOT, IDENTITY4, SQRT_SWAP, SWAP, controlled_u, named_gate
from .invariants import (
    ABCTriple,
    LocalInvariants,
    MAGIC,
    abc_from_coords,
    abc_from_invariants,
    local_invariants,
    magic_transform,
)
from .kak import (
    KakDecomposition,
    LocalGate,
    factor_local,
    interaction_unitary,
    kak_decompose,
    reconstruct,
)
from .linalg import det4, expm_hermitian, hermitian4, kron, unitary4
from .mintime import (
    CanonicalCoordinates,
    CubicCoefficients,
    CubicRoots,
    DepressedCubic,
    MinTimeReport,
    canonical_coords,
    coords_from_abc,
    cubic_coefficients,
    depress,
    min_time,
    solve_depressed,
)
from .schedule import (
    ControlAmplitudes,
    GateSpec,
    PulseSegment,
    Schedule,
    cnot_schedule,
    euler_xyx,
    load_schedule,
    save_schedule,
    synthesize,
)
from .simulate import (
    HamiltonianModel,
    SimulationReport,
    batch_verify,
    evolve,
    fidelity,
    verify,
)

__all__ = [
    "__version__",
    "set_tol_scale",
    "tolerances",
    "SpinPairError",
    "NonUnitary",
    "NonHermitian",
    "NonRealG2",
    "PositiveDiscriminant",
    "ResidualTooLarge",
    "NonPositiveCoupling",
    "NotLocal",
    "DegenerateSpectrum",
    "ReconstructionFailed",
    "HardPulseRegimeViolated",
    "ScheduleFormatError",
    "CNOT",
    "SWAP",
    "SQRT_SWAP",
    "IDENTITY4",
    "controlled_u",
    "named_gate",
    "MAGIC",
    "LocalInvariants",
    "ABCTriple",
    "magic_transform",
    "local_invariants",
    "abc_from_invariants",
    "abc_from_coords",
    "CubicCoefficients",
    "DepressedCubic",
    "CubicRoots",
    "CanonicalCoordinates",
    "MinTimeReport",
    "cubic_coefficients",
    "depress",
    "solve_depressed",
    "coords_from_abc",
    "canonical_coords",
    "min_time",
    "LocalGate",
    "KakDecomposition",
    "interaction_unitary",
    "factor_local",
    "kak_decompose",
    "reconstruct",
    "kron",
    "det4",
    "expm_hermitian",
    "unitary4",
    "hermitian4",
    "ControlAmplitudes",
    "PulseSegment",
    "GateSpec",
    "Schedule",
    "euler_xyx",
    "cnot_schedule",
    "synthesize",
    "save_schedule",
    "load_schedule",
    "HamiltonianModel",
    "SimulationReport",
    "evolve",
    "fidelity",
    "verify",
    "batch_verify",
]
