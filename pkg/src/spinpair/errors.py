"""Exception types raised by the spinpair pipeline."""


class SpinPairError(Exception):
    """Base class for all spinpair errors."""


class NonUnitary(SpinPairError):
    """A matrix failed its unitarity check."""


class NonHermitian(SpinPairError):
    """A matrix failed its Hermiticity check."""


class NonRealG2(SpinPairError):
    """The invariant G2 has a non-negligible imaginary part.

    Signals that the input is outside the analyzed class of two-qubit
    unitaries or is numerically corrupt.
    """


class PositiveDiscriminant(SpinPairError):
    """The depressed cubic has a positive discriminant.

    For invariants derived from an actual two-qubit unitary this case never
    occurs, so it signals invalid input.
    """


class ResidualTooLarge(SpinPairError):
    """A cubic root failed its polynomial-residual or range validation."""


class NonPositiveCoupling(SpinPairError):
    """The coupling constant J must be strictly positive."""


class NotLocal(SpinPairError):
    """A 4x4 unitary is not a tensor product of single-qubit gates."""


class DegenerateSpectrum(SpinPairError):
    """Eigenspace separation failed during decomposition (internal)."""


class ReconstructionFailed(SpinPairError):
    """A decomposition does not reproduce its source within tolerance."""


class HardPulseRegimeViolated(SpinPairError):
    """Pulse strength N is too small relative to the coupling J."""


class ScheduleFormatError(SpinPairError):
    """A schedule or matrix file could not be parsed."""
