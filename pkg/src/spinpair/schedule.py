"""Hard-pulse schedule synthesis.

A schedule is an ordered list of piecewise-constant control segments for the
Hamiltonian H = H_d + v1 H1 + v2 H2 + v3 H3 + v4 H4, with the ZZ drift always
on.  Local rotations are realized as short, strong pulses: a constant
amplitude v on H = v*pi*sigma held for duration t rotates by 2*pi*v*t, so
synthesized pulses fix |v| = N/2 and modulate duration (the strongest qubit in
a merged segment gets exactly N/2).  Gate time is then paid almost entirely in
free-drift segments, whose total equals the analytic minimal time; the
residual infidelity is the physical O(J/N) hard-pulse error, not a numerical
artifact.

CNOT uses the dedicated five-segment sequence; SWAP and sqrt(SWAP) use the
three-drift pulse products; everything else goes through the Cartan
decomposition, realizing each interaction coordinate as a conjugated drift
window (the drift natively accumulates negative ZZ phase, so a positive
coordinate needs a pi x-pulse sandwich on the second qubit).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .config import tolerances
from .errors import HardPulseRegimeViolated, ScheduleFormatError
from .gates import CNOT, SQRT_SWAP, SWAP, controlled_u
from .kak import kak_decompose
from .linalg import max_norm, unitary4

ZERO_AMPLITUDE = 1e-15
COORD_SKIP = 1e-12  # interaction coordinates below this emit no segment


@dataclass(frozen=True)
class ControlAmplitudes:
    """Dimensionless multipliers of the four control terms H1..H4."""

    v1: float
    v2: float
    v3: float
    v4: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.v1, self.v2, self.v3, self.v4)

    @property
    def is_zero(self) -> bool:
        return all(abs(v) <= ZERO_AMPLITUDE for v in self.as_tuple())


@dataclass(frozen=True)
class PulseSegment:
    duration: float
    amplitudes: ControlAmplitudes

    def __post_init__(self):
        if not (self.duration > 0 and np.isfinite(self.duration)):
            raise ValueError(f"segment duration must be positive, got {self.duration}")


@dataclass(frozen=True, eq=False)
class GateSpec:
    """Target gate: a named library gate, a controlled-U, or a custom matrix."""

    name: str
    gamma: tuple[float, float, float] | None = None
    matrix: np.ndarray | None = field(default=None, repr=False)

    _NAMES = ("cnot", "swap", "sqrtswap", "cu", "custom")

    def __post_init__(self):
        if self.name not in self._NAMES:
            raise ValueError(f"unknown gate name {self.name!r}")
        if self.name == "cu" and self.gamma is None:
            raise ValueError("controlled-U requires gamma parameters")
        if self.name == "custom":
            if self.matrix is None:
                raise ValueError("custom gate requires a matrix")
            m = unitary4(self.matrix, tol=tolerances.input_unitarity)
            # Accepted input may sit up to the input tolerance away from the
            # unitary group; snap it to the nearest unitary (polar projection)
            # so the strict internal invariants hold downstream.
            u, _, vh = np.linalg.svd(m)
            object.__setattr__(self, "matrix", u @ vh)

    @classmethod
    def cnot(cls) -> "GateSpec":
        return cls(name="cnot")

    @classmethod
    def swap(cls) -> "GateSpec":
        return cls(name="swap")

    @classmethod
    def sqrt_swap(cls) -> "GateSpec":
        return cls(name="sqrtswap")

    @classmethod
    def controlled_u(cls, gamma1: float, gamma2: float, gamma3: float) -> "GateSpec":
        return cls(name="cu", gamma=(float(gamma1), float(gamma2), float(gamma3)))

    @classmethod
    def custom(cls, matrix) -> "GateSpec":
        return cls(name="custom", matrix=np.asarray(matrix, dtype=complex))

    def unitary(self) -> np.ndarray:
        if self.name == "cnot":
            return CNOT.copy()
        if self.name == "swap":
            return SWAP.copy()
        if self.name == "sqrtswap":
            return SQRT_SWAP.copy()
        if self.name == "cu":
            return controlled_u(*self.gamma)
        return np.array(self.matrix, dtype=complex)

    def to_dict(self) -> dict:
        if self.name == "cu":
            return {"name": "cu", "gamma": list(self.gamma)}
        if self.name == "custom":
            return {
                "name": "custom",
                "matrix": {
                    "re": self.matrix.real.tolist(),
                    "im": self.matrix.imag.tolist(),
                },
            }
        return {"name": self.name}

    @classmethod
    def from_dict(cls, data: dict) -> "GateSpec":
        try:
            name = data["name"]
            if name == "cu":
                g = data["gamma"]
                return cls.controlled_u(g[0], g[1], g[2])
            if name == "custom":
                m = data["matrix"]
                return cls.custom(np.array(m["re"], dtype=float) + 1j * np.array(m["im"], dtype=float))
            return cls(name=name)
        except (KeyError, TypeError, IndexError) as exc:
            raise ScheduleFormatError(f"malformed gate description: {exc}") from exc

    def label(self) -> str:
        if self.name == "cu":
            return "cu(%.12g, %.12g, %.12g)" % self.gamma
        return self.name


def _zero_amp_time(segments) -> float:
    return float(sum(s.duration for s in segments if s.amplitudes.is_zero))


@dataclass(frozen=True, eq=False)
class Schedule:
    segments: tuple[PulseSegment, ...]
    coupling_j: float
    pulse_strength_n: float
    target: GateSpec
    declared_drift_time: float

    def __post_init__(self):
        if abs(self.declared_drift_time - _zero_amp_time(self.segments)) > 1e-12:
            raise ValueError(
                "declared drift time does not match the zero-amplitude segments"
            )

    @property
    def wall_time(self) -> float:
        return float(sum(s.duration for s in self.segments))

    def to_dict(self) -> dict:
        return {
            "coupling_j_hz": self.coupling_j,
            "pulse_strength_n": self.pulse_strength_n,
            "target": self.target.to_dict(),
            "segments": [
                {"duration_s": s.duration, "v": list(s.amplitudes.as_tuple())}
                for s in self.segments
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Schedule":
        try:
            segments = tuple(
                PulseSegment(
                    duration=float(seg["duration_s"]),
                    amplitudes=ControlAmplitudes(*(float(v) for v in seg["v"])),
                )
                for seg in data["segments"]
            )
            target = GateSpec.from_dict(data["target"])
            return cls(
                segments=segments,
                coupling_j=float(data["coupling_j_hz"]),
                pulse_strength_n=float(data["pulse_strength_n"]),
                target=target,
                declared_drift_time=_zero_amp_time(segments),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ScheduleFormatError):
                raise
            raise ScheduleFormatError(f"malformed schedule: {exc}") from exc


def save_schedule(schedule: Schedule, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(schedule.to_dict(), fh, indent=2)
        fh.write("\n")


def load_schedule(path) -> Schedule:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ScheduleFormatError(f"schedule file is not valid JSON: {exc}") from exc
    return Schedule.from_dict(data)


def euler_xyx(k) -> tuple[float, float, float]:
    """Angles (alpha, beta, delta) with k = R_x(alpha) R_y(beta) R_x(delta).

    k must be in SU(2).  The control set has no sigma_z term, so X-Y-X Euler
    angles are the natural primitive for rendering local gates as pulses.
    Gimbal-degenerate inputs (beta near 0 or pi) return delta = 0.
    """
    k = np.asarray(k, dtype=complex)
    if k.shape != (2, 2):
        raise ValueError("euler_xyx expects a 2x2 matrix")
    if max_norm(k.conj().T @ k - np.eye(2)) > 1e-9 or abs(np.linalg.det(k) - 1) > 1e-9:
        raise ValueError("euler_xyx expects a special unitary (det 1) matrix")

    # Real quaternion-like components: k = cos(b/2)cos(s) - i [...] with
    # s = (alpha+delta)/2, d = (alpha-delta)/2, b = beta.
    ca = float(k[0, 0].real)  # cos(b/2) cos(s)
    cc = float(-k[0, 1].imag)  # cos(b/2) sin(s)
    sb = float(-k[0, 1].real)  # sin(b/2) cos(d)
    sd = float(-k[0, 0].imag)  # sin(b/2) sin(d)

    cos_half = np.hypot(ca, cc)
    sin_half = np.hypot(sb, sd)
    beta = float(2 * np.arctan2(sin_half, cos_half))
    eps = 1e-9
    if sin_half < eps:
        alpha, delta = float(2 * np.arctan2(cc, ca)), 0.0
    elif cos_half < eps:
        alpha, delta = float(2 * np.arctan2(sd, sb)), 0.0
    else:
        s = np.arctan2(cc, ca)
        d = np.arctan2(sd, sb)
        alpha, delta = float(s + d), float(s - d)
    return alpha, beta, delta


def _pulse(axis: str, q1_angle: float, q2_angle: float, n: float) -> list[PulseSegment]:
    """One merged hard-pulse segment rotating both qubits about one axis.

    The qubit with the larger rotation runs at amplitude exactly +-N/2; the
    other is scaled down so both finish together.
    """
    peak = max(abs(q1_angle), abs(q2_angle))
    if peak <= 1e-12:
        return []
    duration = peak / (np.pi * n)
    v = [0.0, 0.0, 0.0, 0.0]
    slot1 = 0 if axis == "x" else 1
    slot2 = 2 if axis == "x" else 3
    v[slot1] = (q1_angle / peak) * (n / 2)
    v[slot2] = (q2_angle / peak) * (n / 2)
    return [PulseSegment(duration, ControlAmplitudes(*v))]


def _drift(duration: float) -> PulseSegment:
    return PulseSegment(duration, ControlAmplitudes(0.0, 0.0, 0.0, 0.0))


def _local_stages(a, b, n: float) -> list[PulseSegment]:
    """Render a local pair a (x) b as merged X, Y, X pulse stages (time order)."""
    a1, b1, d1 = euler_xyx(a)
    a2, b2, d2 = euler_xyx(b)
    segments = []
    segments += _pulse("x", d1, d2, n)
    segments += _pulse("y", b1, b2, n)
    segments += _pulse("x", a1, a2, n)
    return segments


def _require_hard_pulse(coupling_j: float, pulse_strength_n: float) -> None:
    if coupling_j <= 0:
        raise HardPulseRegimeViolated(f"coupling J must be positive, got {coupling_j}")
    if pulse_strength_n < 10 * coupling_j:
        raise HardPulseRegimeViolated(
            f"pulse strength N = {pulse_strength_n} below hard-pulse threshold "
            f"10*J = {10 * coupling_j}"
        )


def cnot_schedule(coupling_j: float, pulse_strength_n: float) -> Schedule:
    """The five-segment CNOT sequence: one free-drift window of 1/(2J) framed
    by four hard pulses."""
    _require_hard_pulse(coupling_j, pulse_strength_n)
    n = pulse_strength_n
    tau = 1.0 / n
    segments = (
        PulseSegment(tau, ControlAmplitudes(0.0, n / 2, 0.0, n / 4)),
        _drift(1.0 / (2 * coupling_j)),
        PulseSegment(tau, ControlAmplitudes(0.0, -n / 4, 0.0, -n / 4)),
        PulseSegment(tau, ControlAmplitudes(-n / 4, 0.0, -n / 4, 0.0)),
        PulseSegment(tau, ControlAmplitudes(0.0, -n / 4, 0.0, 0.0)),
    )
    return Schedule(
        segments=segments,
        coupling_j=float(coupling_j),
        pulse_strength_n=float(n),
        target=GateSpec.cnot(),
        declared_drift_time=1.0 / (2 * coupling_j),
    )


def _swap_family_segments(drift_duration: float, n: float) -> tuple[PulseSegment, ...]:
    # Three equal drift windows conjugated onto the ZZ, YY and XX axes.  The
    # pulse train realizes, right to left in time:
    #   exp(i/4(H2-H4)) D exp(-i/4(H2-H4)) exp(-i/4(H1-H3)) D
    #   exp(-i/4(H1+H3)) D exp(i/2 H1)
    half = np.pi / 2
    segments = []
    segments += _pulse("x", -np.pi, 0.0, n)
    segments.append(_drift(drift_duration))
    segments += _pulse("x", half, half, n)
    segments.append(_drift(drift_duration))
    segments += _pulse("x", half, -half, n)
    segments += _pulse("y", half, -half, n)
    segments.append(_drift(drift_duration))
    segments += _pulse("y", -half, half, n)
    return tuple(segments)


def _kak_segments(u, coupling_j: float, n: float) -> tuple[tuple[PulseSegment, ...], float]:
    decomposition = kak_decompose(u)
    c1, c2, c3 = decomposition.coords.as_tuple()
    segments: list[PulseSegment] = []
    drift_total = 0.0

    segments += _local_stages(decomposition.k2.a, decomposition.k2.b, n)

    def drift_window(coordinate: float) -> float:
        duration = abs(coordinate) / (np.pi * coupling_j)
        segments.append(_drift(duration))
        return duration

    # ZZ: the drift accumulates exp(-i theta ZZ), so a negative coordinate is
    # free evolution and a positive one needs the (1 (x) X) sign-flip sandwich.
    if abs(c3) > COORD_SKIP:
        if c3 > 0:
            segments += _pulse("x", 0.0, np.pi, n)
            drift_total += drift_window(c3)
            segments += _pulse("x", 0.0, -np.pi, n)
        else:
            drift_total += drift_window(c3)

    # YY: conjugate ZZ -> -YY with opposite x rotations.
    if c2 > COORD_SKIP:
        segments += _pulse("x", -np.pi / 2, np.pi / 2, n)
        drift_total += drift_window(c2)
        segments += _pulse("x", np.pi / 2, -np.pi / 2, n)

    # XX: conjugate ZZ -> -XX with opposite y rotations.
    if c1 > COORD_SKIP:
        segments += _pulse("y", np.pi / 2, -np.pi / 2, n)
        drift_total += drift_window(c1)
        segments += _pulse("y", -np.pi / 2, np.pi / 2, n)

    segments += _local_stages(decomposition.k1.a, decomposition.k1.b, n)
    return tuple(segments), drift_total


def synthesize(spec: GateSpec, coupling_j: float, pulse_strength_n: float) -> Schedule:
    """Build a time-optimal hard-pulse schedule for the target gate.

    The total duration of the zero-amplitude (free drift) segments equals the
    analytic minimal time of the gate; all pulse segments shrink as 1/N.
    """
    _require_hard_pulse(coupling_j, pulse_strength_n)
    if spec.name == "cnot":
        return cnot_schedule(coupling_j, pulse_strength_n)

    n = float(pulse_strength_n)
    if spec.name == "swap":
        segments = _swap_family_segments(1.0 / (2 * coupling_j), n)
        drift = 3.0 / (2 * coupling_j)
    elif spec.name == "sqrtswap":
        segments = _swap_family_segments(1.0 / (4 * coupling_j), n)
        drift = 3.0 / (4 * coupling_j)
    else:
        segments, drift = _kak_segments(spec.unitary(), coupling_j, n)

    return Schedule(
        segments=segments,
        coupling_j=float(coupling_j),
        pulse_strength_n=n,
        target=spec,
        declared_drift_time=float(drift),
    )
