import numpy as np
import pytest

from spinpair.gates import CNOT, IDENTITY4, SQRT_SWAP, SWAP
from spinpair.linalg import max_norm
from spinpair.schedule import (
    ControlAmplitudes,
    GateSpec,
    PulseSegment,
    Schedule,
    cnot_schedule,
    synthesize,
)
from spinpair.simulate import (
    HamiltonianModel,
    batch_verify,
    evolve,
    fidelity,
    verify,
)

from conftest import haar_unitary


def empty_schedule():
    return Schedule(
        segments=(),
        coupling_j=1.0,
        pulse_strength_n=100.0,
        target=GateSpec.custom(IDENTITY4),
        declared_drift_time=0.0,
    )


def drift_only(duration, j=1.0):
    return Schedule(
        segments=(PulseSegment(duration, ControlAmplitudes(0, 0, 0, 0)),),
        coupling_j=j,
        pulse_strength_n=100.0,
        target=GateSpec.custom(IDENTITY4),
        declared_drift_time=duration,
    )


class TestHamiltonianModel:
    def test_all_terms_hermitian(self):
        model = HamiltonianModel(coupling_j=2.0)
        for h in (model.h_drift, *model.controls):
            assert max_norm(h - h.conj().T) < 1e-12

    def test_segment_assembly(self):
        model = HamiltonianModel(coupling_j=1.0)
        h = model.segment_hamiltonian(ControlAmplitudes(1.0, 0.0, -2.0, 0.0))
        want = model.h_drift + model.controls[0] - 2 * model.controls[2]
        assert max_norm(h - want) < 1e-12


class TestEvolve:
    def test_empty_schedule(self):
        assert max_norm(evolve(empty_schedule()) - np.eye(4)) < 1e-15

    def test_pure_drift_half_period(self):
        got = evolve(drift_only(0.5, j=1.0))
        phase = np.exp(-1j * np.pi / 4)
        want = np.diag([phase, phase.conjugate(), phase.conjugate(), phase])
        assert max_norm(got - want) < 1e-14

    def test_unitarity(self):
        s = synthesize(GateSpec.swap(), 1.0, 100.0)
        u = evolve(s)
        assert max_norm(u.conj().T @ u - np.eye(4)) < 1e-12

    def test_composition(self):
        s1 = cnot_schedule(1.0, 100.0)
        s2 = synthesize(GateSpec.swap(), 1.0, 100.0)
        combined = Schedule(
            segments=s1.segments + s2.segments,
            coupling_j=1.0,
            pulse_strength_n=100.0,
            target=GateSpec.swap(),
            declared_drift_time=s1.declared_drift_time + s2.declared_drift_time,
        )
        assert max_norm(evolve(combined) - evolve(s2) @ evolve(s1)) < 1e-10


class TestFidelity:
    def test_self(self, rng):
        u = haar_unitary(rng)
        assert fidelity(u, u) == pytest.approx(1.0, abs=1e-12)

    def test_global_phase_invariant(self, rng):
        u = haar_unitary(rng)
        assert fidelity(u, np.exp(1j * 0.83) * u) == pytest.approx(1.0, abs=1e-12)

    def test_identity_vs_cnot(self):
        assert fidelity(IDENTITY4, CNOT) == pytest.approx(0.5, abs=1e-14)

    def test_bounded(self, rng):
        for _ in range(20):
            f = fidelity(haar_unitary(rng), haar_unitary(rng))
            assert 0 <= f <= 1 + 1e-12


class TestVerify:
    def test_cnot_thresholds(self):
        r = verify(cnot_schedule(1.0, 1000.0), CNOT)
        assert r.fidelity >= 0.999
        assert r.drift_time == 0.5
        assert r.wall_time == pytest.approx(0.504)

    def test_swap(self):
        r = verify(synthesize(GateSpec.swap(), 1.0, 1000.0), SWAP)
        assert r.fidelity >= 0.999
        assert r.drift_time == pytest.approx(1.5)

    def test_empty_vs_identity(self):
        r = verify(empty_schedule(), IDENTITY4)
        assert r.fidelity == pytest.approx(1.0, abs=1e-15)
        assert r.wall_time == 0.0

    def test_cross_gate_fails(self):
        r = verify(cnot_schedule(1.0, 1000.0), SWAP)
        assert r.fidelity < 0.9

    def test_relative_phase_reported(self):
        # the CNOT pulse product realizes e^{i pi/4} CNOT in the strong limit
        r = verify(cnot_schedule(1.0, 10000.0), CNOT)
        assert r.relative_phase == pytest.approx(np.pi / 4, abs=1e-3)

    def test_batch_order(self):
        schedules = [cnot_schedule(1.0, 1000.0), synthesize(GateSpec.swap(), 1.0, 1000.0)]
        targets = [CNOT, SWAP]
        reports = batch_verify(schedules, targets)
        assert [r.drift_time for r in reports] == [0.5, 1.5]
        for r in reports:
            assert r.fidelity >= 0.999


class TestInfidelityScaling:
    def test_first_order_bound(self):
        # fit the constant at N = 100 J, then bound the larger-N runs
        j = 1.0
        fit_n = 100.0
        c = (1 - verify(cnot_schedule(j, fit_n), CNOT).fidelity) * fit_n / j
        for n in (1000.0, 10000.0):
            infidelity = 1 - verify(cnot_schedule(j, n), CNOT).fidelity
            assert infidelity <= c * (j / n)

    @pytest.mark.parametrize(
        "spec,target",
        [(GateSpec.swap(), SWAP), (GateSpec.sqrt_swap(), SQRT_SWAP)],
        ids=["swap", "sqrtswap"],
    )
    def test_synthesized_gates_scale(self, spec, target):
        j = 1.0
        c = (1 - verify(synthesize(spec, j, 100.0), target).fidelity) * 100.0 / j
        for n in (1000.0, 10000.0):
            infidelity = 1 - verify(synthesize(spec, j, n), target).fidelity
            assert infidelity <= c * (j / n)
