import numpy as np
import pytest
import scipy.linalg

from spinpair.errors import NonHermitian, NonUnitary
from spinpair.linalg import (
    I2,
    PAULI_PRODUCTS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    ZZ,
    det4,
    expm_hermitian,
    hermitian4,
    kron,
    max_norm,
    rotation,
    unitary4,
)
from spinpair.gates import CNOT

from conftest import haar_unitary


def random_hermitian(rng):
    z = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    return (z + z.conj().T) / 2


class TestKron:
    def test_identity(self):
        assert np.array_equal(kron(I2, I2), np.eye(4))

    def test_diagonal(self):
        assert np.array_equal(kron(SIGMA_Z, SIGMA_Z), np.diag([1, -1, -1, 1]))

    def test_antidiagonal(self):
        # hand expansion of sigma_x (x) sigma_x
        want = np.zeros((4, 4))
        want[0, 3] = want[1, 2] = want[2, 1] = want[3, 0] = 1
        assert np.array_equal(kron(SIGMA_X, SIGMA_X), want)

    def test_pauli_products_table(self):
        assert len(PAULI_PRODUCTS) == 16
        assert np.array_equal(PAULI_PRODUCTS[("z", "z")], ZZ)

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError):
            kron(np.eye(3), I2)


class TestExpmHermitian:
    def test_zero_time(self, rng):
        h = random_hermitian(rng)
        assert max_norm(expm_hermitian(h, 0.0) - np.eye(4)) < 1e-15

    def test_drift_diagonal(self):
        # (pi/2) J ZZ at J=1 for t = 1/2 exponentiates entrywise
        h = (np.pi / 2) * ZZ
        got = expm_hermitian(h, 0.5)
        phase = np.exp(-1j * np.pi / 4)
        want = np.diag([phase, phase.conjugate(), phase.conjugate(), phase])
        assert max_norm(got - want) < 1e-14

    def test_unitarity(self, rng):
        h = random_hermitian(rng)
        u = expm_hermitian(h, 0.37)
        assert max_norm(u.conj().T @ u - np.eye(4)) < 1e-12

    def test_against_scipy(self, rng):
        # independent oracle: Pade-based expm
        for _ in range(20):
            h = random_hermitian(rng)
            t = rng.uniform(-2, 2)
            want = scipy.linalg.expm(-1j * t * h)
            assert max_norm(expm_hermitian(h, t) - want) < 1e-11

    def test_additivity(self, rng):
        h = random_hermitian(rng)
        s, t = rng.uniform(0, 2, size=2)
        lhs = expm_hermitian(h, s + t)
        rhs = expm_hermitian(h, s) @ expm_hermitian(h, t)
        assert max_norm(lhs - rhs) < 1e-10

    def test_determinant_is_trace_phase(self, rng):
        for _ in range(10):
            h = random_hermitian(rng)
            t = rng.uniform(0, 1)
            want = np.exp(-1j * t * np.trace(h))
            assert abs(det4(expm_hermitian(h, t)) - want) < 1e-9

    def test_rejects_non_hermitian(self, rng):
        m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        with pytest.raises(NonHermitian):
            expm_hermitian(m, 1.0)


class TestDet4:
    def test_identity(self):
        assert det4(np.eye(4)) == pytest.approx(1)

    def test_cnot(self):
        # odd permutation matrix
        assert det4(CNOT) == pytest.approx(-1)

    def test_kron_identity(self, rng):
        a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        want = np.linalg.det(a) ** 2 * np.linalg.det(b) ** 2
        assert det4(np.kron(a, b)) == pytest.approx(want, rel=1e-9)


class TestValidation:
    def test_unitary4_accepts(self, rng):
        u = haar_unitary(rng)
        assert unitary4(u) is not None

    def test_unitary4_rejects(self):
        with pytest.raises(NonUnitary):
            unitary4(np.eye(4) * 1.001)

    def test_unitary4_rejects_nan(self):
        m = np.eye(4, dtype=complex)
        m[0, 0] = np.nan
        with pytest.raises(NonUnitary):
            unitary4(m)

    def test_hermitian4_rejects(self, rng):
        m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        with pytest.raises(NonHermitian):
            hermitian4(m)

    def test_product_closure(self, rng):
        for _ in range(10):
            u, v = haar_unitary(rng), haar_unitary(rng)
            w = u @ v
            assert max_norm(w.conj().T @ w - np.eye(4)) < 1e-9


class TestRotation:
    def test_x_pi_is_flip(self):
        assert max_norm(rotation("x", np.pi) + 1j * SIGMA_X) < 1e-15

    def test_composition(self):
        r = rotation("y", 0.3) @ rotation("y", 0.4)
        assert max_norm(r - rotation("y", 0.7)) < 1e-15

    def test_generator(self):
        for axis, sigma in (("x", SIGMA_X), ("y", SIGMA_Y), ("z", SIGMA_Z)):
            got = rotation(axis, 0.2)
            want = np.cos(0.1) * I2 - 1j * np.sin(0.1) * sigma
            assert max_norm(got - want) < 1e-15
