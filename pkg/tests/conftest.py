import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def haar_unitary(rng, n=4):
    """Haar-random unitary via QR of a complex Gaussian matrix."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_su2(rng):
    u = haar_unitary(rng, n=2)
    return u / np.sqrt(np.linalg.det(u))


def random_local(rng):
    """Random element of SU(2) (x) SU(2)."""
    return np.kron(random_su2(rng), random_su2(rng))
