import numpy as np
import pytest

EXAMPLE1 = np.array([[0, 2, 0],
                     [0, 0, 3],
                     [4, 0, 0]], dtype=np.complex128)

EXAMPLE2 = np.array([[0, 3, 0],
                     [0, 0, 4],
                     [2, 0, 0]], dtype=np.complex128)

JORDAN2 = np.array([[0, 1],
                    [0, 0]], dtype=np.complex128)


def ginibre(rng, n):
    return (rng.standard_normal((n, n))
            + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def random_unitary(rng, n):
    q, r = np.linalg.qr(ginibre(rng, n))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_psd(rng, n):
    g = ginibre(rng, n)
    return g @ g.conj().T


@pytest.fixture
def rng():
    return np.random.default_rng(20260824)
