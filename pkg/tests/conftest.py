import numpy as np
import pytest

from doew import MixtureWeights


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_odd_weights(rng) -> MixtureWeights:
    q = rng.dirichlet(np.ones(8))
    return MixtureWeights.odd({2 * k + 1: q[k] for k in range(8)})


def random_feasible_weights(rng) -> MixtureWeights:
    """Odd weights satisfying the pair equalities and the 1/4 bounds."""
    while True:
        v = 0.5 * rng.dirichlet(np.ones(4))
        if v.max() <= 0.25:
            break
    pairs = ((1, 7), (3, 5), (9, 13), (11, 15))
    mapping = {}
    for (a, b), value in zip(pairs, v):
        mapping[a] = mapping[b] = value
    return MixtureWeights.odd(mapping)


def random_hermitian(rng, dim: int) -> np.ndarray:
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (m + m.conj().T)


def random_psd(rng, dim: int) -> np.ndarray:
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return m @ m.conj().T / dim


def random_density(rng, dim: int) -> np.ndarray:
    m = random_psd(rng, dim)
    return m / np.trace(m).real


def random_state(rng, dim: int) -> np.ndarray:
    z = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return z / np.linalg.norm(z)


def random_su2(rng) -> np.ndarray:
    z = rng.normal(size=4)
    w, x, y, zz = z / np.linalg.norm(z)
    return np.array([[w + 1j * zz, y + 1j * x], [-y + 1j * x, w - 1j * zz]])
