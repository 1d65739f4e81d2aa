import math

import numpy as np
import pytest

from qws.catalog import (
    caption_initial_state,
    fig1_model,
    fig2_model,
    fig3_model,
    homogeneous_hadamard_model,
)
from qws.model import Coin, ModelSpec, StateVector, coin_at

TWO_PI = 2.0 * math.pi


@pytest.fixture(scope="session")
def fig1():
    return fig1_model()


@pytest.fixture(scope="session")
def fig2():
    return fig2_model()


@pytest.fixture(scope="session")
def fig3():
    return fig3_model()


@pytest.fixture(scope="session")
def hadamard_walk():
    return homogeneous_hadamard_model()


@pytest.fixture()
def psi0():
    return caption_initial_state()


def circ_dist(a: float, b: float) -> float:
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def unit_phase(rng) -> complex:
    t = rng.uniform(0.0, TWO_PI)
    return complex(math.cos(t), math.sin(t))


def random_coin(rng, alpha_min: float = 0.15) -> Coin:
    """A random valid coin with |alpha| bounded away from the reflecting case."""
    amod = rng.uniform(alpha_min, 0.99)
    bmod = math.sqrt(max(1.0 - amod * amod, 0.0))
    return Coin(rng.uniform(0.0, TWO_PI), amod * unit_phase(rng), bmod * unit_phase(rng))


def random_homogeneous_model(rng, max_period: int = 4) -> ModelSpec:
    n = int(rng.integers(1, max_period + 1))
    coins = tuple(random_coin(rng) for _ in range(n))
    return ModelSpec(x_plus=0, x_minus=0, period_plus=coins, period_minus=coins, defects=())


def dense_walk_matrix(spec: ModelSpec, lo: int, hi: int) -> np.ndarray:
    """One-step walk matrix on [lo, hi] with zero truncation outside.

    Exact on states whose light cone stays strictly inside the window;
    independent of the dynamics module (built from the coin and shift
    definitions directly).
    """
    n = hi - lo + 1
    coin_blocks = np.zeros((2 * n, 2 * n), dtype=complex)
    for i, x in enumerate(range(lo, hi + 1)):
        coin_blocks[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = coin_at(spec, x).matrix
    shift = np.zeros((2 * n, 2 * n), dtype=complex)
    for i in range(n):
        if i + 1 < n:
            shift[2 * i, 2 * (i + 1)] = 1.0  # L(x) <- L(x+1)
        if i - 1 >= 0:
            shift[2 * i + 1, 2 * (i - 1) + 1] = 1.0  # R(x) <- R(x-1)
    return shift @ coin_blocks


def dense_evolve(spec: ModelSpec, psi: StateVector, t: int, pad: int = 2) -> StateVector:
    """Dense-matrix reference evolution (brute-force oracle)."""
    lo = psi.lo - t - pad
    hi = psi.hi + t + pad
    u = dense_walk_matrix(spec, lo, hi)
    vec = np.zeros(2 * (hi - lo + 1), dtype=complex)
    for j, x in enumerate(range(psi.lo, psi.hi + 1)):
        vec[2 * (x - lo) : 2 * (x - lo) + 2] = psi.amps[j]
    for _ in range(t):
        vec = u @ vec
    return StateVector(lo, vec.reshape(-1, 2))
