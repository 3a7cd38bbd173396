import os

import numpy as np

import tetrabridge.logging
from tetrabridge.api.stochastic.matrix import TetraStochasticMatrix
from tetrabridge.utils.random import as_generator

TEST_SEED = int(os.getenv("TETRA_BRIDGE_TEST_SEED", "20240611"))


def load_rng(offset: int = 0) -> np.random.Generator:
    """테스트용 PCG64 생성기"""
    tetrabridge.logging.setLevel(os.getenv("TETRA_BRIDGE_TEST_LOG", "WARNING"))
    return as_generator(TEST_SEED + offset)


def random_stochastic(rng: np.random.Generator, n: int = 4) -> np.ndarray:
    """열이 Dirichlet(1, ..., 1) 분포인 n×n 확률 행렬"""
    return rng.dirichlet(np.ones(n), size=n).T


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (m + m.conj().T) / 2


def is_stochastic(q: np.ndarray) -> bool:
    return TetraStochasticMatrix(q).is_stochastic
