import numpy as np

from tetrabridge import logging
from tetrabridge.__env__ import SAMPLER_MAX_ATTEMPTS
from tetrabridge.api.stochastic.matrix import (
    TetraStochasticMatrix,
    embed_rotation,
    normal_matrix,
    to_configuration,
    to_e_basis,
)
from tetrabridge.api.tetra.bloch import sample_tetrahedron
from tetrabridge.numkernel.rotation import random_rotation
from tetrabridge.utils.random import as_generator

__all__ = [
    "random_doubly_stochastic",
]


def random_doubly_stochastic(seed: np.random.Generator | int | None = None) -> TetraStochasticMatrix:
    """
    무작위 이중 확률 행렬

    λ를 Δ에서 균일하게, Ŝ = T̂ᵀ를 Haar 회전으로 추출하여 S·Q_n·T 를 만들고
    확률 행렬이 아니면 다시 추출합니다.

    Args:
        seed: 난수 생성기 또는 시드
    """
    rng = as_generator(seed)

    for attempt in range(1, SAMPLER_MAX_ATTEMPTS + 1):
        lambdas = sample_tetrahedron(rng)
        s_hat = random_rotation(rng)
        q = to_configuration(embed_rotation(s_hat) @ to_e_basis(normal_matrix(lambdas)) @ embed_rotation(s_hat.T))
        # 회전 후 반올림 오차로 열의 합이 1에서 벗어나지 않도록 |e_0⟩ 성분을 다시 맞춥니다.
        q = q - (q.sum(axis=0, keepdims=True) - 1) / 4

        if (matrix := TetraStochasticMatrix(q, tol=0.0)).is_doubly_stochastic:
            logging.logger.debug("random_doubly_stochastic: accepted after %d attempts", attempt)
            return matrix

    raise RuntimeError("이중 확률 행렬 추출 시도 횟수를 초과했습니다.")
