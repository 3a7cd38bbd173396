from typing import Any

import numpy as np

from tetrabridge.api.exceptions import TetraNotColumnStochasticError
from tetrabridge.api.stochastic.matrix import TetraStochasticMatrix
from tetrabridge.api.tetra.bloch import TetraProbVec
from tetrabridge.numkernel.eigen import general_eig

__all__ = [
    "spectrum",
    "step",
]


def spectrum(q: TetraStochasticMatrix | Any) -> np.ndarray:
    """
    고유값 4개 (복소수, 실수부 내림차순)

    정규형 Q_n(λ) 의 고유값은 {1, λ_1, λ_2, λ_3} 입니다.
    """
    if isinstance(q, TetraStochasticMatrix):
        q = q.q

    return general_eig(np.asarray(q, dtype=np.float64)).eigenvalues


def step(q: TetraStochasticMatrix | Any, p: TetraProbVec | Any, n: int) -> list[TetraProbVec]:
    """
    |P_{k+1}⟩ = Q|P_k⟩ 를 n번 적용합니다.

    Returns:
        [P_0, P_1, ..., P_n] (길이 n + 1)

    Raises:
        TetraNotColumnStochasticError: Q가 확률 행렬이 아닌 경우
        TetraInvalidProbabilityError: 확률 벡터가 올바르지 않은 경우
    """
    if not isinstance(q, TetraStochasticMatrix):
        q = TetraStochasticMatrix(q)

    if not isinstance(p, TetraProbVec):
        p = TetraProbVec(p)

    if n < 0:
        raise ValueError(f"단계 수는 0 이상이어야 합니다. ({n})")

    if not q.is_stochastic:
        raise TetraNotColumnStochasticError(max(q.column_deviation, -q.min_entry))

    trajectory = [p]

    for _ in range(n):
        # 열 합 오차(1e-10 이내)가 누적되지 않도록 합을 1로 맞춥니다.
        p = q.q @ trajectory[-1].p
        trajectory.append(TetraProbVec(p / p.sum(), tol=q.tol))

    return trajectory
