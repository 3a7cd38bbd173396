from typing import Any

import numpy as np

from tetrabridge.__env__ import DEFAULT_TOLERANCE, EXACT_TOLERANCE
from tetrabridge.adapter.stochastic import TetraStochasticMatrixMixin
from tetrabridge.api.tetra.vertex import E_KETS
from tetrabridge.numkernel.matrix import RealMat, as_real_matrix, as_real_vector
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraStochasticMatrix",
    "validate",
    "to_configuration",
    "to_e_basis",
    "normal_matrix",
    "embed_rotation",
    "depolarizing",
]


@tetra_repr(
    "q",
    "is_stochastic",
    "is_doubly_stochastic",
    "is_symmetric",
    "min_entry",
    "column_deviation",
    "row_deviation",
    lines="multiple",
)
class TetraStochasticMatrix(TetraStochasticMatrixMixin):
    """
    4×4 확률 행렬

    열 확률(column-stochastic) 규약 ⟨e_0|Q = ⟨e_0| 을 따릅니다.
    즉, 각 열의 합이 1이며 |P_{n+1}⟩ = Q|P_n⟩ 으로 작용합니다.
    행 확률 규약의 행렬은 전치하여 사용하십시오.
    """

    q: RealMat
    """행렬 성분 (배위 기저)"""
    tol: float
    """성분 음수 허용 오차"""
    is_stochastic: bool
    """확률 행렬 여부 (성분 ≥ −tol, 열의 합 1)"""
    is_doubly_stochastic: bool
    """이중 확률 행렬 여부 (행의 합도 1)"""
    is_symmetric: bool
    """대칭 행렬 여부"""
    min_entry: float
    """최소 성분"""
    min_entry_index: tuple[int, int]
    """최소 성분 위치 (행, 열)"""
    column_deviation: float
    """열의 합과 1의 최대 차이"""
    row_deviation: float
    """행의 합과 1의 최대 차이"""

    def __init__(self, q: Any, tol: float = DEFAULT_TOLERANCE):
        self.q = as_real_matrix(q, shape=(4, 4))
        self.tol = tol

        index = np.unravel_index(int(np.argmin(self.q)), self.q.shape)
        self.min_entry = float(self.q[index])
        self.min_entry_index = (int(index[0]), int(index[1]))
        self.column_deviation = float(np.max(np.abs(self.q.sum(axis=0) - 1)))
        self.row_deviation = float(np.max(np.abs(self.q.sum(axis=1) - 1)))

        self.is_stochastic = self.min_entry >= -tol and self.column_deviation <= EXACT_TOLERANCE
        self.is_doubly_stochastic = self.is_stochastic and self.row_deviation <= EXACT_TOLERANCE
        self.is_symmetric = bool(np.max(np.abs(self.q - self.q.T)) <= EXACT_TOLERANCE)

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        return self.q.astype(dtype) if dtype else self.q

    @property
    def e_basis(self) -> RealMat:
        """|e_μ⟩ 기저 성분 ⟨e_μ|Q|e_ν⟩"""
        return to_e_basis(self.q)


def validate(q: Any, tol: float = DEFAULT_TOLERANCE) -> TetraStochasticMatrix:
    """
    행렬을 분류합니다. (거부하지 않고 판정 결과와 여유값을 반환)

    Args:
        q: 4×4 유한 실수 행렬
        tol: 성분 음수 허용 오차
    """
    if isinstance(q, TetraStochasticMatrix):
        q = q.q

    return TetraStochasticMatrix(q, tol=tol)


def to_e_basis(m: Any) -> RealMat:
    """배위 기저 행렬을 |e_μ⟩ 기저 성분으로 변환합니다."""
    return E_KETS @ np.asarray(m, dtype=np.float64) @ E_KETS


def to_configuration(m: Any) -> RealMat:
    """|e_μ⟩ 기저 성분을 배위 기저 행렬로 변환합니다."""
    return E_KETS @ np.asarray(m, dtype=np.float64) @ E_KETS


def embed_rotation(r: Any) -> RealMat:
    """3×3 행렬 R을 |e_μ⟩ 기저의 블록 행렬 diag(1, R)로 확장합니다."""
    embedded = np.eye(4)
    embedded[1:, 1:] = as_real_matrix(r, shape=(3, 3))
    return embedded


def normal_matrix(lambdas: Any) -> RealMat:
    """
    정규형 Q_n = |e_0⟩⟨e_0| + Σ λ_i|e_i⟩⟨e_i| (배위 기저)

    성분은 (Q_n)_{μν} = (1 + Σ_i λ_i (e_μ)_i (e_ν)_i) / 4 입니다.
    """
    lambdas = as_real_vector(lambdas, 3)
    return to_configuration(np.diag([1.0, *lambdas]))


def depolarizing(p: float) -> TetraStochasticMatrix:
    """고전 탈분극 행렬 Q = p·I + (1 − p)|e_0⟩⟨e_0|"""
    return TetraStochasticMatrix(p * np.eye(4) + (1 - p) * np.full((4, 4), 0.25))
