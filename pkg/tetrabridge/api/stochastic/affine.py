from typing import Any

import numpy as np

from tetrabridge.__env__ import EXACT_TOLERANCE
from tetrabridge.api.exceptions import TetraNotColumnStochasticError
from tetrabridge.api.stochastic.matrix import TetraStochasticMatrix, to_configuration, to_e_basis
from tetrabridge.api.tetra.bloch import TetraBlochVec
from tetrabridge.numkernel.matrix import RealMat, as_real_matrix, as_real_vector
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraAffineForm",
    "to_affine",
    "from_affine",
]


@tetra_repr("t", "lambda_mat", lines="multiple")
class TetraAffineForm:
    """
    Q = |e_0⟩⟨e_0| + Σ t_i|e_i⟩⟨e_0| + Σ Λ_{ij}|e_i⟩⟨e_j| 전개

    Q는 사면체 좌표에 아핀 변환 r ↦ Λr + t 로 작용합니다.
    이중 확률 행렬은 t = 0 입니다.
    """

    __slots__ = [
        "t",
        "lambda_mat",
    ]

    t: np.ndarray
    """평행이동 t"""
    lambda_mat: RealMat
    """선형 부분 Λ"""

    def __init__(self, t: Any, lambda_mat: Any):
        self.t = as_real_vector(t, 3)
        self.lambda_mat = as_real_matrix(lambda_mat, shape=(3, 3))

    def apply(self, r: TetraBlochVec | Any) -> TetraBlochVec:
        """r ↦ Λr + t"""
        r = r.r if isinstance(r, TetraBlochVec) else as_real_vector(r, 3)
        return TetraBlochVec(self.lambda_mat @ r + self.t)

    def reconstruct(self) -> RealMat:
        """배위 기저 행렬 Q를 복원합니다."""
        return from_affine(self.t, self.lambda_mat)


def to_affine(q: TetraStochasticMatrix | Any) -> TetraAffineForm:
    """
    t_i = ⟨e_i|Q|e_0⟩, Λ_{ij} = ⟨e_i|Q|e_j⟩

    Raises:
        TetraNotColumnStochasticError: 열의 합이 1이 아닌 경우
    """
    if not isinstance(q, TetraStochasticMatrix):
        q = TetraStochasticMatrix(q)

    if q.column_deviation > EXACT_TOLERANCE:
        raise TetraNotColumnStochasticError(q.column_deviation)

    e = to_e_basis(q.q)
    return TetraAffineForm(e[1:, 0], e[1:, 1:])


def from_affine(t: Any, lambda_mat: Any) -> RealMat:
    e = np.eye(4)
    e[1:, 0] = as_real_vector(t, 3)
    e[1:, 1:] = as_real_matrix(lambda_mat, shape=(3, 3))
    return to_configuration(e)
