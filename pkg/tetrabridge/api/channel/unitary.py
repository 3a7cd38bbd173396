from typing import Any

import numpy as np

from tetrabridge.api.channel.pauli import IDENTITY, PAULIS
from tetrabridge.api.channel.qubit import TetraQubitChannel, map_to_channel
from tetrabridge.api.exceptions import TetraNotARotationError, TetraTheoremViolationError
from tetrabridge.api.stochastic.matrix import TetraStochasticMatrix
from tetrabridge.api.stochastic.normal_form import normal_form
from tetrabridge.logging import logger
from tetrabridge.numkernel.matrix import ComplexMat, as_complex_matrix, as_real_matrix
from tetrabridge.numkernel.rotation import is_rotation, quaternion_from_rotation
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraChannelDecomposition",
    "unitary_lift",
    "unitary_superop",
    "decompose_channel",
]

ROTATION_TOLERANCE = 1e-9
RECONSTRUCTION_TOLERANCE = 1e-9


def unitary_lift(s_hat: Any) -> ComplexMat:
    """
    회전 Ŝ에 대응하는 2×2 유니터리 U

    U†(n·σ)U = (Ŝn)·σ 를 만족하며, 따라서 E_S(ρ) = U⁻¹ρU 입니다.
    전역 위상은 절댓값이 가장 큰 성분이 양의 실수가 되도록 고정합니다.

    Raises:
        TetraNotARotationError: 행렬식이 1이 아니거나 직교 행렬이 아닌 경우
    """
    s_hat = as_real_matrix(s_hat, shape=(3, 3))
    ok, determinant, orthogonality = is_rotation(s_hat, ROTATION_TOLERANCE)

    if not ok:
        raise TetraNotARotationError(determinant, orthogonality)

    w, *axis = quaternion_from_rotation(s_hat)
    u = w * IDENTITY + 1j * np.einsum("i,ijk->jk", axis, PAULIS)

    pivot = u.reshape(-1)[int(np.argmax(np.abs(u)))]
    return u * (abs(pivot) / pivot)


def unitary_superop(u: Any) -> ComplexMat:
    """ρ ↦ U⁻¹ρU 의 초연산자 U† ⊗ Uᵀ"""
    u = as_complex_matrix(u, square=True)
    return np.kron(u.conj().T, u.T)


@tetra_repr("u", "v", "normal", "residual", lines="multiple")
class TetraChannelDecomposition:
    """E_Q(ρ) = U⁻¹ E_{Q_n}(V⁻¹ρV) U"""

    __slots__ = [
        "u",
        "normal",
        "v",
        "residual",
    ]

    u: ComplexMat
    """왼쪽 회전 Ŝ의 유니터리"""
    normal: TetraQubitChannel
    """정규형 채널 E_{Q_n}"""
    v: ComplexMat
    """오른쪽 회전 T̂의 유니터리"""
    residual: float
    """재구성 초연산자와 E_Q 초연산자의 최대 성분 차이"""

    def __init__(self, u: ComplexMat, normal: TetraQubitChannel, v: ComplexMat, residual: float = 0.0):
        self.u = u
        self.normal = normal
        self.v = v
        self.residual = residual

    def reconstruct(self) -> ComplexMat:
        """세 사상을 합성한 초연산자"""
        return unitary_superop(self.u) @ self.normal.superop @ unitary_superop(self.v)


def decompose_channel(q: TetraStochasticMatrix | Any) -> TetraChannelDecomposition:
    """
    이중 확률 행렬 Q = S·Q_n·T 의 채널 분해

    Raises:
        TetraNotDoublyStochasticError: 이중 확률 행렬이 아닌 경우
        TetraNotARotationError: 회전 인자가 회전 행렬이 아닌 경우
        TetraTheoremViolationError: 재구성 오차가 허용 오차를 넘는 경우
    """
    if not isinstance(q, TetraStochasticMatrix):
        q = TetraStochasticMatrix(q)

    nf = normal_form(q)
    decomposition = TetraChannelDecomposition(
        u=unitary_lift(nf.s_hat),
        normal=map_to_channel(nf.qn),
        v=unitary_lift(nf.t_hat),
    )

    expected = map_to_channel(q).superop
    decomposition.residual = float(np.max(np.abs(decomposition.reconstruct() - expected)))

    if decomposition.residual > RECONSTRUCTION_TOLERANCE * max(1.0, float(np.max(np.abs(expected)))):
        raise TetraTheoremViolationError(
            "채널 분해가 E_Q 를 재구성하지 못했습니다.",
            residual=decomposition.residual,
        )

    logger.debug(f"채널 분해 완료 (λ={nf.lambdas.tolist()}, residual={decomposition.residual:.3e})")

    return decomposition
