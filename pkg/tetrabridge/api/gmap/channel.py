from typing import Any

import numpy as np

from tetrabridge.__env__ import CP_TOLERANCE
from tetrabridge.api.channel.base import TetraChannelBase
from tetrabridge.api.exceptions import TetraBasisMismatchError
from tetrabridge.api.gmap.basis import TetraBasisPair
from tetrabridge.numkernel.matrix import RealMat, as_real_matrix
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraGeneralChannel",
    "build_channel",
    "compose",
]


@tetra_repr("dim", "q", "completely_positive", "trace_preserving", "unital", "choi_eigenvalues", lines="multiple")
class TetraGeneralChannel(TetraChannelBase):
    """d 차원 일반화 사상 E_Q(ρ) = Σ Q_{μν} tr(ρA_ν) B_μ"""

    __slots__ = [
        "q",
        "basis",
    ]

    q: RealMat
    """d²×d² 행렬 Q"""
    basis: TetraBasisPair
    """연산자 기저 쌍"""

    def __init__(self, q: RealMat, basis: TetraBasisPair, tol: float = CP_TOLERANCE):
        self.q = q
        self.basis = basis
        super().__init__(basis.b_matrix @ q @ basis.a_matrix.conj().T, tol=tol)


def build_channel(q: Any, basis: TetraBasisPair, tol: float = CP_TOLERANCE) -> TetraGeneralChannel:
    """
    L̂ = 𝔅·Q·𝔄† 를 구성하고 판정합니다.

    양의 기저와 확률 행렬 Q 이면 결과는 CPT 사상이어야 하며, 이는 가정하지 않고 Choi 고유값으로 확인합니다.

    Raises:
        TetraDimensionError: Q 가 d²×d² 가 아닌 경우
    """
    n = basis.dim * basis.dim
    return TetraGeneralChannel(as_real_matrix(q, shape=(n, n)), basis, tol=tol)


def compose(first: TetraGeneralChannel, second: TetraGeneralChannel) -> tuple[TetraGeneralChannel, float]:
    """
    E_{Q1}·E_{Q2} = E_{Q1·G·Q2}

    Returns:
        (E_{Q1·G·Q2}, ‖L̂_1·L̂_2 − L̂_{Q1·G·Q2}‖ 최대 성분)

    Raises:
        TetraBasisMismatchError: 두 채널의 기저 쌍이 다른 경우
    """
    if not first.basis.same_as(second.basis):
        raise TetraBasisMismatchError()

    composed = TetraGeneralChannel(first.q @ first.basis.g @ second.q, first.basis, tol=first.certificate.tol)
    residual = float(np.max(np.abs(first.superop @ second.superop - composed.superop)))

    return composed, residual
