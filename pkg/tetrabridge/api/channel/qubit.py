from typing import Any

import numpy as np

from tetrabridge.__env__ import CP_TOLERANCE, DEFAULT_TOLERANCE, EXACT_TOLERANCE
from tetrabridge.api.channel.base import (
    TetraChannelBase,
    TetraChannelCertificate,
    TetraChannelProtocol,
)
from tetrabridge.api.channel.pauli import (
    A_BASIS,
    IDENTITY,
    PAULIS,
    bloch_from_density,
    density_from_bloch,
)
from tetrabridge.api.exceptions import (
    TetraInconsistentCertificateError,
    TetraInvalidStateError,
)
from tetrabridge.api.stochastic.matrix import TetraStochasticMatrix
from tetrabridge.logging import logger
from tetrabridge.numkernel.eigen import hermitian_eig
from tetrabridge.numkernel.exceptions import TetraNotHermitianError
from tetrabridge.numkernel.matrix import (
    ComplexMat,
    RealMat,
    as_complex_matrix,
    as_real_matrix,
)
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "A_MATRIX",
    "TetraQubitChannel",
    "TetraChoiResult",
    "map_to_channel",
    "choi",
    "certify",
    "apply",
    "compose",
    "pauli_transfer",
    "bloch_action",
]

A_MATRIX = np.stack([a.reshape(-1) for a in A_BASIS], axis=1)
"""열이 vec(A_μ) 인 4×4 행렬 𝒜 (𝒜†𝒜 = 2I)"""

ROUTE_DISAGREEMENT_FACTOR = 10


@tetra_repr("superop", "completely_positive", "trace_preserving", "unital", "choi_eigenvalues", lines="multiple")
class TetraQubitChannel(TetraChannelBase):
    """
    큐비트 선형 사상

    확률 행렬 Q로부터 만들어진 경우 `source`에 Q를 보관하며,
    대각합 보존/단위 보존 판정을 Q의 열/행의 합과 교차 검증합니다.
    """

    __slots__ = [
        "source",
    ]

    source: RealMat | None
    """원본 확률 행렬 Q (배위 기저)"""

    def __init__(self, superop: Any, source: Any | None = None, tol: float = CP_TOLERANCE):
        self.source = None if source is None else as_real_matrix(source, shape=(4, 4))
        super().__init__(as_complex_matrix(superop, shape=(4, 4)), tol=tol)

    def _certify(self, tol: float) -> TetraChannelCertificate:
        certificate = super()._certify(tol)

        if self.source is None:
            return certificate

        column_deviation = float(np.max(np.abs(self.source.sum(axis=0) - 1)))
        row_deviation = float(np.max(np.abs(self.source.sum(axis=1) - 1)))
        bound = max(tol, EXACT_TOLERANCE)

        trace_preserving = _cross_check(
            "trace_preserving",
            column_deviation <= bound,
            certificate.trace_preserving,
            column_deviation,
            certificate.trace_deviation,
            bound,
        )
        unital = _cross_check(
            "unital",
            row_deviation <= bound,
            certificate.unital,
            row_deviation,
            certificate.unital_deviation,
            bound,
        )

        certificate.trace_preserving = trace_preserving
        certificate.unital = unital
        return certificate

    @property
    def q_basis(self) -> RealMat:
        """A_μ 기저에서의 사상 행렬 ½ tr(A_μ E(A_ν))"""
        return (A_MATRIX.conj().T @ self.superop @ A_MATRIX).real / 2


def _cross_check(
    property: str,
    by_source: bool,
    by_choi: bool,
    source_deviation: float,
    choi_deviation: float,
    bound: float,
) -> bool:
    if by_source != by_choi:
        # 허용 오차 경계 근처에서는 두 경로의 편차 크기가 상수배 차이나므로 판정이 갈릴 수 있습니다.
        if max(source_deviation, choi_deviation) > ROUTE_DISAGREEMENT_FACTOR * bound:
            raise TetraInconsistentCertificateError(
                property,
                source_deviation=source_deviation,
                choi_deviation=choi_deviation,
            )

        logger.debug(
            f"{property} 판정이 허용 오차 경계에서 갈렸습니다. (source={source_deviation:.3e}, choi={choi_deviation:.3e})"
        )

    return by_source


@tetra_repr("eigenvalues", "matrix", lines="multiple")
class TetraChoiResult:
    """Choi 행렬과 고유값"""

    __slots__ = [
        "matrix",
        "eigenvalues",
    ]

    matrix: ComplexMat
    """τ = (E⊗id)(|ω⟩⟨ω|)"""
    eigenvalues: np.ndarray | None
    """고유값 (내림차순, 에르미트가 아니면 None)"""

    def __init__(self, matrix: ComplexMat, eigenvalues: np.ndarray | None):
        self.matrix = matrix
        self.eigenvalues = eigenvalues

    @property
    def min_eigenvalue(self) -> float | None:
        return None if self.eigenvalues is None else float(self.eigenvalues[-1])


def map_to_channel(q: TetraStochasticMatrix | Any, tol: float = CP_TOLERANCE) -> TetraQubitChannel:
    """
    E_Q(ρ) = ½ Σ_{μν} Q_{μν} tr(ρ A_ν) A_μ

    Q는 확률 행렬이 아니어도 됩니다. 판정은 반환된 채널의 플래그에 담깁니다.
    초연산자는 L̂ = ½ 𝒜 Q 𝒜† 이며 A_μ 기저에서의 행렬은 정확히 Q 입니다.
    """
    if isinstance(q, TetraStochasticMatrix):
        q = q.q

    q = as_real_matrix(q, shape=(4, 4))
    superop = A_MATRIX @ q @ A_MATRIX.conj().T / 2

    logger.debug(f"E_Q 초연산자를 구성했습니다. (‖Q‖_F={np.linalg.norm(q):.6g})")

    return TetraQubitChannel(superop, source=q, tol=tol)


def choi(channel: TetraChannelProtocol) -> TetraChoiResult:
    """
    Choi 행렬과 고유값

    Q_n(λ) 의 Choi 고유값은 (1 + λ·e_μ)/4 이며 Q_n 의 성분과 같습니다.
    """
    try:
        eigenvalues = hermitian_eig(channel.choi).eigenvalues
    except TetraNotHermitianError:
        eigenvalues = None

    return TetraChoiResult(channel.choi, eigenvalues)


def certify(channel: TetraQubitChannel, tol: float = CP_TOLERANCE) -> TetraChannelCertificate:
    """
    완전 양성/대각합 보존/단위 보존 판정

    대각합 보존은 Q의 열의 합과 tr_1 τ = I/2 로,
    단위 보존은 Q의 행의 합과 E(I) = I 로 각각 판정하여 교차 검증합니다.

    Raises:
        TetraInconsistentCertificateError: 두 경로의 판정이 허용 오차 이상으로 다른 경우
    """
    return TetraQubitChannel(channel.superop, source=channel.source, tol=tol).certificate


def _validate_state(rho: ComplexMat, tol: float) -> None:
    if (deviation := float(np.max(np.abs(rho - rho.conj().T)))) > tol:
        raise TetraInvalidStateError("밀도 행렬이 에르미트가 아닙니다.", deviation=deviation)

    if (trace_deviation := abs(complex(np.trace(rho)) - 1)) > tol:
        raise TetraInvalidStateError("밀도 행렬의 대각합이 1이 아닙니다.", trace_deviation=trace_deviation)

    if (min_eigenvalue := float(hermitian_eig(rho).eigenvalues[-1])) < -tol:
        raise TetraInvalidStateError("밀도 행렬이 양의 연산자가 아닙니다.", min_eigenvalue=min_eigenvalue)


def apply(channel: TetraChannelProtocol, rho: Any, tol: float = DEFAULT_TOLERANCE) -> ComplexMat:
    """
    ρ ↦ E(ρ)

    Raises:
        TetraInvalidStateError: ρ가 밀도 행렬이 아닌 경우
    """
    rho = as_complex_matrix(rho, shape=(channel.dim, channel.dim))
    _validate_state(rho, tol)

    if not (channel.completely_positive and channel.trace_preserving):
        logger.warning(
            f"물리적 채널이 아닌 사상을 적용합니다. (CP={channel.completely_positive}, TP={channel.trace_preserving})"
        )

    out = (channel.superop @ rho.reshape(-1)).reshape(channel.dim, channel.dim)
    return (out + out.conj().T) / 2


def compose(first: TetraQubitChannel, second: TetraQubitChannel) -> TetraQubitChannel:
    """
    first ∘ second (second를 먼저 적용)

    E_{Q1·Q2} = E_{Q1}·E_{Q2} 이므로 두 채널 모두 원본 Q를 가지면 Q1·Q2 를 보관합니다.
    """
    source = first.source @ second.source if first.source is not None and second.source is not None else None
    return TetraQubitChannel(first.superop @ second.superop, source=source, tol=first.certificate.tol)


def pauli_transfer(channel: TetraChannelProtocol) -> RealMat:
    """
    Pauli 전달 행렬 R_{ab} = ½ tr(P_a E(P_b)), P = (I, σ_1, σ_2, σ_3)

    E_Q 에 대해서는 R = [[1, 0], [t, Λ]] 로 아핀 전개와 같습니다.
    """
    paulis = np.concatenate([IDENTITY[None], PAULIS])
    basis = np.stack([p.reshape(-1) for p in paulis], axis=1)
    return (basis.conj().T @ channel.superop @ basis).real / 2


def bloch_action(channel: TetraChannelProtocol, r: Any) -> np.ndarray:
    """ρ(r) 를 사상한 결과의 Bloch 벡터 (E_Q 에 대해서는 Λr + t)"""
    rho = density_from_bloch(r)
    return bloch_from_density((channel.superop @ rho.reshape(-1)).reshape(2, 2))
