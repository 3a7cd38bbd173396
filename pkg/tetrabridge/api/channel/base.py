from typing import Protocol, runtime_checkable

import numpy as np

from tetrabridge.__env__ import CP_TOLERANCE, EXACT_TOLERANCE
from tetrabridge.numkernel.eigen import hermitian_eig
from tetrabridge.numkernel.exceptions import TetraNotHermitianError
from tetrabridge.numkernel.matrix import ComplexMat, as_complex_matrix, square_root_dim
from tetrabridge.numkernel.vectorize import (
    gamma_involution,
    partial_trace_output,
    unvec,
    vec,
)
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraChannelProtocol",
    "TetraChannelBase",
    "TetraChannelCertificate",
    "choi_from_superop",
    "superop_of",
]

GAMMA_ASSERT_TOLERANCE = 1e-12


@runtime_checkable
class TetraChannelProtocol(Protocol):
    """d 차원 선형 사상 프로토콜"""

    @property
    def dim(self) -> int:
        """힐베르트 공간 차원 d"""
        ...

    @property
    def superop(self) -> ComplexMat:
        """vec(ρ)에 작용하는 d²×d² 초연산자"""
        ...

    @property
    def choi(self) -> ComplexMat:
        """Choi 행렬 τ = (E⊗id)(|ω⟩⟨ω|)"""
        ...

    @property
    def completely_positive(self) -> bool:
        """완전 양성 여부"""
        ...

    @property
    def trace_preserving(self) -> bool:
        """대각합 보존 여부"""
        ...

    @property
    def unital(self) -> bool:
        """항등 연산자 보존 여부"""
        ...


@tetra_repr(
    "completely_positive",
    "trace_preserving",
    "unital",
    "choi_eigenvalues",
    "trace_deviation",
    "unital_deviation",
    "tol",
    lines="multiple",
)
class TetraChannelCertificate:
    """채널 판정 결과와 근거"""

    __slots__ = [
        "completely_positive",
        "trace_preserving",
        "unital",
        "choi_eigenvalues",
        "trace_deviation",
        "unital_deviation",
        "tol",
    ]

    completely_positive: bool
    """완전 양성 여부 (최소 Choi 고유값 ≥ −tol)"""
    trace_preserving: bool
    """대각합 보존 여부"""
    unital: bool
    """항등 연산자 보존 여부"""
    choi_eigenvalues: np.ndarray | None
    """Choi 행렬 고유값 (내림차순, 에르미트가 아니면 None)"""
    trace_deviation: float
    """‖tr_1 τ − I/d‖ 최대 성분"""
    unital_deviation: float
    """‖E(I) − I‖ 최대 성분"""
    tol: float
    """허용 오차"""

    def __init__(
        self,
        completely_positive: bool,
        trace_preserving: bool,
        unital: bool,
        choi_eigenvalues: np.ndarray | None,
        trace_deviation: float,
        unital_deviation: float,
        tol: float,
    ):
        self.completely_positive = completely_positive
        self.trace_preserving = trace_preserving
        self.unital = unital
        self.choi_eigenvalues = choi_eigenvalues
        self.trace_deviation = trace_deviation
        self.unital_deviation = unital_deviation
        self.tol = tol

    @property
    def min_choi_eigenvalue(self) -> float | None:
        return None if self.choi_eigenvalues is None else float(self.choi_eigenvalues[-1])

    @property
    def cptp(self) -> bool:
        return self.completely_positive and self.trace_preserving


def superop_of(fn, d: int) -> ComplexMat:
    """선형 사상 fn(X)의 초연산자를 행렬 단위에 작용시켜 구성합니다."""
    superop = np.zeros((d * d, d * d), dtype=np.complex128)

    for k in range(d * d):
        unit = np.zeros(d * d, dtype=np.complex128)
        unit[k] = 1
        superop[:, k] = vec(fn(unvec(unit)))

    return superop


def choi_from_superop(superop: ComplexMat) -> ComplexMat:
    """
    τ = (1/d) Σ_{ij} E(|i⟩⟨j|) ⊗ |i⟩⟨j|

    정의대로 계산한 뒤 L̂^Γ = d·τ 관계를 내부적으로 검증합니다.
    """
    superop = as_complex_matrix(superop, square=True)
    d = square_root_dim(superop.shape[0])
    choi = np.zeros_like(superop)

    for i in range(d):
        for j in range(d):
            unit = np.zeros((d, d), dtype=np.complex128)
            unit[i, j] = 1
            choi += np.kron(unvec(superop @ vec(unit)), unit)

    choi /= d

    if (gap := np.max(np.abs(gamma_involution(superop) - d * choi))) > GAMMA_ASSERT_TOLERANCE * max(1.0, np.max(np.abs(superop))):
        raise AssertionError(f"L^Γ = d·τ 관계가 성립하지 않습니다. (gap={gap})")

    return choi


class TetraChannelBase:
    """초연산자와 Choi 행렬을 함께 보관하는 채널 기본 구현"""

    __slots__ = [
        "_superop",
        "_choi",
        "certificate",
    ]

    _superop: ComplexMat
    _choi: ComplexMat
    certificate: TetraChannelCertificate
    """판정 결과"""

    def __init__(self, superop: ComplexMat, tol: float = CP_TOLERANCE):
        self._superop = as_complex_matrix(superop, square=True)
        self._choi = choi_from_superop(self._superop)
        self.certificate = self._certify(tol)

    @property
    def dim(self) -> int:
        return square_root_dim(self._superop.shape[0])

    @property
    def superop(self) -> ComplexMat:
        return self._superop

    @property
    def choi(self) -> ComplexMat:
        return self._choi

    @property
    def completely_positive(self) -> bool:
        return self.certificate.completely_positive

    @property
    def trace_preserving(self) -> bool:
        return self.certificate.trace_preserving

    @property
    def unital(self) -> bool:
        return self.certificate.unital

    @property
    def choi_eigenvalues(self) -> np.ndarray | None:
        return self.certificate.choi_eigenvalues

    def __call__(self, rho) -> ComplexMat:
        """E(ρ) (상태 검증 없이 선형 사상으로 적용)"""
        return unvec(self._superop @ vec(rho))

    def _certify(self, tol: float) -> TetraChannelCertificate:
        d = self.dim

        try:
            eigenvalues = hermitian_eig(self._choi).eigenvalues
            completely_positive = bool(eigenvalues[-1] >= -tol)
        except TetraNotHermitianError:
            eigenvalues = None
            completely_positive = False

        trace_deviation = float(np.max(np.abs(partial_trace_output(self._choi) - np.eye(d) / d)))
        unital_deviation = float(np.max(np.abs(self(np.eye(d)) - np.eye(d))))

        return TetraChannelCertificate(
            completely_positive=completely_positive,
            trace_preserving=trace_deviation <= max(tol, EXACT_TOLERANCE),
            unital=unital_deviation <= max(tol, EXACT_TOLERANCE),
            choi_eigenvalues=eigenvalues,
            trace_deviation=trace_deviation,
            unital_deviation=unital_deviation,
            tol=tol,
        )
