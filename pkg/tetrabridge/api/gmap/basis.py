from typing import Any, Sequence

import numpy as np

from tetrabridge.__env__ import CP_TOLERANCE, EXACT_TOLERANCE, GRAM_CONDITION_WARNING, PROBABILITY_SUM_TOLERANCE
from tetrabridge.api.channel.pauli import A_BASIS, bloch_operator
from tetrabridge.api.exceptions import TetraConstraintViolationError, TetraUnsupportedDimensionError
from tetrabridge.api.tetra.vertex import E_VECTORS
from tetrabridge.logging import logger
from tetrabridge.numkernel.eigen import hermitian_eig
from tetrabridge.numkernel.exceptions import TetraDimensionError
from tetrabridge.numkernel.matrix import ComplexMat, RealMat
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraBasisPair",
    "validate_basis",
    "sic_basis",
    "orthonormal_basis",
    "SUPPORTED_SIC_DIMENSIONS",
]

SUPPORTED_SIC_DIMENSIONS = (2, 3)
SIC_FIDUCIAL_3 = np.array([0, 1, -1], dtype=np.complex128) / np.sqrt(2)


@tetra_repr("dim", "g", "a_positive", "b_positive", "g_stochastic", "condition", lines="multiple")
class TetraBasisPair:
    """
    일반화 사상 E_Q(ρ) = Σ Q_{μν} tr(ρA_ν) B_μ 의 연산자 기저 쌍

    Σ_μ A_μ = I, tr(B_ν) = 1 을 만족하며 G_{μν} = tr(A_μ B_ν) 입니다.
    """

    __slots__ = [
        "dim",
        "a",
        "b",
        "g",
        "a_positive",
        "b_positive",
        "condition",
        "tol",
    ]

    dim: int
    """힐베르트 공간 차원 d"""
    a: np.ndarray
    """A_μ (d²×d×d)"""
    b: np.ndarray
    """B_ν (d²×d×d)"""
    g: RealMat
    """G_{μν} = tr(A_μ B_ν)"""
    a_positive: tuple[bool, ...]
    """A_μ 양의 연산자 여부"""
    b_positive: tuple[bool, ...]
    """B_ν 양의 연산자 여부"""
    condition: tuple[float, float]
    """(A, B) 벡터화 행렬 조건수"""
    tol: float

    def __init__(
        self,
        dim: int,
        a: np.ndarray,
        b: np.ndarray,
        g: RealMat,
        a_positive: tuple[bool, ...],
        b_positive: tuple[bool, ...],
        condition: tuple[float, float],
        tol: float,
    ):
        self.dim = dim
        self.a = a
        self.b = b
        self.g = g
        self.a_positive = a_positive
        self.b_positive = b_positive
        self.condition = condition
        self.tol = tol

    @property
    def positive(self) -> bool:
        """모든 연산자가 양의 연산자인지 여부 (CPT 보장 조건)"""
        return all(self.a_positive) and all(self.b_positive)

    @property
    def g_stochastic(self) -> bool:
        """G 가 열 확률 행렬인지 여부"""
        return bool(
            np.max(np.abs(self.g.sum(axis=0) - 1)) <= EXACT_TOLERANCE and self.g.min() >= -self.tol
        )

    @property
    def a_matrix(self) -> ComplexMat:
        """열이 vec(A_ν) 인 d²×d² 행렬"""
        return np.stack([m.reshape(-1) for m in self.a], axis=1)

    @property
    def b_matrix(self) -> ComplexMat:
        """열이 vec(B_μ) 인 d²×d² 행렬"""
        return np.stack([m.reshape(-1) for m in self.b], axis=1)

    def same_as(self, other: "TetraBasisPair") -> bool:
        return self is other or (
            self.dim == other.dim
            and np.allclose(self.a, other.a, rtol=0, atol=EXACT_TOLERANCE)
            and np.allclose(self.b, other.b, rtol=0, atol=EXACT_TOLERANCE)
        )


def _as_operators(ops: Sequence[Any] | np.ndarray, name: str) -> np.ndarray:
    ops = np.asarray(ops, dtype=np.complex128)

    if ops.ndim != 3 or ops.shape[1] != ops.shape[2]:
        raise TetraDimensionError(f"{name} 는 d×d 연산자의 목록이어야 합니다.", actual=ops.shape)

    d = ops.shape[1]

    if ops.shape[0] != d * d:
        raise TetraDimensionError(f"{name} 연산자 수가 d² 가 아닙니다.", expected=d * d, actual=ops.shape[0])

    if not np.all(np.isfinite(ops)):
        raise ValueError(f"{name} 에 유한하지 않은 값이 있습니다.")

    return ops


def _span(ops: np.ndarray, name: str) -> float:
    matrix = np.stack([m.reshape(-1) for m in ops], axis=1)
    singular = np.linalg.svd(matrix, compute_uv=False)

    if singular[-1] <= singular[0] * np.finfo(float).eps * matrix.shape[0]:
        raise TetraConstraintViolationError(f"{name} 가 연산자 공간을 생성하지 않습니다.", name=name)

    condition = float(singular[0] / singular[-1])

    if condition > GRAM_CONDITION_WARNING:
        logger.warning(f"{name} 기저의 조건수가 큽니다. (cond={condition:.3e})")

    return condition


def validate_basis(a: Sequence[Any] | np.ndarray, b: Sequence[Any] | np.ndarray, tol: float = CP_TOLERANCE) -> TetraBasisPair:
    """
    연산자 기저 쌍을 검증합니다.

    양의 연산자 여부는 기록만 합니다. (CPT 보장에 필요하지만 사상 구성에는 필요하지 않음)

    Raises:
        TetraDimensionError: 연산자 수나 크기가 맞지 않는 경우
        TetraConstraintViolationError: 에르미트, Σ A_μ = I, tr B_ν = 1, 생성 조건 중 하나라도 실패한 경우
    """
    a = _as_operators(a, "A")
    b = _as_operators(b, "B")
    d = a.shape[1]

    if b.shape != a.shape:
        raise TetraDimensionError("A 와 B 의 차원이 다릅니다.", a=a.shape, b=b.shape)

    for name, ops in (("A", a), ("B", b)):
        if (deviation := float(np.max(np.abs(ops - ops.conj().transpose(0, 2, 1))))) > EXACT_TOLERANCE:
            raise TetraConstraintViolationError(f"{name} 가 에르미트가 아닙니다.", deviation=deviation)

    if (deviation := float(np.max(np.abs(a.sum(axis=0) - np.eye(d))))) > EXACT_TOLERANCE:
        raise TetraConstraintViolationError("Σ A_μ = I", deviation=deviation)

    if (deviation := float(np.max(np.abs(np.einsum("kii->k", b) - 1)))) > PROBABILITY_SUM_TOLERANCE:
        raise TetraConstraintViolationError("tr B_ν = 1", deviation=deviation)

    condition = (_span(a, "A"), _span(b, "B"))

    return TetraBasisPair(
        dim=d,
        a=a,
        b=b,
        g=np.einsum("mij,nji->mn", a, b).real,
        a_positive=tuple(bool(hermitian_eig(m).eigenvalues[-1] >= -tol) for m in a),
        b_positive=tuple(bool(hermitian_eig(m).eigenvalues[-1] >= -tol) for m in b),
        condition=condition,
        tol=tol,
    )


def _sic_projectors(d: int) -> np.ndarray:
    match d:
        case 2:
            return np.stack([bloch_operator(e / np.sqrt(3)) for e in E_VECTORS])
        case 3:
            omega = np.exp(2j * np.pi / 3)
            shift = np.roll(np.eye(3), 1, axis=0)
            clock = np.diag(omega ** np.arange(3))
            projectors = []

            for a in range(3):
                for b in range(3):
                    psi = np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(clock, b) @ SIC_FIDUCIAL_3
                    projectors.append(np.outer(psi, psi.conj()))

            return np.stack(projectors)
        case _:
            raise TetraUnsupportedDimensionError(d)


def sic_basis(d: int) -> TetraBasisPair:
    """
    SIC 기저 쌍 A_μ = Π_μ/d, B_μ = Π_μ

    d = 2: 사면체 꼭짓점 방향 e_μ/√3 의 사영 연산자
    d = 3: 기준 벡터 (0, 1, −1)/√2 의 Weyl–Heisenberg 궤도

    Raises:
        TetraUnsupportedDimensionError: d 가 2, 3이 아닌 경우
    """
    projectors = _sic_projectors(d)
    return validate_basis(projectors / d, projectors)


def orthonormal_basis() -> TetraBasisPair:
    """
    큐비트 A_μ 기저 (A′ = A_μ/2, B = A_μ)

    G = I 이므로 합성 규칙이 E_{Q1·Q2} = E_{Q1}·E_{Q2} 로 돌아옵니다.
    A_μ 는 양의 연산자가 아니므로 CPT 는 보장되지 않고 판정됩니다.
    """
    return validate_basis(A_BASIS / 2, A_BASIS)
