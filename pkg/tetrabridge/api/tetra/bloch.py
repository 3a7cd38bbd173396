from typing import Any, Iterator

import numpy as np

from tetrabridge.__env__ import DEFAULT_TOLERANCE, PROBABILITY_SUM_TOLERANCE, SAMPLER_MAX_ATTEMPTS
from tetrabridge.api.exceptions import (
    TetraInvalidProbabilityError,
    TetraOutsideTetrahedronError,
)
from tetrabridge.api.tetra.vertex import E_VECTORS
from tetrabridge.numkernel.matrix import as_real_vector
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraProbVec",
    "TetraBlochVec",
    "TetraMembership",
    "prob_to_bloch",
    "bloch_to_prob",
    "in_tetrahedron",
    "sample_tetrahedron",
]


@tetra_repr("p", lines="single")
class TetraProbVec:
    """4개 배위 위의 확률 벡터"""

    __slots__ = [
        "p",
    ]

    p: np.ndarray
    """확률 p_0..p_3"""

    def __init__(self, p: Any, tol: float = DEFAULT_TOLERANCE):
        """
        확률 벡터를 생성합니다.

        Raises:
            TetraInvalidProbabilityError: 성분이 [0, 1] 밖이거나 합이 1이 아닌 경우
        """
        p = as_real_vector(p, 4)

        if (minimum := float(p.min())) < -tol or float(p.max()) > 1 + tol:
            raise TetraInvalidProbabilityError(
                "확률 성분이 [0, 1] 범위를 벗어났습니다.",
                index=int(np.argmin(p) if minimum < -tol else np.argmax(p)),
                p=tuple(p.tolist()),
            )

        if (deviation := abs(float(p.sum()) - 1)) > PROBABILITY_SUM_TOLERANCE:
            raise TetraInvalidProbabilityError("확률의 합이 1이 아닙니다.", deviation=deviation)

        self.p = p

    def __iter__(self) -> Iterator[float]:
        return iter(self.p.tolist())

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        return self.p.astype(dtype) if dtype else self.p

    @property
    def bloch(self) -> "TetraBlochVec":
        """Bloch 사면체 좌표"""
        return prob_to_bloch(self)


@tetra_repr("r", lines="single")
class TetraBlochVec:
    """Bloch 사면체 좌표 r"""

    __slots__ = [
        "r",
    ]

    r: np.ndarray
    """좌표 r_1..r_3"""

    def __init__(self, r: Any):
        self.r = as_real_vector(r, 3)

    def __iter__(self) -> Iterator[float]:
        return iter(self.r.tolist())

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        return self.r.astype(dtype) if dtype else self.r

    @property
    def margins(self) -> np.ndarray:
        """면 여유값 e_μ·r + 1"""
        return E_VECTORS @ self.r + 1


@tetra_repr("inside", "margins", "tol", lines="single")
class TetraMembership:
    """Bloch 사면체 포함 판정 결과"""

    __slots__ = [
        "inside",
        "margins",
        "tol",
    ]

    inside: bool
    """사면체 포함 여부 (경계 포함)"""
    margins: np.ndarray
    """면 여유값 e_μ·r + 1"""
    tol: float
    """허용 오차"""

    def __init__(self, inside: bool, margins: np.ndarray, tol: float):
        self.inside = inside
        self.margins = margins
        self.tol = tol

    def __bool__(self) -> bool:
        return self.inside


def prob_to_bloch(p: TetraProbVec | Any) -> TetraBlochVec:
    """
    확률 벡터를 사면체 좌표로 변환합니다.  r_i = Σ_μ p_μ (e_μ)_i

    Raises:
        TetraInvalidProbabilityError: 확률 벡터가 올바르지 않은 경우
    """
    if not isinstance(p, TetraProbVec):
        p = TetraProbVec(p)

    return TetraBlochVec(E_VECTORS.T @ p.p)


def in_tetrahedron(r: TetraBlochVec | Any, tol: float = DEFAULT_TOLERANCE) -> TetraMembership:
    """
    r ∈ Δ ⇔ 모든 μ에 대해 e_μ·r ≥ −1 − tol

    상한 e_μ·r ≤ 3 은 Σ_μ e_μ = 0 이므로 자동으로 만족합니다.
    """
    if not isinstance(r, TetraBlochVec):
        r = TetraBlochVec(r)

    margins = r.margins
    return TetraMembership(bool(np.all(margins >= -tol)), margins, tol)


def bloch_to_prob(r: TetraBlochVec | Any, tol: float = DEFAULT_TOLERANCE) -> TetraProbVec:
    """
    사면체 좌표를 확률 벡터로 변환합니다.  p_μ = (1 + e_μ·r) / 4

    Raises:
        TetraOutsideTetrahedronError: e_μ·r < −1 − tol 인 경우
    """
    membership = in_tetrahedron(r, tol)

    if not membership:
        raise TetraOutsideTetrahedronError(tuple(membership.margins.tolist()))

    return TetraProbVec(membership.margins / 4, tol=tol)


def sample_tetrahedron(rng: np.random.Generator, count: int | None = None) -> np.ndarray:
    """
    Bloch 사면체에서 균일하게 좌표를 추출합니다. (정육면체 [−1, 1]³ 기각 추출, 채택률 1/3)

    Returns:
        count가 None이면 (3,), 아니면 (count, 3) 배열
    """
    n = 1 if count is None else count
    samples = np.empty((n, 3))
    filled = 0
    attempts = 0

    while filled < n:
        if attempts >= SAMPLER_MAX_ATTEMPTS:
            raise RuntimeError("사면체 표본 추출 시도 횟수를 초과했습니다.")

        batch = rng.uniform(-1.0, 1.0, size=(max(3 * (n - filled), 8), 3))
        batch = batch[np.all(batch @ E_VECTORS.T >= -1, axis=1)][: n - filled]
        samples[filled : filled + len(batch)] = batch
        filled += len(batch)
        attempts += 1

    return samples[0] if count is None else samples
