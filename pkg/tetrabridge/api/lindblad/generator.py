from typing import Any

import numpy as np

from tetrabridge.__env__ import DEFAULT_TOLERANCE, EXACT_TOLERANCE, SAMPLER_MAX_ATTEMPTS
from tetrabridge.api.exceptions import TetraColumnSumNotZeroError, TetraNotSymmetricError
from tetrabridge.api.stochastic.matrix import embed_rotation, to_configuration, to_e_basis
from tetrabridge.api.tetra.vertex import E_VECTORS
from tetrabridge.logging import logger
from tetrabridge.numkernel.eigen import hermitian_eig
from tetrabridge.numkernel.matrix import RealMat, as_real_matrix, as_real_vector
from tetrabridge.numkernel.rotation import random_rotation
from tetrabridge.utils.random import as_generator
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraGenerator",
    "TetraGeneratorNormalForm",
    "generator_normal_matrix",
    "gen_normal_form",
    "is_classical_generator",
    "random_symmetric_generator",
]


@tetra_repr("h", "is_classical_generator", lines="multiple")
class TetraGenerator:
    """
    대칭 고전 생성자 H (배위 기저)

    ⟨e_0|H = 0 (열의 합 0) 이며 H = Hᵀ 입니다.
    비대각 성분이 모두 음이 아니면 e^{tH} 는 모든 t ≥ 0 에서 확률 행렬입니다.

    Raises:
        TetraNotSymmetricError: 대칭 행렬이 아닌 경우
        TetraColumnSumNotZeroError: 열의 합이 0이 아닌 경우
    """

    __slots__ = [
        "h",
        "tol",
    ]

    h: RealMat
    """생성자 성분"""
    tol: float
    """비대각 성분 음수 허용 오차"""

    def __init__(self, h: Any, tol: float = DEFAULT_TOLERANCE):
        h = as_real_matrix(h, shape=(4, 4))

        if (deviation := float(np.max(np.abs(h - h.T)))) > EXACT_TOLERANCE:
            raise TetraNotSymmetricError(deviation)

        if (deviation := float(np.max(np.abs(h.sum(axis=0))))) > EXACT_TOLERANCE:
            raise TetraColumnSumNotZeroError(deviation)

        self.h = h
        self.tol = tol

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        return self.h.astype(dtype) if dtype else self.h

    @property
    def is_classical_generator(self) -> bool:
        """비대각 성분이 모두 −tol 이상인지 여부"""
        return bool(np.min(self.h[~np.eye(4, dtype=bool)]) >= -self.tol)

    @property
    def e_basis(self) -> RealMat:
        """diag(0, Ĥ) (|e_μ⟩ 기저)"""
        return to_e_basis(self.h)


def generator_normal_matrix(h_vec: Any) -> RealMat:
    """
    H_n = Σ h_i|e_i⟩⟨e_i| (배위 기저)

    성분은 (H_n)_{μν} = Σ_i h_i (e_μ)_i (e_ν)_i / 4 이며,
    비대각 성분은 h·e_κ / 4, 대각 성분은 h·e_0 / 4 꼴입니다.
    """
    h_vec = as_real_vector(h_vec, 3)
    return to_configuration(np.diag([0.0, *h_vec]))


def is_classical_generator(h_vec: Any, tol: float = DEFAULT_TOLERANCE) -> bool:
    """
    H_n(h) 가 고전 생성자인지 여부 ⇔ h·e_i ≥ −tol (i = 1, 2, 3)

    Σ_μ h·e_μ = 0 이므로 대각 성분 h·e_0/4 는 자동으로 0 이하가 됩니다.
    """
    h_vec = as_real_vector(h_vec, 3)
    return bool(np.min(E_VECTORS[1:] @ h_vec) >= -tol)


@tetra_repr("h_vec", "s_prime_hat", "is_classical", lines="multiple")
class TetraGeneratorNormalForm:
    """H = S′·H_n·S′ᵀ"""

    __slots__ = [
        "s_prime_hat",
        "h_vec",
    ]

    s_prime_hat: RealMat
    """회전 Ŝ′"""
    h_vec: np.ndarray
    """부호 있는 고유값 h"""

    def __init__(self, s_prime_hat: RealMat, h_vec: np.ndarray):
        self.s_prime_hat = s_prime_hat
        self.h_vec = h_vec

    @property
    def hn(self) -> RealMat:
        """H_n (배위 기저)"""
        return generator_normal_matrix(self.h_vec)

    @property
    def s_prime(self) -> RealMat:
        """S′ = diag(1, Ŝ′) (배위 기저)"""
        return to_configuration(embed_rotation(self.s_prime_hat))

    @property
    def is_classical(self) -> bool:
        return is_classical_generator(self.h_vec)

    def reconstruct(self) -> RealMat:
        """S′·H_n·S′ᵀ (배위 기저)"""
        return self.s_prime @ self.hn @ self.s_prime.T


def gen_normal_form(h: TetraGenerator | Any) -> TetraGeneratorNormalForm:
    """
    Ĥ 블록의 대칭 고유값 분해로 정규형을 계산합니다.

    Raises:
        TetraNotSymmetricError: 대칭 행렬이 아닌 경우
        TetraColumnSumNotZeroError: 열의 합이 0이 아닌 경우
    """
    if not isinstance(h, TetraGenerator):
        h = TetraGenerator(h)

    block = h.e_basis[1:, 1:]
    eig = hermitian_eig((block + block.T) / 2)
    rotation = eig.eigenvectors.real.copy()

    if np.linalg.det(rotation) < 0:
        rotation[:, -1] = -rotation[:, -1]

    return TetraGeneratorNormalForm(rotation, eig.eigenvalues.copy())


def random_symmetric_generator(seed: np.random.Generator | int | None = None, scale: float = 1.0) -> TetraGenerator:
    """
    무작위 대칭 고전 생성자

    h·e_i 를 [0, scale) 에서 균일하게, Ŝ′ 을 Haar 회전으로 추출하여 S′·H_n·S′ᵀ 를 만들고
    비대각 성분에 음수가 있으면 다시 추출합니다.
    H_n 이 고전 생성자이므로 반환된 H 의 E_H 는 항상 Lindblad 생성자입니다.

    Args:
        seed: 난수 생성기 또는 시드
        scale: h·e_i 의 상한
    """
    rng = as_generator(seed)
    off_diagonal = ~np.eye(4, dtype=bool)

    for attempt in range(1, SAMPLER_MAX_ATTEMPTS + 1):
        h_vec = np.linalg.solve(E_VECTORS[1:], rng.uniform(0.0, scale, size=3))
        s_prime = to_configuration(embed_rotation(random_rotation(rng)))
        h = s_prime @ generator_normal_matrix(h_vec) @ s_prime.T
        h = (h + h.T) / 2
        h[np.diag_indices(4)] -= h.sum(axis=0)

        if np.min(h[off_diagonal]) >= 0:
            logger.debug(f"random_symmetric_generator: accepted after {attempt} attempts")
            return TetraGenerator(h)

    raise RuntimeError("생성자 추출 시도 횟수를 초과했습니다.")
