from typing import Any

import numpy as np

from tetrabridge.__env__ import DEFAULT_TOLERANCE
from tetrabridge.api.exceptions import (
    TetraNotDoublyStochasticError,
    TetraTheoremViolationError,
)
from tetrabridge.api.stochastic.affine import to_affine
from tetrabridge.api.stochastic.matrix import (
    TetraStochasticMatrix,
    embed_rotation,
    normal_matrix,
    to_configuration,
)
from tetrabridge.api.tetra.bloch import TetraMembership, in_tetrahedron
from tetrabridge.numkernel.matrix import RealMat, as_real_vector
from tetrabridge.numkernel.svd import svd3_rotations
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraNormalForm",
    "normal_form",
    "normal_is_stochastic",
]

TRANSLATION_TOLERANCE = 1e-9
THEOREM_GAP = 1e-9


@tetra_repr("lambdas", "s_hat", "t_hat", "membership", "is_product_stochastic", lines="multiple")
class TetraNormalForm:
    """
    이중 확률 행렬의 정규형 Q = S·Q_n·T

    S = diag(1, Ŝ), T = diag(1, T̂) 는 |e_μ⟩ 기저의 블록 행렬이며
    Q_n = |e_0⟩⟨e_0| + Σ λ_i|e_i⟩⟨e_i| 입니다.
    """

    s_hat: RealMat
    """왼쪽 회전 Ŝ"""
    lambdas: np.ndarray
    """부호 있는 특이값 λ"""
    t_hat: RealMat
    """오른쪽 회전 T̂"""
    is_product_stochastic: bool
    """S·Q_n·T 가 확률 행렬인지 여부"""

    def __init__(self, s_hat: RealMat, lambdas: np.ndarray, t_hat: RealMat, is_product_stochastic: bool):
        self.s_hat = s_hat
        self.lambdas = lambdas
        self.t_hat = t_hat
        self.is_product_stochastic = is_product_stochastic

    @property
    def s(self) -> RealMat:
        """S = diag(1, Ŝ) (|e_μ⟩ 기저)"""
        return embed_rotation(self.s_hat)

    @property
    def t(self) -> RealMat:
        """T = diag(1, T̂) (|e_μ⟩ 기저)"""
        return embed_rotation(self.t_hat)

    @property
    def s_config(self) -> RealMat:
        """S (배위 기저)"""
        return to_configuration(self.s)

    @property
    def t_config(self) -> RealMat:
        """T (배위 기저)"""
        return to_configuration(self.t)

    @property
    def qn(self) -> RealMat:
        """Q_n (배위 기저)"""
        return normal_matrix(self.lambdas)

    @property
    def membership(self) -> TetraMembership:
        """λ ∈ Δ 판정"""
        return in_tetrahedron(self.lambdas)

    def reconstruct(self) -> RealMat:
        """S·Q_n·T (배위 기저)"""
        return self.s_config @ self.qn @ self.t_config


def normal_form(q: TetraStochasticMatrix | Any) -> TetraNormalForm:
    """
    Λ = Ŝ·diag(λ)·T̂ 로부터 정규형을 계산합니다.

    Ŝ, T̂는 항상 회전이고 |λ|는 내림차순입니다.

    Raises:
        TetraNotColumnStochasticError: 열의 합이 1이 아닌 경우
        TetraNotDoublyStochasticError: t ≠ 0 인 경우
    """
    if not isinstance(q, TetraStochasticMatrix):
        q = TetraStochasticMatrix(q)

    affine = to_affine(q)

    if (translation := float(np.linalg.norm(affine.t))) > TRANSLATION_TOLERANCE:
        raise TetraNotDoublyStochasticError(translation)

    s_hat, lambdas, t_hat = svd3_rotations(affine.lambda_mat)

    return TetraNormalForm(s_hat, lambdas, t_hat, q.is_stochastic)


def normal_is_stochastic(lambdas: Any, tol: float = DEFAULT_TOLERANCE) -> bool:
    """
    Q_n(λ) 가 (이중) 확률 행렬인지 판정합니다. ⇔ λ ∈ Δ

    사면체 판정과 Q_n 성분 비음수 판정을 모두 계산하여 서로 검증합니다.

    Raises:
        TetraTheoremViolationError: 두 판정이 1e-9 이상 어긋나는 경우
    """
    lambdas = as_real_vector(lambdas, 3)
    membership = in_tetrahedron(lambdas, tol)
    entries = normal_matrix(lambdas)
    entrywise = bool(entries.min() >= -tol / 4)

    if membership.inside != entrywise:
        # Q_n 성분은 (1 + e_κ·λ)/4 이므로 4배한 최소 성분은 최소 여유값과 같아야 합니다.
        if (gap := abs(4 * float(entries.min()) - float(membership.margins.min()))) > THEOREM_GAP:
            raise TetraTheoremViolationError(
                "사면체 판정과 성분 판정이 일치하지 않습니다.",
                lambdas=tuple(lambdas.tolist()),
                gap=gap,
            )

    return membership.inside
