from itertools import permutations
from typing import Any

import numpy as np

from tetrabridge.api.channel.qubit import A_MATRIX, map_to_channel
from tetrabridge.api.stochastic.matrix import TetraStochasticMatrix
from tetrabridge.numkernel.eigen import general_eig
from tetrabridge.numkernel.matrix import as_real_matrix
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraSpectralReport",
    "spectral_check",
    "multiset_distance",
]

SPECTRUM_TOLERANCE = 1e-9
EIGENOPERATOR_TOLERANCE = 1e-8
DEFECTIVE_CLUSTER_GAP = 1e-6
DEFECTIVE_SINGULAR_VALUE = 1e-6


@tetra_repr(
    "ok",
    "q_eigenvalues",
    "superop_eigenvalues",
    "spectrum_mismatch",
    "eigenoperator_residuals",
    "skipped",
    lines="multiple",
)
class TetraSpectralReport:
    """Q와 E_Q 초연산자의 스펙트럼 비교 결과"""

    __slots__ = [
        "q_eigenvalues",
        "superop_eigenvalues",
        "spectrum_mismatch",
        "eigenoperator_residuals",
        "skipped",
    ]

    q_eigenvalues: np.ndarray
    superop_eigenvalues: np.ndarray
    spectrum_mismatch: float
    """최적 짝짓기 후 최대 고유값 차이"""
    eigenoperator_residuals: list[float | None]
    """‖E_Q(X_v) − v·X_v‖_F / ‖X_v‖_F (결손 고유값은 None)"""
    skipped: int
    """결손(대각화 불가) 고유값으로 건너뛴 고유쌍 수"""

    def __init__(
        self,
        q_eigenvalues: np.ndarray,
        superop_eigenvalues: np.ndarray,
        spectrum_mismatch: float,
        eigenoperator_residuals: list[float | None],
        skipped: int,
    ):
        self.q_eigenvalues = q_eigenvalues
        self.superop_eigenvalues = superop_eigenvalues
        self.spectrum_mismatch = spectrum_mismatch
        self.eigenoperator_residuals = eigenoperator_residuals
        self.skipped = skipped

    @property
    def ok(self) -> bool:
        return self.spectrum_mismatch <= SPECTRUM_TOLERANCE and all(
            r <= EIGENOPERATOR_TOLERANCE for r in self.eigenoperator_residuals if r is not None
        )


def multiset_distance(a: np.ndarray, b: np.ndarray) -> float:
    """두 복소수 다중집합을 최적으로 짝지었을 때의 최대 차이"""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)

    if a.shape != b.shape:
        return float("inf")

    return min(float(np.max(np.abs(a - b[list(p)]), initial=0.0)) for p in permutations(range(len(b))))


def _defective(values: np.ndarray, vectors: np.ndarray, index: int) -> bool:
    cluster = np.abs(values - values[index]) <= DEFECTIVE_CLUSTER_GAP

    columns = vectors[:, cluster]
    columns = columns / np.linalg.norm(columns, axis=0)
    return bool(np.linalg.svd(columns, compute_uv=False).min() < DEFECTIVE_SINGULAR_VALUE)


def spectral_check(q: TetraStochasticMatrix | Any) -> TetraSpectralReport:
    """
    스펙트럼 보존 검사

    Q와 E_Q 초연산자의 고유값 다중집합을 비교하고, Q의 고유쌍 (v, x) 마다
    X_x = Σ x_α A_α 가 E_Q(X_x) = v·X_x 를 만족하는지 확인합니다.
    대각화할 수 없는 고유값 묶음은 두 번째 검사에서 제외합니다.
    """
    if isinstance(q, TetraStochasticMatrix):
        q = q.q

    q = as_real_matrix(q, shape=(4, 4))
    channel = map_to_channel(q)

    q_eig = general_eig(q)
    superop_eig = general_eig(channel.superop)

    residuals: list[float | None] = []

    for index, value in enumerate(q_eig.eigenvalues):
        if _defective(q_eig.eigenvalues, q_eig.eigenvectors, index):
            residuals.append(None)
            continue

        x = A_MATRIX @ q_eig.eigenvectors[:, index]
        norm = float(np.linalg.norm(x))
        residuals.append(float(np.linalg.norm(channel.superop @ x - value * x)) / norm)

    return TetraSpectralReport(
        q_eigenvalues=q_eig.eigenvalues,
        superop_eigenvalues=superop_eig.eigenvalues,
        spectrum_mismatch=multiset_distance(q_eig.eigenvalues, superop_eig.eigenvalues),
        eigenoperator_residuals=residuals,
        skipped=sum(r is None for r in residuals),
    )
