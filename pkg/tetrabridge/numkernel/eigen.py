import numpy as np

from tetrabridge import logging
from tetrabridge.__env__ import JACOBI_MAX_SWEEPS, JACOBI_RELATIVE_OFFDIAG
from tetrabridge.numkernel.exceptions import (
    TetraNoConvergenceError,
    TetraNotHermitianError,
)
from tetrabridge.numkernel.matrix import ComplexMat, as_complex_matrix, frobenius
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraEigenResult",
    "hermitian_eig",
    "general_eig",
]

HERMITIAN_TOLERANCE = 1e-9


@tetra_repr("eigenvalues", "eigenvectors", lines="multiple")
class TetraEigenResult:
    """고유값 분해 결과"""

    __slots__ = [
        "eigenvalues",
        "eigenvectors",
    ]

    eigenvalues: np.ndarray
    """고유값 (에르미트 입력은 실수, 내림차순)"""
    eigenvectors: ComplexMat
    """고유벡터 (열)"""

    def __init__(self, eigenvalues: np.ndarray, eigenvectors: ComplexMat):
        self.eigenvalues = eigenvalues
        self.eigenvectors = eigenvectors

    def reconstruct(self) -> ComplexMat:
        """V Λ V† 를 반환합니다."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _off_diagonal(a: ComplexMat) -> float:
    return frobenius(a - np.diag(np.diag(a)))


def _rotate(a: ComplexMat, v: ComplexMat, p: int, q: int) -> None:
    apq = a[p, q]
    g = abs(apq)

    if g == 0.0:
        return

    # a_pq = g·e 의 위상을 분리하면 (p, q) 블록은 실대칭 Jacobi 회전으로 대각화됩니다.
    e = apq / g
    app = a[p, p].real
    aqq = a[q, q].real
    theta = (aqq - app) / (2.0 * g)
    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * np.conj(e) * col_q
    a[:, q] = s * e * col_p + c * col_q

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * e * row_q
    a[q, :] = s * np.conj(e) * row_p + c * row_q

    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = app - t * g
    a[q, q] = aqq + t * g

    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = c * vp - s * np.conj(e) * vq
    v[:, q] = s * e * vp + c * vq


def hermitian_eig(m) -> TetraEigenResult:
    """
    복소 에르미트 행렬의 고유값 분해 (cyclic Jacobi)

    Args:
        m: 정사각 에르미트 행렬

    Returns:
        내림차순 실수 고유값과 유니터리 고유벡터 행렬

    Raises:
        TetraNotHermitianError: ‖m − m†‖_F > 1e-9·‖m‖_F 인 경우
        TetraNoConvergenceError: 최대 sweep 횟수를 초과한 경우
    """
    m = as_complex_matrix(m, square=True)
    n = m.shape[0]
    norm = frobenius(m)

    if (deviation := frobenius(m - m.conj().T)) > HERMITIAN_TOLERANCE * norm:
        raise TetraNotHermitianError(deviation, norm)

    a = (m + m.conj().T) / 2
    v = np.eye(n, dtype=np.complex128)
    threshold = JACOBI_RELATIVE_OFFDIAG * norm
    sweeps = 0

    while (off := _off_diagonal(a)) >= threshold and norm > 0:
        if sweeps >= JACOBI_MAX_SWEEPS:
            raise TetraNoConvergenceError(sweeps, off)

        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)

        sweeps += 1

    logging.logger.debug("Jacobi eigendecomposition of %dx%d converged in %d sweeps", n, n, sweeps)

    eigenvalues = np.diag(a).real.copy()
    order = np.argsort(-eigenvalues, kind="stable")

    return TetraEigenResult(eigenvalues[order], v[:, order])


def general_eig(m) -> TetraEigenResult:
    """
    일반 정사각 행렬의 고유값 분해

    고유값은 실수부 내림차순, 허수부 내림차순으로 정렬됩니다.
    비교는 소수점 12자리로 반올림한 값으로 합니다.
    """
    m = as_complex_matrix(m, square=True)
    eigenvalues, eigenvectors = np.linalg.eig(m)
    order = np.lexsort((-np.round(eigenvalues.imag, 12), -np.round(eigenvalues.real, 12)))

    return TetraEigenResult(eigenvalues[order], eigenvectors[:, order])
