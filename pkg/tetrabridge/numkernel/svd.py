import numpy as np

from tetrabridge.numkernel.eigen import hermitian_eig
from tetrabridge.numkernel.matrix import RealMat, as_real_matrix
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraSignedSVD",
    "svd3_rotations",
]

_NEGLIGIBLE = 1e-14


@tetra_repr("s_hat", "lambdas", "t_hat", lines="multiple")
class TetraSignedSVD:
    """
    부호 있는 특이값 분해 Λ = Ŝ·diag(λ)·T̂

    Ŝ, T̂는 항상 회전 행렬이며 반사 성분은 λ의 부호로 흡수됩니다.
    """

    __slots__ = [
        "s_hat",
        "lambdas",
        "t_hat",
    ]

    s_hat: RealMat
    """왼쪽 회전 Ŝ"""
    lambdas: np.ndarray
    """부호 있는 특이값 (|λ_1| ≥ |λ_2| ≥ |λ_3|)"""
    t_hat: RealMat
    """오른쪽 회전 T̂"""

    def __init__(self, s_hat: RealMat, lambdas: np.ndarray, t_hat: RealMat):
        self.s_hat = s_hat
        self.lambdas = lambdas
        self.t_hat = t_hat

    def __iter__(self):
        return iter((self.s_hat, self.lambdas, self.t_hat))

    def reconstruct(self) -> RealMat:
        return (self.s_hat * self.lambdas) @ self.t_hat


def _orthogonal_unit(u: np.ndarray) -> np.ndarray:
    axis = np.zeros(3)
    axis[int(np.argmin(np.abs(u)))] = 1.0
    w = np.cross(u, axis)
    return w / np.linalg.norm(w)


def svd3_rotations(lambda_mat) -> TetraSignedSVD:
    """
    3×3 실수 행렬을 두 회전과 부호 있는 특이값으로 분해합니다.

    ΛᵀΛ의 Jacobi 고유값 분해로 T̂를 구하고, Ŝ의 세 번째 열을 외적으로 완성하여
    det(Ŝ) = det(T̂) = +1을 보장합니다. 반사는 λ_3의 부호가 됩니다.

    Args:
        lambda_mat: 3×3 유한 실수 행렬

    Examples:
        >>> s_hat, lambdas, t_hat = svd3_rotations(np.diag([2.0, 1.0, -3.0]))
        >>> np.abs(lambdas)
        array([3., 2., 1.])
    """
    m = as_real_matrix(lambda_mat, shape=(3, 3))
    scale = max(float(np.linalg.norm(m)), 1.0)

    v = hermitian_eig(m.T @ m).eigenvectors.real

    if np.linalg.det(v) < 0:
        v[:, 2] = -v[:, 2]

    b = m @ v
    s = np.zeros((3, 3))

    if (n1 := np.linalg.norm(b[:, 0])) > _NEGLIGIBLE * scale:
        s[:, 0] = b[:, 0] / n1
    else:
        s[:, 0] = v[:, 0]

    w = b[:, 1] - (s[:, 0] @ b[:, 1]) * s[:, 0]

    if (n2 := np.linalg.norm(w)) > _NEGLIGIBLE * scale:
        s[:, 1] = w / n2
    else:
        s[:, 1] = _orthogonal_unit(s[:, 0])

    s[:, 2] = np.cross(s[:, 0], s[:, 1])

    lambdas = np.einsum("ik,ik->k", s, b)

    return TetraSignedSVD(s, lambdas, v.T.copy())
