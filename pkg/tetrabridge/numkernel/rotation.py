import numpy as np

from tetrabridge.numkernel.matrix import RealMat, as_real_matrix

__all__ = [
    "rotation_from_quaternion",
    "quaternion_from_rotation",
    "random_rotation",
    "is_rotation",
]


def rotation_from_quaternion(q) -> RealMat:
    """단위 사원수 (w, x, y, z)에 대응하는 3×3 회전 행렬"""
    w, x, y, z = np.asarray(q, dtype=np.float64) / np.linalg.norm(q)

    return np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ]
    )


def quaternion_from_rotation(r) -> np.ndarray:
    """
    회전 행렬의 단위 사원수 (w, x, y, z), w ≥ 0

    (x, y, z) = n·sin(θ/2), w = cos(θ/2) 인 축-각 표현입니다.
    가장 큰 대각 성분을 기준으로 계산하여 θ ≈ π 에서도 안정적입니다.
    """
    r = as_real_matrix(r, shape=(3, 3))
    trace = np.trace(r)
    candidates = [1 + trace, *(1 + 2 * np.diag(r) - trace)]

    match int(np.argmax(candidates)):
        case 0:
            w = np.sqrt(max(1 + trace, 0.0)) / 2
            q = [w, (r[2, 1] - r[1, 2]) / (4 * w), (r[0, 2] - r[2, 0]) / (4 * w), (r[1, 0] - r[0, 1]) / (4 * w)]
        case 1:
            x = np.sqrt(max(1 + r[0, 0] - r[1, 1] - r[2, 2], 0.0)) / 2
            q = [(r[2, 1] - r[1, 2]) / (4 * x), x, (r[0, 1] + r[1, 0]) / (4 * x), (r[0, 2] + r[2, 0]) / (4 * x)]
        case 2:
            y = np.sqrt(max(1 - r[0, 0] + r[1, 1] - r[2, 2], 0.0)) / 2
            q = [(r[0, 2] - r[2, 0]) / (4 * y), (r[0, 1] + r[1, 0]) / (4 * y), y, (r[1, 2] + r[2, 1]) / (4 * y)]
        case _:
            z = np.sqrt(max(1 - r[0, 0] - r[1, 1] + r[2, 2], 0.0)) / 2
            q = [(r[1, 0] - r[0, 1]) / (4 * z), (r[0, 2] + r[2, 0]) / (4 * z), (r[1, 2] + r[2, 1]) / (4 * z), z]

    q = np.array(q)
    q /= np.linalg.norm(q)

    return -q if q[0] < 0 else q


def random_rotation(rng: np.random.Generator) -> RealMat:
    """Haar 균일 분포의 3×3 회전 행렬"""
    return rotation_from_quaternion(rng.normal(size=4))


def is_rotation(r, tol: float = 1e-9) -> tuple[bool, float, float]:
    """
    회전 행렬 여부

    Returns:
        (회전 여부, 행렬식, ‖RᵀR − I‖_F)
    """
    r = as_real_matrix(r, shape=(3, 3))
    determinant = float(np.linalg.det(r))
    orthogonality = float(np.linalg.norm(r.T @ r - np.eye(3)))

    return abs(determinant - 1) <= tol and orthogonality <= tol, determinant, orthogonality
