import numpy as np

__all__ = [
    "E_VECTORS",
    "E_KETS",
    "vertex_self_check",
]

E_VECTORS = np.array(
    [
        [1, 1, 1],
        [1, -1, -1],
        [-1, 1, -1],
        [-1, -1, 1],
    ],
    dtype=np.float64,
)
"""꼭짓점 벡터 e_0..e_3 (행)"""
E_VECTORS.setflags(write=False)

E_KETS = np.vstack([np.ones(4), E_VECTORS.T]) / 2
"""
정규직교 기저 |e_μ⟩ = (1, e_μ)ᵀ / 2 (열)

대칭 행렬이며 자기 자신의 역행렬입니다. 배위(configuration) 기저의 행렬 Q는
E_KETS @ Q @ E_KETS 로 |e_μ⟩ 기저 성분 ⟨e_μ|Q|e_ν⟩ 이 됩니다.
"""
E_KETS.setflags(write=False)


def vertex_self_check() -> None:
    """
    꼭짓점 항등식을 검사합니다.

    e_μ·e_ν = 4δ_{μν} − 1, Σ_μ e_μ = 0, Σ_μ (e_μ)_i (e_μ)_j = 4δ_{ij}, {|e_μ⟩} 정규직교

    Raises:
        RuntimeError: 항등식이 성립하지 않는 경우
    """
    checks = {
        "inner": np.array_equal(E_VECTORS @ E_VECTORS.T, 4 * np.eye(4) - 1),
        "sum": np.array_equal(E_VECTORS.sum(axis=0), np.zeros(3)),
        "outer": np.array_equal(E_VECTORS.T @ E_VECTORS, 4 * np.eye(3)),
        "orthonormal": np.array_equal(E_KETS.T @ E_KETS, np.eye(4)),
    }

    if failed := [name for name, ok in checks.items() if not ok]:
        raise RuntimeError(f"사면체 꼭짓점 항등식이 성립하지 않습니다. ({', '.join(failed)})")


vertex_self_check()
