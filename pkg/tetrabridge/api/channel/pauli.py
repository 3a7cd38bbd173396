from typing import Any

import numpy as np

from tetrabridge.api.tetra.vertex import E_VECTORS
from tetrabridge.numkernel.matrix import ComplexMat, as_real_vector

__all__ = [
    "IDENTITY",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "PAULIS",
    "A_BASIS",
    "bloch_operator",
    "density_from_bloch",
    "bloch_from_density",
]

IDENTITY = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

PAULIS = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])
"""σ_1, σ_2, σ_3"""


def bloch_operator(v: Any) -> ComplexMat:
    """(I + v·σ) / 2"""
    v = as_real_vector(v, 3)
    return (IDENTITY + np.einsum("i,ijk->jk", v, PAULIS)) / 2


A_BASIS = np.stack([bloch_operator(e) for e in E_VECTORS])
"""
A_μ = (I + e_μ·σ) / 2

에르미트이고 대각합이 1이며 tr(A_μ A_ν) = 2δ_{μν}, Σ_μ A_μ = 2I 를 만족하지만
양의 연산자는 아닙니다. (고유값 (1 ± √3)/2)
"""


def _basis_self_check() -> None:
    for sigma in PAULIS:
        if not np.allclose(sigma @ sigma, IDENTITY, atol=0) or np.trace(sigma) != 0:
            raise RuntimeError("Pauli 행렬 항등식이 성립하지 않습니다.")

    gram = np.einsum("aij,bji->ab", A_BASIS, A_BASIS)

    if not np.allclose(gram, 2 * np.eye(4), atol=1e-14) or not np.allclose(A_BASIS.sum(axis=0), 2 * IDENTITY, atol=1e-14):
        raise RuntimeError("A_μ 기저 항등식이 성립하지 않습니다.")

    for a in A_BASIS:
        if np.linalg.eigvalsh(a).min() >= 0:
            raise RuntimeError("A_μ 는 음의 고유값을 하나 가져야 합니다.")


_basis_self_check()


def density_from_bloch(r: Any) -> ComplexMat:
    """Bloch 벡터 r에 대응하는 ρ = (I + r·σ) / 2"""
    return bloch_operator(r)


def bloch_from_density(rho: Any) -> np.ndarray:
    """r_i = tr(ρ σ_i)"""
    rho = np.asarray(rho, dtype=np.complex128)
    return np.einsum("ij,kji->k", rho, PAULIS).real
