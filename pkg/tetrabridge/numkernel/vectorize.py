import numpy as np

from tetrabridge.numkernel.exceptions import TetraDimensionError
from tetrabridge.numkernel.matrix import ComplexMat, as_complex_matrix, square_root_dim

__all__ = [
    "vec",
    "unvec",
    "gamma_involution",
    "partial_trace_output",
    "partial_trace_input",
    "omega",
]


def vec(rho) -> np.ndarray:
    """
    행 우선(row-major) 벡터화

    ρ_{i,j}는 i·d + j 위치에 놓입니다.

    Examples:
        >>> vec([[1, 2], [3, 4]])
        array([1.+0.j, 2.+0.j, 3.+0.j, 4.+0.j])
    """
    rho = as_complex_matrix(rho, square=True)
    return rho.reshape(-1).copy()


def unvec(column) -> ComplexMat:
    """`vec`의 역변환"""
    column = np.asarray(column, dtype=np.complex128)

    if column.ndim != 1 and not (column.ndim == 2 and 1 in column.shape):
        raise TetraDimensionError("열 벡터가 아닙니다.", actual=column.shape)

    column = column.reshape(-1)
    d = square_root_dim(column.size)
    return column.reshape(d, d).copy()


def gamma_involution(l_hat) -> ComplexMat:
    """
    (L̂^Γ)_{ij,kl} = L̂_{ik,jl} 재배열

    초연산자 L̂에 대해 L̂^Γ = d·τ(E) 가 성립합니다. (d = 2이면 2τ)

    Raises:
        TetraDimensionError: 차원이 완전제곱수가 아닌 경우
    """
    l_hat = as_complex_matrix(l_hat, square=True)
    d = square_root_dim(l_hat.shape[0])
    return l_hat.reshape(d, d, d, d).transpose(0, 2, 1, 3).reshape(d * d, d * d).copy()


def partial_trace_output(choi: ComplexMat) -> ComplexMat:
    """Choi 행렬의 첫 번째(출력) 인자에 대한 부분 대각합"""
    d = square_root_dim(choi.shape[0])
    return np.einsum("aiaj->ij", choi.reshape(d, d, d, d))


def partial_trace_input(choi: ComplexMat) -> ComplexMat:
    """Choi 행렬의 두 번째(입력) 인자에 대한 부분 대각합"""
    d = square_root_dim(choi.shape[0])
    return np.einsum("aibi->ab", choi.reshape(d, d, d, d))


def omega(d: int = 2) -> np.ndarray:
    """최대 얽힘 상태 |ω⟩ = Σ_i |ii⟩ / √d"""
    return np.eye(d, dtype=np.complex128).reshape(-1) / np.sqrt(d)
