from math import isqrt
from typing import Any

import numpy as np
import numpy.typing as npt

from tetrabridge.numkernel.exceptions import TetraDimensionError

__all__ = [
    "RealMat",
    "ComplexMat",
    "as_real_matrix",
    "as_complex_matrix",
    "as_real_vector",
    "square_root_dim",
    "frobenius",
]

RealMat = npt.NDArray[np.float64]
"""실수 행렬 (row-major numpy 배열)"""
ComplexMat = npt.NDArray[np.complex128]
"""복소수 행렬 (row-major numpy 배열)"""


def _check_shape(m: np.ndarray, shape: tuple[int, ...] | None, square: bool) -> None:
    if shape is not None and m.shape != shape:
        raise TetraDimensionError("행렬 크기가 올바르지 않습니다.", expected=shape, actual=m.shape)

    if square and (m.ndim != 2 or m.shape[0] != m.shape[1]):
        raise TetraDimensionError("정사각 행렬이 아닙니다.", actual=m.shape)

    if not np.all(np.isfinite(m)):
        raise ValueError("행렬에 유한하지 않은 값이 포함되어 있습니다.")


def as_real_matrix(m: Any, shape: tuple[int, int] | None = None, square: bool = False) -> RealMat:
    """입력을 유한한 실수 행렬로 변환합니다."""
    m = np.array(m, dtype=np.float64)

    if m.ndim != 2:
        raise TetraDimensionError("2차원 행렬이 아닙니다.", actual=m.shape)

    _check_shape(m, shape, square)
    return m


def as_complex_matrix(m: Any, shape: tuple[int, int] | None = None, square: bool = False) -> ComplexMat:
    """입력을 유한한 복소수 행렬로 변환합니다."""
    m = np.array(m, dtype=np.complex128)

    if m.ndim != 2:
        raise TetraDimensionError("2차원 행렬이 아닙니다.", actual=m.shape)

    _check_shape(m, shape, square)
    return m


def as_real_vector(v: Any, length: int) -> npt.NDArray[np.float64]:
    v = np.array(v, dtype=np.float64).reshape(-1)
    _check_shape(v, (length,), False)
    return v


def square_root_dim(n: int) -> int:
    """n = d² 인 d를 반환합니다."""
    d = isqrt(n)

    if d * d != n:
        raise TetraDimensionError("차원이 완전제곱수가 아닙니다.", dim=n)

    return d


def frobenius(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))
