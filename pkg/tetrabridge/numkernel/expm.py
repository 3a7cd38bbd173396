import numpy as np

from tetrabridge import logging
from tetrabridge.__env__ import EXPM_MAX_NORM, EXPM_TRUNCATION
from tetrabridge.numkernel.exceptions import TetraOverflowError
from tetrabridge.numkernel.matrix import as_complex_matrix, as_real_matrix

__all__ = [
    "mat_exp",
]


def mat_exp(m: np.ndarray) -> np.ndarray:
    """
    행렬 지수 exp(m) (scaling-and-squaring + Taylor 급수)

    다음 항의 노름이 부분합 노름의 1e-16배보다 작아지면 급수를 자릅니다.
    실수 입력은 실수, 복소수 입력은 복소수 행렬을 반환합니다.

    Raises:
        TetraOverflowError: 노름이 너무 커서 결과가 유한하지 않은 경우
    """
    m = as_complex_matrix(m, square=True) if np.iscomplexobj(m) else as_real_matrix(m, square=True)
    n = m.shape[0]

    if n == 0:
        return m.copy()

    norm = float(np.linalg.norm(m, ord=np.inf))

    if norm > EXPM_MAX_NORM:
        raise TetraOverflowError(norm)

    squarings = max(0, int(np.ceil(np.log2(norm))) + 1) if norm > 0.5 else 0
    a = m / 2.0**squarings

    term = np.eye(n, dtype=m.dtype)
    result = term.copy()
    k = 0

    while True:
        k += 1
        term = term @ a / k
        result = result + term

        if np.linalg.norm(term) < EXPM_TRUNCATION * np.linalg.norm(result):
            break

    for _ in range(squarings):
        result = result @ result

    if not np.all(np.isfinite(result)):
        raise TetraOverflowError(norm)

    logging.logger.debug("mat_exp: %d Taylor terms, %d squarings", k, squarings)

    return result
