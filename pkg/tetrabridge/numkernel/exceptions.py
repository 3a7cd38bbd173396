from typing import Any

__all__ = [
    "TetraException",
    "TetraNotHermitianError",
    "TetraNoConvergenceError",
    "TetraOverflowError",
    "TetraDimensionError",
]


class TetraException(Exception):
    """TetraBridge 예외 베이스 클래스"""

    data: dict[str, Any]
    """판정 근거 데이터"""

    def __init__(self, message: str, data: dict[str, Any] | None = None):
        if data:
            message += f" ({', '.join(f'{k}={v!r}' for k, v in data.items())})"

        super().__init__(message)
        self.data = data or {}


class TetraNotHermitianError(TetraException):
    """에르미트 행렬이 아닌 경우"""

    def __init__(self, deviation: float, norm: float):
        super().__init__(
            "에르미트 행렬이 아닙니다.",
            {"deviation": deviation, "norm": norm},
        )


class TetraNoConvergenceError(TetraException):
    """Jacobi 반복이 수렴하지 않은 경우"""

    def __init__(self, sweeps: int, off_diagonal: float):
        super().__init__(
            "Jacobi 고유값 분해가 수렴하지 않았습니다.",
            {"sweeps": sweeps, "off_diagonal": off_diagonal},
        )


class TetraOverflowError(TetraException):
    """행렬 지수 계산 중 노름이 너무 큰 경우"""

    def __init__(self, norm: float):
        super().__init__("행렬 지수를 계산하기에 노름이 너무 큽니다.", {"norm": norm})


class TetraDimensionError(TetraException):
    """행렬 차원이 맞지 않는 경우"""

    def __init__(self, message: str, **fields: Any):
        super().__init__(message, fields)
