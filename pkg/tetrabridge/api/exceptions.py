from typing import Any

from tetrabridge.numkernel.exceptions import TetraException

__all__ = [
    "TetraInvalidProbabilityError",
    "TetraOutsideTetrahedronError",
    "TetraNotColumnStochasticError",
    "TetraNotDoublyStochasticError",
    "TetraTheoremViolationError",
    "TetraInconsistentCertificateError",
    "TetraNotARotationError",
    "TetraInvalidStateError",
    "TetraNotSymmetricError",
    "TetraColumnSumNotZeroError",
    "TetraConsistencyViolationError",
    "TetraUnsupportedDimensionError",
    "TetraConstraintViolationError",
    "TetraBasisMismatchError",
    "TetraFileFormatError",
]


class TetraInvalidProbabilityError(TetraException):
    """확률 벡터가 올바르지 않은 경우"""

    def __init__(self, message: str, **fields: Any):
        super().__init__(message, fields)


class TetraOutsideTetrahedronError(TetraException):
    """Bloch 사면체 밖의 벡터인 경우"""

    margins: tuple[float, ...]
    """면 여유값 e_μ·r + 1"""

    def __init__(self, margins: tuple[float, ...]):
        super().__init__("Bloch 사면체 밖의 벡터입니다.", {"margins": margins})
        self.margins = margins


class TetraNotColumnStochasticError(TetraException):
    """열의 합이 1이 아닌 경우"""

    def __init__(self, deviation: float):
        super().__init__("열 확률 행렬이 아닙니다.", {"column_sum_deviation": deviation})


class TetraNotDoublyStochasticError(TetraException):
    """이중 확률 행렬이 아닌 경우 (t ≠ 0)"""

    def __init__(self, translation_norm: float):
        super().__init__("이중 확률 행렬이 아닙니다.", {"translation_norm": translation_norm})


class TetraTheoremViolationError(TetraException):
    """기하 판정과 성분 판정이 서로 다른 경우"""

    def __init__(self, message: str, **fields: Any):
        super().__init__(message, fields)


class TetraInconsistentCertificateError(TetraException):
    """두 판정 경로의 결과가 다른 경우"""

    def __init__(self, property: str, **fields: Any):
        super().__init__(f"{property} 판정 경로가 서로 일치하지 않습니다.", fields)


class TetraNotARotationError(TetraException):
    """회전 행렬이 아닌 경우"""

    def __init__(self, determinant: float, orthogonality: float):
        super().__init__(
            "회전 행렬이 아닙니다.",
            {"determinant": determinant, "orthogonality": orthogonality},
        )


class TetraInvalidStateError(TetraException):
    """밀도 행렬이 올바르지 않은 경우"""

    def __init__(self, message: str, **fields: Any):
        super().__init__(message, fields)


class TetraNotSymmetricError(TetraException):
    """대칭 행렬이 아닌 경우"""

    def __init__(self, deviation: float):
        super().__init__("대칭 생성자가 아닙니다.", {"deviation": deviation})


class TetraColumnSumNotZeroError(TetraException):
    """생성자의 열의 합이 0이 아닌 경우"""

    def __init__(self, deviation: float):
        super().__init__("생성자의 열의 합이 0이 아닙니다.", {"column_sum_deviation": deviation})


class TetraConsistencyViolationError(TetraException):
    """e^H 와 e^{E_H} 가 일치하지 않는 경우"""

    def __init__(self, message: str, **fields: Any):
        super().__init__(message, fields)


class TetraUnsupportedDimensionError(TetraException):
    """지원하지 않는 차원인 경우"""

    def __init__(self, dim: int):
        super().__init__("지원하지 않는 차원입니다.", {"dim": dim})


class TetraConstraintViolationError(TetraException):
    """연산자 기저 조건을 만족하지 않는 경우"""

    condition: str
    """실패한 조건"""

    def __init__(self, condition: str, **fields: Any):
        super().__init__(f"연산자 기저 조건을 만족하지 않습니다: {condition}", fields)
        self.condition = condition


class TetraBasisMismatchError(TetraException):
    """두 채널의 기저가 다른 경우"""

    def __init__(self):
        super().__init__("두 채널이 같은 기저 쌍을 공유하지 않습니다.")


class TetraFileFormatError(TetraException):
    """입력 파일 형식이 올바르지 않은 경우"""

    def __init__(self, message: str, **fields: Any):
        super().__init__(message, fields)
