from tetrabridge.api.exceptions import (
    TetraBasisMismatchError,
    TetraColumnSumNotZeroError,
    TetraConsistencyViolationError,
    TetraConstraintViolationError,
    TetraFileFormatError,
    TetraInconsistentCertificateError,
    TetraInvalidProbabilityError,
    TetraInvalidStateError,
    TetraNotARotationError,
    TetraNotColumnStochasticError,
    TetraNotDoublyStochasticError,
    TetraNotSymmetricError,
    TetraOutsideTetrahedronError,
    TetraTheoremViolationError,
    TetraUnsupportedDimensionError,
)
from tetrabridge.numkernel.exceptions import (
    TetraDimensionError,
    TetraException,
    TetraNoConvergenceError,
    TetraNotHermitianError,
    TetraOverflowError,
)

__all__ = [
    "TetraException",
    "TetraNotHermitianError",
    "TetraNoConvergenceError",
    "TetraOverflowError",
    "TetraDimensionError",
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
