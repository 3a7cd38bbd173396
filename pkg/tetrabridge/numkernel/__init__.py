from tetrabridge.numkernel.eigen import TetraEigenResult, general_eig, hermitian_eig
from tetrabridge.numkernel.expm import mat_exp
from tetrabridge.numkernel.matrix import ComplexMat, RealMat
from tetrabridge.numkernel.rotation import (
    is_rotation,
    quaternion_from_rotation,
    random_rotation,
    rotation_from_quaternion,
)
from tetrabridge.numkernel.svd import TetraSignedSVD, svd3_rotations
from tetrabridge.numkernel.vectorize import gamma_involution, unvec, vec

__all__ = [
    "RealMat",
    "ComplexMat",
    "TetraEigenResult",
    "TetraSignedSVD",
    "hermitian_eig",
    "general_eig",
    "svd3_rotations",
    "mat_exp",
    "vec",
    "unvec",
    "gamma_involution",
    "rotation_from_quaternion",
    "quaternion_from_rotation",
    "random_rotation",
    "is_rotation",
]
