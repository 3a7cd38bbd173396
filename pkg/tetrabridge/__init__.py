from tetrabridge.__env__ import __license__, __package_name__, __version__
from tetrabridge.api.channel import (
    apply,
    bloch_action,
    certify,
    choi,
    decompose_channel,
    map_to_channel,
    pauli_transfer,
    spectral_check,
    unitary_lift,
)
from tetrabridge.api.gmap import build_channel, orthonormal_basis, sic_basis, validate_basis
from tetrabridge.api.lindblad import (
    exp_consistency,
    gen_normal_form,
    is_classical_generator,
    lindblad_certify,
    map_generator,
    random_symmetric_generator,
    semigroup_check,
)
from tetrabridge.api.stochastic import (
    depolarizing,
    normal_form,
    normal_is_stochastic,
    random_doubly_stochastic,
    spectrum,
    step,
    to_affine,
    validate,
)
from tetrabridge.api.tetra import E_VECTORS, bloch_to_prob, in_tetrahedron, prob_to_bloch
from tetrabridge.exceptions import *
from tetrabridge.types import *

__all__ = [
    "__version__",
    "__package_name__",
    "__license__",
    ################################
    ##          Exceptions        ##
    ################################
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
    ################################
    ##            Types           ##
    ################################
    "RealMat",
    "ComplexMat",
    "TetraProbVec",
    "TetraBlochVec",
    "TetraMembership",
    "TetraStochasticMatrix",
    "TetraAffineForm",
    "TetraNormalForm",
    "TetraQubitChannel",
    "TetraChannelDecomposition",
    "TetraGenerator",
    "TetraLindbladCertificate",
    "TetraBasisPair",
    "TetraGeneralChannel",
    ################################
    ##             API            ##
    ################################
    "E_VECTORS",
    "prob_to_bloch",
    "bloch_to_prob",
    "in_tetrahedron",
    "validate",
    "to_affine",
    "normal_form",
    "normal_is_stochastic",
    "spectrum",
    "step",
    "random_doubly_stochastic",
    "depolarizing",
    "map_to_channel",
    "choi",
    "certify",
    "unitary_lift",
    "decompose_channel",
    "spectral_check",
    "apply",
    "pauli_transfer",
    "bloch_action",
    "gen_normal_form",
    "is_classical_generator",
    "map_generator",
    "lindblad_certify",
    "exp_consistency",
    "semigroup_check",
    "random_symmetric_generator",
    "sic_basis",
    "orthonormal_basis",
    "validate_basis",
    "build_channel",
]
