from tetrabridge.adapter.stochastic import TetraStochasticMatrixProtocol
from tetrabridge.api.channel.base import (
    TetraChannelCertificate,
    TetraChannelProtocol,
)
from tetrabridge.api.channel.qubit import TetraChoiResult, TetraQubitChannel
from tetrabridge.api.channel.spectrum import TetraSpectralReport
from tetrabridge.api.channel.unitary import TetraChannelDecomposition
from tetrabridge.api.gmap.basis import TetraBasisPair
from tetrabridge.api.gmap.channel import TetraGeneralChannel
from tetrabridge.api.lindblad.certificate import TetraLindbladCertificate
from tetrabridge.api.lindblad.consistency import (
    TetraExpConsistencyReport,
    TetraSemigroupReport,
)
from tetrabridge.api.lindblad.generator import TetraGenerator, TetraGeneratorNormalForm
from tetrabridge.api.stochastic.affine import TetraAffineForm
from tetrabridge.api.stochastic.matrix import TetraStochasticMatrix
from tetrabridge.api.stochastic.normal_form import TetraNormalForm
from tetrabridge.api.tetra.bloch import TetraBlochVec, TetraMembership, TetraProbVec
from tetrabridge.numkernel.eigen import TetraEigenResult
from tetrabridge.numkernel.matrix import ComplexMat, RealMat
from tetrabridge.numkernel.svd import TetraSignedSVD

__all__ = [
    ################################
    ##          Numkernel         ##
    ################################
    "RealMat",
    "ComplexMat",
    "TetraEigenResult",
    "TetraSignedSVD",
    ################################
    ##            Tetra           ##
    ################################
    "TetraProbVec",
    "TetraBlochVec",
    "TetraMembership",
    ################################
    ##         Stochastic         ##
    ################################
    "TetraStochasticMatrixProtocol",
    "TetraStochasticMatrix",
    "TetraAffineForm",
    "TetraNormalForm",
    ################################
    ##           Channel          ##
    ################################
    "TetraChannelProtocol",
    "TetraChannelCertificate",
    "TetraQubitChannel",
    "TetraChoiResult",
    "TetraChannelDecomposition",
    "TetraSpectralReport",
    ################################
    ##          Lindblad          ##
    ################################
    "TetraGenerator",
    "TetraGeneratorNormalForm",
    "TetraLindbladCertificate",
    "TetraExpConsistencyReport",
    "TetraSemigroupReport",
    ################################
    ##            Gmap            ##
    ################################
    "TetraBasisPair",
    "TetraGeneralChannel",
]
