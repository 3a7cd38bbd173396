from tetrabridge.api.channel.base import (
    TetraChannelBase,
    TetraChannelCertificate,
    TetraChannelProtocol,
    choi_from_superop,
    superop_of,
)
from tetrabridge.api.channel.pauli import (
    A_BASIS,
    IDENTITY,
    PAULIS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    bloch_from_density,
    density_from_bloch,
)
from tetrabridge.api.channel.qubit import (
    A_MATRIX,
    TetraChoiResult,
    TetraQubitChannel,
    apply,
    bloch_action,
    certify,
    choi,
    compose,
    map_to_channel,
    pauli_transfer,
)
from tetrabridge.api.channel.spectrum import TetraSpectralReport, spectral_check
from tetrabridge.api.channel.unitary import (
    TetraChannelDecomposition,
    decompose_channel,
    unitary_lift,
    unitary_superop,
)

__all__ = [
    "TetraChannelProtocol",
    "TetraChannelBase",
    "TetraChannelCertificate",
    "TetraQubitChannel",
    "TetraChoiResult",
    "TetraChannelDecomposition",
    "TetraSpectralReport",
    "IDENTITY",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "PAULIS",
    "A_BASIS",
    "A_MATRIX",
    "density_from_bloch",
    "bloch_from_density",
    "superop_of",
    "choi_from_superop",
    "map_to_channel",
    "choi",
    "certify",
    "apply",
    "compose",
    "pauli_transfer",
    "bloch_action",
    "unitary_lift",
    "unitary_superop",
    "decompose_channel",
    "spectral_check",
]
