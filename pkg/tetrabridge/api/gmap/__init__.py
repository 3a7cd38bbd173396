from tetrabridge.api.gmap.basis import (
    SUPPORTED_SIC_DIMENSIONS,
    TetraBasisPair,
    orthonormal_basis,
    sic_basis,
    validate_basis,
)
from tetrabridge.api.gmap.channel import TetraGeneralChannel, build_channel, compose

__all__ = [
    "SUPPORTED_SIC_DIMENSIONS",
    "TetraBasisPair",
    "TetraGeneralChannel",
    "validate_basis",
    "sic_basis",
    "orthonormal_basis",
    "build_channel",
    "compose",
]
