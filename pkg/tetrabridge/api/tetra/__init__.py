from tetrabridge.api.tetra.bloch import (
    TetraBlochVec,
    TetraMembership,
    TetraProbVec,
    bloch_to_prob,
    in_tetrahedron,
    prob_to_bloch,
    sample_tetrahedron,
)
from tetrabridge.api.tetra.vertex import E_KETS, E_VECTORS, vertex_self_check

__all__ = [
    "E_VECTORS",
    "E_KETS",
    "vertex_self_check",
    "TetraProbVec",
    "TetraBlochVec",
    "TetraMembership",
    "prob_to_bloch",
    "bloch_to_prob",
    "in_tetrahedron",
    "sample_tetrahedron",
]
