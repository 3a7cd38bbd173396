from tetrabridge.api.stochastic.affine import TetraAffineForm, from_affine, to_affine
from tetrabridge.api.stochastic.markov import spectrum, step
from tetrabridge.api.stochastic.matrix import (
    TetraStochasticMatrix,
    depolarizing,
    embed_rotation,
    normal_matrix,
    to_configuration,
    to_e_basis,
    validate,
)
from tetrabridge.api.stochastic.normal_form import (
    TetraNormalForm,
    normal_form,
    normal_is_stochastic,
)
from tetrabridge.api.stochastic.sampling import random_doubly_stochastic

__all__ = [
    "TetraStochasticMatrix",
    "TetraAffineForm",
    "TetraNormalForm",
    "validate",
    "to_affine",
    "from_affine",
    "normal_form",
    "normal_is_stochastic",
    "spectrum",
    "step",
    "random_doubly_stochastic",
    "depolarizing",
    "normal_matrix",
    "embed_rotation",
    "to_configuration",
    "to_e_basis",
]
