from tetrabridge.api.lindblad.certificate import (
    TetraLindbladCertificate,
    lindblad_certify,
    map_generator,
    omega_perp,
)
from tetrabridge.api.lindblad.consistency import (
    TetraExpConsistencyReport,
    TetraSemigroupReport,
    exp_consistency,
    semigroup_check,
)
from tetrabridge.api.lindblad.generator import (
    TetraGenerator,
    TetraGeneratorNormalForm,
    gen_normal_form,
    generator_normal_matrix,
    is_classical_generator,
    random_symmetric_generator,
)

__all__ = [
    "TetraGenerator",
    "TetraGeneratorNormalForm",
    "TetraLindbladCertificate",
    "TetraExpConsistencyReport",
    "TetraSemigroupReport",
    "generator_normal_matrix",
    "gen_normal_form",
    "is_classical_generator",
    "map_generator",
    "omega_perp",
    "lindblad_certify",
    "exp_consistency",
    "semigroup_check",
    "random_symmetric_generator",
]
