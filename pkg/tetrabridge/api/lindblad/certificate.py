from typing import Any

import numpy as np

from tetrabridge.__env__ import CP_TOLERANCE
from tetrabridge.api.channel.pauli import IDENTITY, PAULIS
from tetrabridge.api.channel.qubit import A_MATRIX
from tetrabridge.api.lindblad.generator import TetraGenerator
from tetrabridge.logging import logger
from tetrabridge.numkernel.eigen import hermitian_eig
from tetrabridge.numkernel.exceptions import TetraNotHermitianError
from tetrabridge.numkernel.matrix import ComplexMat, as_complex_matrix
from tetrabridge.numkernel.vectorize import gamma_involution, omega
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraLindbladCertificate",
    "map_generator",
    "omega_perp",
    "lindblad_certify",
]

HERMITICITY_TOLERANCE = 1e-10
DUAL_TOLERANCE = 1e-10


def map_generator(h: TetraGenerator | Any) -> ComplexMat:
    """
    E_H = ½ 𝒜 H 𝒜†

    E_Q 와 같은 선형 구성이며 H_n 에 대해서는 E_{H_n}(ρ) = ½ Σ h_i tr(ρσ_i)σ_i 입니다.
    """
    if not isinstance(h, TetraGenerator):
        h = TetraGenerator(h)

    return A_MATRIX @ h.h @ A_MATRIX.conj().T / 2


def omega_perp(d: int = 2) -> ComplexMat:
    """ω⊥ = I − |ω⟩⟨ω|"""
    w = omega(d)
    return np.eye(d * d, dtype=np.complex128) - np.outer(w, w.conj())


@tetra_repr(
    "certified",
    "omega_perp_spectrum",
    "hermitian_ok",
    "dual_unital_ok",
    "conditional_positivity_ok",
    "hermiticity_deviation",
    "dual_deviation",
    lines="multiple",
)
class TetraLindbladCertificate:
    """Lindblad 생성자 판정 결과"""

    __slots__ = [
        "omega_perp_spectrum",
        "hermitian_ok",
        "dual_unital_ok",
        "conditional_positivity_ok",
        "hermiticity_deviation",
        "dual_deviation",
    ]

    omega_perp_spectrum: np.ndarray | None
    """ω⊥·L̂^Γ·ω⊥ 고유값 (내림차순)"""
    hermitian_ok: bool
    """에르미트 연산자를 에르미트 연산자로 보내는지 여부"""
    dual_unital_ok: bool
    """L*(I) = 0 여부"""
    conditional_positivity_ok: bool
    """ω⊥·L̂^Γ·ω⊥ ≥ 0 여부"""
    hermiticity_deviation: float
    dual_deviation: float

    def __init__(
        self,
        omega_perp_spectrum: np.ndarray | None,
        hermitian_ok: bool,
        dual_unital_ok: bool,
        conditional_positivity_ok: bool,
        hermiticity_deviation: float,
        dual_deviation: float,
    ):
        self.omega_perp_spectrum = omega_perp_spectrum
        self.hermitian_ok = hermitian_ok
        self.dual_unital_ok = dual_unital_ok
        self.conditional_positivity_ok = conditional_positivity_ok
        self.hermiticity_deviation = hermiticity_deviation
        self.dual_deviation = dual_deviation

    @property
    def certified(self) -> bool:
        return self.hermitian_ok and self.dual_unital_ok and self.conditional_positivity_ok

    def __bool__(self) -> bool:
        return self.certified


def lindblad_certify(l_superop: Any, tol: float = CP_TOLERANCE) -> TetraLindbladCertificate:
    """
    생성자 L 이 Lindblad 형식인지 판정합니다.

    (a) I, σ_1, σ_2, σ_3 의 상이 에르미트인지
    (b) vec(I)ᵀ·L̂ = 0 (쌍대 사상이 I를 0으로 보냄 ⇔ tr L(ρ) = 0)
    (c) ω⊥·L̂^Γ·ω⊥ 의 고유값이 모두 −tol 이상인지

    대칭 생성자에서는 (b)와 L(I) = 0 이 같은 조건이 됩니다.
    """
    l_superop = as_complex_matrix(l_superop, shape=(4, 4))
    scale = max(1.0, float(np.max(np.abs(l_superop))))

    hermiticity_deviation = 0.0

    for p in (IDENTITY, *PAULIS):
        out = (l_superop @ p.reshape(-1)).reshape(2, 2)
        hermiticity_deviation = max(hermiticity_deviation, float(np.max(np.abs(out - out.conj().T))))

    dual_deviation = float(np.max(np.abs(IDENTITY.reshape(-1) @ l_superop)))

    projector = omega_perp(2)
    reduced = projector @ gamma_involution(l_superop) @ projector

    try:
        spectrum = hermitian_eig(reduced).eigenvalues
        conditional_positivity_ok = bool(spectrum[-1] >= -tol)
    except TetraNotHermitianError:
        spectrum = None
        conditional_positivity_ok = False

    certificate = TetraLindbladCertificate(
        omega_perp_spectrum=spectrum,
        hermitian_ok=hermiticity_deviation <= HERMITICITY_TOLERANCE * scale,
        dual_unital_ok=dual_deviation <= DUAL_TOLERANCE * scale,
        conditional_positivity_ok=conditional_positivity_ok,
        hermiticity_deviation=hermiticity_deviation,
        dual_deviation=dual_deviation,
    )

    logger.debug(f"Lindblad 판정: certified={certificate.certified}, spectrum={spectrum}")

    return certificate
