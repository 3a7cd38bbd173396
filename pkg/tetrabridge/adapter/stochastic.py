from typing import TYPE_CHECKING, Any, Protocol, runtime_checkable

import numpy as np

if TYPE_CHECKING:
    from tetrabridge.api.channel.qubit import TetraQubitChannel
    from tetrabridge.api.stochastic.affine import TetraAffineForm
    from tetrabridge.api.stochastic.normal_form import TetraNormalForm
    from tetrabridge.api.tetra.bloch import TetraProbVec

__all__ = [
    "TetraStochasticMatrixProtocol",
    "TetraStochasticMatrixMixin",
]


@runtime_checkable
class TetraStochasticMatrixProtocol(Protocol):
    """사면체 확률 행렬 프로토콜"""

    def affine(self) -> "TetraAffineForm":
        """
        아핀 전개 (t, Λ)

        Raises:
            TetraNotColumnStochasticError: 열의 합이 1이 아닌 경우
        """
        ...

    def normal_form(self) -> "TetraNormalForm":
        """
        정규형 Q = S·Q_n·T

        Raises:
            TetraNotDoublyStochasticError: t ≠ 0 인 경우
        """
        ...

    def spectrum(self) -> np.ndarray:
        """고유값 4개"""
        ...

    def step(self, p: "TetraProbVec | Any", n: int = 1) -> list["TetraProbVec"]:
        """
        마르코프 전개 [P_0, ..., P_n]

        Raises:
            TetraNotColumnStochasticError: 확률 행렬이 아닌 경우
        """
        ...

    def channel(self) -> "TetraQubitChannel":
        """대응하는 큐비트 사상 E_Q"""
        ...


class TetraStochasticMatrixMixin:
    """사면체 확률 행렬 기능 Mixin"""

    def affine(self) -> "TetraAffineForm":
        from tetrabridge.api.stochastic.affine import to_affine

        return to_affine(self)  # type: ignore

    def normal_form(self) -> "TetraNormalForm":
        from tetrabridge.api.stochastic.normal_form import normal_form

        return normal_form(self)  # type: ignore

    def spectrum(self) -> np.ndarray:
        from tetrabridge.api.stochastic.markov import spectrum

        return spectrum(self)  # type: ignore

    def step(self, p: "TetraProbVec | Any", n: int = 1) -> list["TetraProbVec"]:
        from tetrabridge.api.stochastic.markov import step

        return step(self, p, n)  # type: ignore

    def channel(self) -> "TetraQubitChannel":
        from tetrabridge.api.channel.qubit import map_to_channel

        return map_to_channel(self)  # type: ignore
