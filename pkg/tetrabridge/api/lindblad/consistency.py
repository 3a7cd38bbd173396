from typing import Any

import numpy as np

from tetrabridge.__env__ import DEFAULT_TOLERANCE
from tetrabridge.api.channel.base import TetraChannelBase
from tetrabridge.api.channel.qubit import map_to_channel
from tetrabridge.api.exceptions import TetraConsistencyViolationError
from tetrabridge.api.lindblad.generator import TetraGenerator
from tetrabridge.api.lindblad.certificate import lindblad_certify, map_generator
from tetrabridge.api.stochastic.matrix import TetraStochasticMatrix
from tetrabridge.logging import logger
from tetrabridge.numkernel.expm import mat_exp
from tetrabridge.numkernel.matrix import ComplexMat, RealMat
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraExpConsistencyReport",
    "TetraSemigroupReport",
    "exp_consistency",
    "semigroup_check",
]

EXP_TOLERANCE = 1e-8
SEMIGROUP_TOLERANCE = 1e-9


@tetra_repr("time", "deviation", "certified", "q_stochastic", "channel_cp", "q", lines="multiple")
class TetraExpConsistencyReport:
    """E_{exp(tH)} 와 exp(t·E_H) 비교 결과"""

    __slots__ = [
        "time",
        "q",
        "channel",
        "deviation",
        "certified",
        "q_stochastic",
        "channel_cp",
    ]

    time: float
    q: RealMat
    """exp(tH)"""
    channel: ComplexMat
    """exp(t·L_H)"""
    deviation: float
    """‖E_{exp(tH)} − exp(t·L_H)‖_F"""
    certified: bool
    """고전 생성자이며 E_H 가 Lindblad 판정을 통과했는지 여부"""
    q_stochastic: bool
    channel_cp: bool

    def __init__(
        self,
        time: float,
        q: RealMat,
        channel: ComplexMat,
        deviation: float,
        certified: bool,
        q_stochastic: bool,
        channel_cp: bool,
    ):
        self.time = time
        self.q = q
        self.channel = channel
        self.deviation = deviation
        self.certified = certified
        self.q_stochastic = q_stochastic
        self.channel_cp = channel_cp


def exp_consistency(h: TetraGenerator | Any, time: float) -> TetraExpConsistencyReport:
    """
    Q = e^{tH} 이면 E_Q = e^{t·E_H} 임을 확인합니다.

    H_n(−1, −1, −1) 은 |e_μ⟩ 기저에서 diag(0, −1, −1, −1) 이므로
    e^{tH_n} 는 p = e^{−t} 인 탈분극 행렬입니다.

    비대각 성분이 음이 아니어도 E_H 가 Lindblad 생성자가 아닐 수 있습니다.
    (예: 두 꼭짓점을 맞바꾸는 H = P − I) 확률성/완전 양성 검사는 H 가 고전 생성자이고
    E_H 가 Lindblad 판정을 통과한 경우에만 적용합니다.

    Raises:
        TetraConsistencyViolationError: 두 지수가 1e-8 이상 다르거나, 판정을 통과한 생성자인데
            e^{tH} 가 확률 행렬이 아니거나 e^{t·E_H} 가 완전 양성이 아닌 경우
    """
    if not isinstance(h, TetraGenerator):
        h = TetraGenerator(h)

    if time < 0:
        raise ValueError(f"시간은 0 이상이어야 합니다. ({time})")

    l_superop = map_generator(h)
    certified = h.is_classical_generator and lindblad_certify(l_superop).certified

    q = mat_exp(time * h.h).real
    channel = mat_exp(time * l_superop)

    deviation = float(np.linalg.norm(map_to_channel(q).superop - channel))
    q_stochastic = TetraStochasticMatrix(q, tol=DEFAULT_TOLERANCE).is_stochastic
    channel_cp = TetraChannelBase(channel).completely_positive

    if deviation > EXP_TOLERANCE:
        raise TetraConsistencyViolationError("e^{tH} 와 e^{t·E_H} 가 일치하지 않습니다.", time=time, deviation=deviation)

    if certified and not (q_stochastic and channel_cp):
        raise TetraConsistencyViolationError(
            "판정을 통과한 생성자의 지수가 확률 행렬/완전 양성 사상이 아닙니다.",
            time=time,
            q_stochastic=q_stochastic,
            channel_cp=channel_cp,
        )

    if not certified:
        logger.warning("판정을 통과하지 못한 생성자의 지수를 비교합니다. (확률성/완전 양성은 보장되지 않음)")

    return TetraExpConsistencyReport(time, q, channel, deviation, certified, q_stochastic, channel_cp)


@tetra_repr("s", "t", "classical_deviation", "quantum_deviation", lines="single")
class TetraSemigroupReport:
    """e^{(s+t)H} = e^{sH}·e^{tH} 검사 결과"""

    __slots__ = [
        "s",
        "t",
        "classical_deviation",
        "quantum_deviation",
    ]

    s: float
    t: float
    classical_deviation: float
    quantum_deviation: float

    def __init__(self, s: float, t: float, classical_deviation: float, quantum_deviation: float):
        self.s = s
        self.t = t
        self.classical_deviation = classical_deviation
        self.quantum_deviation = quantum_deviation


def semigroup_check(h: TetraGenerator | Any, s: float, t: float) -> TetraSemigroupReport:
    """
    반군 성질을 고전/양자 양쪽에서 확인합니다.

    양자 쪽은 합성 준동형 E_{Q1·Q2} = E_{Q1}·E_{Q2} 를 통해 비교합니다.

    Raises:
        TetraConsistencyViolationError: 어느 한쪽이 1e-9 이상 어긋나는 경우
    """
    if not isinstance(h, TetraGenerator):
        h = TetraGenerator(h)

    q_s = mat_exp(s * h.h).real
    q_t = mat_exp(t * h.h).real
    q_st = mat_exp((s + t) * h.h).real

    classical = float(np.linalg.norm(q_st - q_s @ q_t))
    quantum = float(
        np.linalg.norm(map_to_channel(q_st).superop - map_to_channel(q_s).superop @ map_to_channel(q_t).superop)
    )

    if max(classical, quantum) > SEMIGROUP_TOLERANCE:
        raise TetraConsistencyViolationError(
            "반군 성질이 성립하지 않습니다.",
            s=s,
            t=t,
            classical_deviation=classical,
            quantum_deviation=quantum,
        )

    return TetraSemigroupReport(s, t, classical, quantum)
