import sys
from argparse import Namespace
from pathlib import Path

import numpy as np
import pandas as pd

from tetrabridge.api.channel.base import TetraChannelBase
from tetrabridge.api.channel.pauli import bloch_from_density, density_from_bloch
from tetrabridge.api.channel.qubit import map_to_channel
from tetrabridge.api.exceptions import (
    TetraConsistencyViolationError,
    TetraFileFormatError,
    TetraInvalidProbabilityError,
    TetraNotColumnStochasticError,
    TetraNotDoublyStochasticError,
)
from tetrabridge.api.gmap.basis import sic_basis
from tetrabridge.api.gmap.channel import build_channel
from tetrabridge.api.lindblad.certificate import lindblad_certify, map_generator
from tetrabridge.api.lindblad.consistency import exp_consistency
from tetrabridge.api.lindblad.generator import (
    TetraGenerator,
    generator_normal_matrix,
    random_symmetric_generator,
)
from tetrabridge.api.stochastic.markov import step
from tetrabridge.api.stochastic.matrix import TetraStochasticMatrix, normal_matrix
from tetrabridge.api.stochastic.normal_form import normal_form, normal_is_stochastic
from tetrabridge.api.stochastic.sampling import random_doubly_stochastic
from tetrabridge.api.tetra.bloch import TetraProbVec, in_tetrahedron, sample_tetrahedron
from tetrabridge.cli.files import TetraMatrixFile, dumps, load, save
from tetrabridge.cli.report import TetraReport, digest
from tetrabridge.logging import logger
from tetrabridge.utils.random import as_generator

__all__ = [
    "cmd_validate",
    "cmd_to_channel",
    "cmd_lindblad",
    "cmd_evolve",
    "cmd_random",
]


def _expect(file: TetraMatrixFile, *kinds: str) -> None:
    if file.kind not in kinds:
        raise TetraFileFormatError("이 명령에서 사용할 수 없는 파일 종류입니다.", kind=file.kind, expected=kinds)


def _stochastic_result(q: TetraStochasticMatrix) -> dict:
    result = {
        "stochastic": q.is_stochastic,
        "doubly_stochastic": q.is_doubly_stochastic,
        "symmetric": q.is_symmetric,
        "min_entry": q.min_entry,
        "min_entry_index": q.min_entry_index,
        "column_sum_deviation": q.column_deviation,
        "row_sum_deviation": q.row_deviation,
    }

    if q.min_entry < -q.tol:
        result["offending_entry"] = {"row": q.min_entry_index[0], "column": q.min_entry_index[1], "value": q.min_entry}

    if q.is_doubly_stochastic:
        nf = normal_form(q)
        result["lambda"] = nf.lambdas
        result["lambda_margins"] = nf.membership.margins

    return result


def cmd_validate(args: Namespace) -> TetraReport:
    file = load(args.path)
    tol = args.tol

    match file.kind:
        case "stochastic_matrix":
            if file.dim != 4:
                raise TetraFileFormatError("validate 는 4×4 확률 행렬만 지원합니다.", dim=file.dim)

            q = TetraStochasticMatrix(file.matrix, tol=tol)
            ok, result = q.is_stochastic, _stochastic_result(q)
        case "prob_vec":
            try:
                p = TetraProbVec(file.entries, tol=tol)
            except TetraInvalidProbabilityError as e:
                ok, result = False, {"error": str(e), **e.data}
            else:
                membership = in_tetrahedron(p.bloch, tol)
                ok, result = membership.inside, {"p": p.p, "r": p.bloch.r, "margins": membership.margins}
        case "normal_form":
            inside = normal_is_stochastic(file.entries, tol)
            ok, result = inside, {
                "lambda": file.entries,
                "in_tetrahedron": inside,
                "margins": in_tetrahedron(file.entries, tol).margins,
                "qn": normal_matrix(file.entries),
            }
        case "generator":
            h = _load_generator(file, tol)
            ok, result = h.is_classical_generator, {"classical_generator": h.is_classical_generator, "h": h.h}
        case _:
            if "superop" not in file.arrays:
                raise TetraFileFormatError("superop 이 없는 채널 보고서는 검사할 수 없습니다.")

            channel = TetraChannelBase(file.arrays["superop"])
            ok, result = channel.completely_positive and channel.trace_preserving, {
                "completely_positive": channel.completely_positive,
                "trace_preserving": channel.trace_preserving,
                "unital": channel.unital,
                "choi_eigenvalues": channel.choi_eigenvalues,
            }

    return TetraReport("validate", {args.path: digest(args.path)}, {"tol": tol}, ok, result)


def _load_stochastic(file: TetraMatrixFile) -> np.ndarray:
    _expect(file, "stochastic_matrix", "normal_form")
    return normal_matrix(file.entries) if file.kind == "normal_form" else file.matrix


def _depolarizing_parameter(q: np.ndarray, tol: float) -> float | None:
    p = (4 * q[0, 0] - 1) / 3
    expected = p * np.eye(4) + (1 - p) * np.full((4, 4), 0.25)
    return float(p) if np.max(np.abs(q - expected)) <= tol else None


def cmd_to_channel(args: Namespace) -> TetraReport:
    file = load(args.path)
    q = _load_stochastic(file)
    tol = args.tol
    result: dict = {"basis": args.basis}

    if args.basis == "orthonormal":
        if q.shape != (4, 4):
            raise TetraFileFormatError("orthonormal 기저는 4×4 행렬만 지원합니다.", shape=q.shape)

        channel = map_to_channel(q)

        try:
            nf = normal_form(q)
        except (TetraNotColumnStochasticError, TetraNotDoublyStochasticError):
            pass
        else:
            result["lambda"] = nf.lambdas

        if (p := _depolarizing_parameter(q, tol)) is not None:
            result["depolarizing"] = p
    else:
        d = int(round(np.sqrt(q.shape[0])))
        channel = build_channel(q, sic_basis(d))
        result["dim"] = d

    result.update(
        {
            "completely_positive": channel.completely_positive,
            "trace_preserving": channel.trace_preserving,
            "unital": channel.unital,
            "choi_eigenvalues": channel.choi_eigenvalues,
            "min_choi_eigenvalue": channel.certificate.min_choi_eigenvalue,
        }
    )

    arrays = {}

    if args.emit in ("superop", "both"):
        arrays["superop"] = channel.superop

    if args.emit in ("choi", "both"):
        arrays["choi"] = channel.choi

    output = TetraMatrixFile(
        "channel_report",
        channel.dim * channel.dim,
        arrays=arrays,
        meta={
            "completely_positive": channel.completely_positive,
            "trace_preserving": channel.trace_preserving,
            "unital": channel.unital,
        },
    )

    if args.out:
        save(output, args.out)
        result["output"] = str(args.out)
    else:
        result.update(arrays)

    return TetraReport(
        "to-channel",
        {args.path: digest(args.path)},
        {"tol": tol, "basis": args.basis, "emit": args.emit},
        channel.completely_positive and channel.trace_preserving,
        result,
    )


def _load_generator(file: TetraMatrixFile, tol: float) -> TetraGenerator:
    _expect(file, "generator")
    return TetraGenerator(generator_normal_matrix(file.entries) if file.dim == 3 else file.matrix, tol=tol)


def cmd_lindblad(args: Namespace) -> TetraReport:
    file = load(args.path)
    h = _load_generator(file, args.tol)
    certificate = lindblad_certify(map_generator(h))
    times = [float(t) for t in args.time.split(",") if t.strip()] if args.time else [1.0]
    consistency = []

    if h.is_classical_generator:
        for t in times:
            try:
                report = exp_consistency(h, t)
                consistency.append({"time": t, "deviation": report.deviation, "channel_cp": report.channel_cp, "ok": True})
            except TetraConsistencyViolationError as e:
                consistency.append({"time": t, "ok": False, **e.data})

    result = {
        "classical_generator": h.is_classical_generator,
        "certified": certificate.certified,
        "hermitian_ok": certificate.hermitian_ok,
        "dual_unital_ok": certificate.dual_unital_ok,
        "conditional_positivity_ok": certificate.conditional_positivity_ok,
        "omega_perp_spectrum": certificate.omega_perp_spectrum,
        "exp_consistency": consistency if h.is_classical_generator else "skipped",
    }

    return TetraReport(
        "lindblad",
        {args.path: digest(args.path)},
        {"tol": args.tol, "times": times},
        h.is_classical_generator and certificate.certified and all(c["ok"] for c in consistency),
        result,
    )


def cmd_evolve(args: Namespace) -> TetraReport:
    q_file = load(args.q)
    p_file = load(args.p)
    _expect(p_file, "prob_vec")

    if args.steps < 0:
        raise TetraFileFormatError("단계 수는 0 이상이어야 합니다.", steps=args.steps)

    q = TetraStochasticMatrix(_load_stochastic(q_file), tol=args.tol)
    trajectory = step(q, p_file.entries, args.steps)

    # r 이 Bloch 구 밖이면 ρ 는 양의 연산자가 아니므로 상태 검증 없이 선형으로 전개합니다.
    channel = map_to_channel(q)
    rho = density_from_bloch(trajectory[0].bloch.r)
    rows = []

    for n, p in enumerate(trajectory):
        if n > 0:
            rho = channel(rho)

        r = p.bloch.r
        rows.append([n, *p.p, *r, *bloch_from_density(rho)])

    frame = pd.DataFrame(rows, columns=["step", "p0", "p1", "p2", "p3", "r1", "r2", "r3", "q1", "q2", "q3"])
    gap = float(np.max(np.abs(frame[["r1", "r2", "r3"]].to_numpy() - frame[["q1", "q2", "q3"]].to_numpy())))

    if args.out:
        frame.to_csv(args.out, index=False, lineterminator="\n")
    else:
        frame.to_csv(sys.stdout, index=False, lineterminator="\n")

    logger.debug(f"evolve: {args.steps} steps, bloch gap {gap:.3e}")

    return TetraReport(
        "evolve",
        {args.q: digest(args.q), args.p: digest(args.p)},
        {"tol": args.tol, "steps": args.steps, "out": args.out},
        gap <= 1e-9,
        {"final": trajectory[-1].p, "bloch_gap": gap, "output": args.out},
    )


def _random_file(kind: str, rng: np.random.Generator) -> TetraMatrixFile:
    match kind:
        case "doubly":
            return TetraMatrixFile("stochastic_matrix", 4, random_doubly_stochastic(rng).q.reshape(-1))
        case "lambda":
            return TetraMatrixFile("normal_form", 3, sample_tetrahedron(rng))
        case _:
            return TetraMatrixFile("generator", 4, random_symmetric_generator(rng).h.reshape(-1))


def cmd_random(args: Namespace) -> TetraReport:
    rng = as_generator(args.seed)
    files = [_random_file(args.kind, rng) for _ in range(args.count)]
    outputs = []

    if args.out:
        directory = Path(args.out)
        directory.mkdir(parents=True, exist_ok=True)

        for i, file in enumerate(files):
            path = directory / f"{file.kind}_{i:04d}.json"
            save(file, path)
            outputs.append(str(path))
    else:
        for file in files:
            print(dumps(file, lines=True))

    return TetraReport(
        "random",
        {},
        {"count": args.count, "seed": args.seed, "kind": args.kind, "out": args.out},
        True,
        {"files": outputs} if outputs else {"count": len(files)},
    )
