import json
from pathlib import Path
from typing import Any, Literal, get_args

import numpy as np

from tetrabridge.api.exceptions import TetraFileFormatError
from tetrabridge.numkernel.matrix import ComplexMat
from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "FILE_KIND",
    "TetraMatrixFile",
    "load",
    "loads",
    "dumps",
    "save",
]

FILE_KIND = Literal[
    "stochastic_matrix",
    "prob_vec",
    "generator",
    "normal_form",
    "channel_report",
]

COMPLEX_FIELDS = ("superop", "choi")


def _entry_count(kind: str, dim: int) -> int:
    match kind:
        case "stochastic_matrix":
            if dim not in (4, 9):
                raise TetraFileFormatError("확률 행렬 차원은 4 또는 9여야 합니다.", dim=dim)

            return dim * dim
        case "prob_vec":
            if dim != 4:
                raise TetraFileFormatError("확률 벡터 차원은 4여야 합니다.", dim=dim)

            return 4
        case "generator":
            if dim not in (3, 4):
                raise TetraFileFormatError("생성자 차원은 4 (행렬) 또는 3 (h 벡터)이어야 합니다.", dim=dim)

            return 16 if dim == 4 else 3
        case "normal_form":
            if dim != 3:
                raise TetraFileFormatError("정규형 λ 차원은 3이어야 합니다.", dim=dim)

            return 3
        case _:
            raise TetraFileFormatError("알 수 없는 파일 종류입니다.", kind=kind)


@tetra_repr("kind", "dim", "entries", "arrays", "meta", lines="multiple")
class TetraMatrixFile:
    """
    행 우선 숫자 배열과 종류 태그를 담는 JSON 파일

    실수 성분은 `entries`, 복소 성분은 [re, im] 쌍의 배열로 저장합니다.
    숫자는 float repr 로 기록되므로 다시 읽었을 때 비트 단위로 같습니다.
    """

    __slots__ = [
        "kind",
        "dim",
        "entries",
        "arrays",
        "meta",
    ]

    kind: FILE_KIND
    """파일 종류"""
    dim: int
    """차원"""
    entries: np.ndarray | None
    """실수 성분 (종류별 모양)"""
    arrays: dict[str, ComplexMat]
    """복소 행렬 (channel_report)"""
    meta: dict[str, Any]
    """판정 결과 등 부가 정보"""

    def __init__(
        self,
        kind: FILE_KIND,
        dim: int,
        entries: Any | None = None,
        arrays: dict[str, ComplexMat] | None = None,
        meta: dict[str, Any] | None = None,
    ):
        self.kind = kind
        self.dim = dim
        self.entries = None if entries is None else np.asarray(entries, dtype=np.float64)
        self.arrays = arrays or {}
        self.meta = meta or {}

    @property
    def matrix(self) -> np.ndarray:
        """정사각 행렬 모양의 성분"""
        if self.entries is None:
            raise TetraFileFormatError("실수 성분이 없는 파일입니다.", kind=self.kind)

        n = int(round(np.sqrt(self.entries.size)))
        return self.entries.reshape(n, n)

    def payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"kind": self.kind, "dim": self.dim}

        if self.entries is not None:
            payload["entries"] = [float(v) for v in self.entries.reshape(-1)]

        for name, array in self.arrays.items():
            payload[name] = [[float(v.real), float(v.imag)] for v in np.asarray(array).reshape(-1)]

        if self.meta:
            payload["meta"] = self.meta

        return payload


def _parse_complex(name: str, values: Any, dim: int) -> ComplexMat:
    try:
        pairs = np.asarray(values, dtype=np.float64)
    except (TypeError, ValueError):
        raise TetraFileFormatError("복소 성분은 [re, im] 쌍의 배열이어야 합니다.", field=name)

    if pairs.shape != (dim * dim, 2):
        raise TetraFileFormatError("복소 성분 개수가 맞지 않습니다.", field=name, expected=dim * dim, actual=pairs.shape)

    return (pairs[:, 0] + 1j * pairs[:, 1]).reshape(dim, dim)


def loads(text: str) -> TetraMatrixFile:
    """
    JSON 문자열을 읽습니다.

    Raises:
        TetraFileFormatError: JSON 구문, 종류, 차원, 성분 개수 중 하나라도 올바르지 않은 경우
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise TetraFileFormatError("JSON 형식이 올바르지 않습니다.", line=e.lineno, column=e.colno)

    if not isinstance(data, dict):
        raise TetraFileFormatError("최상위 값은 객체여야 합니다.")

    kind = data.get("kind")
    dim = data.get("dim")

    if kind not in get_args(FILE_KIND):
        raise TetraFileFormatError("알 수 없는 파일 종류입니다.", kind=kind)

    if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0:
        raise TetraFileFormatError("차원은 양의 정수여야 합니다.", dim=dim)

    if kind == "channel_report":
        arrays = {name: _parse_complex(name, data[name], dim) for name in COMPLEX_FIELDS if name in data}

        if not arrays:
            raise TetraFileFormatError("채널 보고서에 superop 또는 choi 가 없습니다.")

        return TetraMatrixFile(kind, dim, arrays=arrays, meta=data.get("meta"))

    entries = data.get("entries")

    if not isinstance(entries, list) or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entries):
        raise TetraFileFormatError("entries 는 숫자 배열이어야 합니다.", kind=kind)

    if len(entries) != (expected := _entry_count(kind, dim)):
        raise TetraFileFormatError("성분 개수가 맞지 않습니다.", kind=kind, expected=expected, actual=len(entries))

    values = np.asarray(entries, dtype=np.float64)

    if not np.all(np.isfinite(values)):
        raise TetraFileFormatError("유한하지 않은 성분이 있습니다.", kind=kind)

    return TetraMatrixFile(kind, dim, values, meta=data.get("meta"))


def load(path: str | Path) -> TetraMatrixFile:
    """
    파일을 읽습니다.

    Raises:
        OSError: 파일을 읽을 수 없는 경우
        TetraFileFormatError: 형식이 올바르지 않은 경우
    """
    return loads(Path(path).read_text(encoding="utf-8"))


def dumps(file: TetraMatrixFile, lines: bool = False) -> str:
    """결정적인 JSON 문자열 (키 정렬)"""
    if lines:
        return json.dumps(file.payload(), sort_keys=True, separators=(",", ":"))

    return json.dumps(file.payload(), sort_keys=True, indent=2) + "\n"


def save(file: TetraMatrixFile, path: str | Path) -> None:
    Path(path).write_text(dumps(file), encoding="utf-8", newline="\n")
