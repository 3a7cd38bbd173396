import hashlib
import json
from pathlib import Path
from typing import Any

import numpy as np

from tetrabridge.utils.repr import tetra_repr

__all__ = [
    "TetraReport",
    "jsonable",
    "digest",
]


def jsonable(value: Any) -> Any:
    """numpy 값과 복소수를 JSON 호환 값으로 변환합니다. (복소수는 [re, im])"""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}

    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]

    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())

    if isinstance(value, (bool, np.bool_)):
        return bool(value)

    if isinstance(value, (int, np.integer)):
        return int(value)

    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]

    if isinstance(value, (float, np.floating)):
        return float(value)

    return value


def digest(path: str | Path) -> str:
    """입력 파일 SHA-256 앞 16자리"""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:16]


@tetra_repr("command", "inputs", "options", "ok", "result", lines="multiple")
class TetraReport:
    """명령 실행 결과 보고서"""

    __slots__ = [
        "command",
        "inputs",
        "options",
        "ok",
        "result",
    ]

    command: str
    """실행한 명령"""
    inputs: dict[str, str]
    """입력 파일 경로와 요약값"""
    options: dict[str, Any]
    """사용한 옵션 (허용 오차 포함)"""
    ok: bool
    """판정 성공 여부"""
    result: dict[str, Any]
    """판정 결과와 근거"""

    def __init__(self, command: str, inputs: dict[str, str], options: dict[str, Any], ok: bool, result: dict[str, Any]):
        self.command = command
        self.inputs = inputs
        self.options = options
        self.ok = ok
        self.result = result

    def to_json(self) -> str:
        return json.dumps(
            jsonable(
                {
                    "command": self.command,
                    "inputs": self.inputs,
                    "options": self.options,
                    "ok": self.ok,
                    "result": self.result,
                }
            ),
            sort_keys=True,
            indent=2,
        )

    def render(self, as_json: bool = False) -> str:
        return self.to_json() if as_json else repr(self)
