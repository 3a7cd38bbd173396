from functools import wraps
from io import StringIO
from typing import Any, Iterable, Literal, Protocol, TypeVar

import numpy as np

__all__ = [
    "SINGLE_LINE_MAX_LENGTH",
    "REPR_LINE_MODE",
    "TObject",
    "tetra_repr",
    "custom_repr",
    "remove_custom_repr",
    "sequence_repr",
    "mapping_repr",
    "object_repr",
    "number_repr",
]

SINGLE_LINE_MAX_LENGTH = 100
REPR_PRECISION = 12
"""출력용 유효 숫자"""

REPR_LINE_MODE = Literal["single", "multiple"]

TObject = TypeVar("TObject")


class ReprFunction(Protocol):
    def __call__(self, obj: Any, max_depth: int = 7, depth: int = 0) -> str: ...


custom_reprs: dict[type, ReprFunction] = {}


def custom_repr(cls: type, fn: ReprFunction):
    custom_reprs[cls] = fn


def remove_custom_repr(cls: type):
    custom_reprs.pop(cls, None)


def tetra_repr(
    *fields: str,
    lines: REPR_LINE_MODE | None = None,
    indent: str = "    ",
    max_depth: int = 7,
):
    """지정한 필드를 출력하는 `__repr__`을 클래스에 설정합니다."""

    def decorator(cls: type[TObject]) -> type[TObject]:
        @wraps(cls.__repr__)
        def __repr__(self, _depth: int = 0) -> str:
            return object_repr(
                self,
                fields=fields or None,
                lines=lines,
                indent=indent,
                max_depth=max_depth,
                _depth=_depth,
            )

        __repr__.__doc__ = f"Return a string representation of {cls.__name__} object."
        __repr__.__qualname__ = f"{cls.__qualname__}.__repr__"
        __repr__.__name__ = "__repr__"
        __repr__.__is_tetra_repr__ = True  # type: ignore

        cls.__repr__ = __repr__
        return cls

    return decorator


def _repr(obj: object, indent: str, max_depth: int, _depth: int) -> str:
    if _depth >= max_depth:
        return "..."

    if isinstance(obj, dict):
        return mapping_repr(obj, indent=indent, max_depth=max_depth, _depth=_depth)
    elif isinstance(obj, (list, tuple)):
        return sequence_repr(obj, "()" if isinstance(obj, tuple) else "[]", indent=indent, max_depth=max_depth, _depth=_depth)
    elif (repr_fn := getattr(obj, "__repr__", None)) and getattr(repr_fn, "__is_tetra_repr__", False):
        return repr_fn(_depth=_depth)

    for cls, fn in custom_reprs.items():
        if isinstance(obj, cls):
            return fn(obj, max_depth=max_depth, depth=_depth)

    return repr(obj)


def _join(open_tie: str, close_tie: str, values: list[str], lines: REPR_LINE_MODE | None, indent: str) -> str:
    if lines is None:
        lines = (
            "single"
            if sum(len(v) + 2 for v in values) <= SINGLE_LINE_MAX_LENGTH and not any("\n" in v for v in values)
            else "multiple"
        )

    if lines == "single":
        return f"{open_tie}{', '.join(values)}{close_tie}"

    sb = StringIO()
    sb.write(open_tie)
    sb.write("\n")

    for i, value in enumerate(values):
        if i > 0:
            sb.write(",\n")

        sb.write("\n".join(indent + line for line in value.splitlines()))

    sb.write("\n")
    sb.write(close_tie)

    return sb.getvalue()


def sequence_repr(
    seq: Iterable,
    tie: str = "[]",
    lines: REPR_LINE_MODE | None = None,
    indent: str = "    ",
    max_depth: int = 7,
    _depth: int = 0,
) -> str:
    if len(tie) != 2:
        raise ValueError("tie must be two characters")

    if _depth >= max_depth:
        return f"{tie[0]}...{tie[1]}"

    values = [_repr(v, indent=indent, max_depth=max_depth, _depth=_depth + 1) for v in seq]
    return _join(tie[0], tie[1], values, lines, indent)


def mapping_repr(
    dct: dict,
    lines: REPR_LINE_MODE | None = None,
    indent: str = "    ",
    max_depth: int = 7,
    _depth: int = 0,
) -> str:
    if _depth >= max_depth:
        return "{:...}"

    values = [f"{k!r}: {_repr(v, indent=indent, max_depth=max_depth, _depth=_depth + 1)}" for k, v in dct.items()]
    return _join("{", "}", values, lines, indent)


def object_repr(
    obj: object,
    fields: list[str] | tuple[str, ...] | None = None,
    lines: REPR_LINE_MODE | None = None,
    indent: str = "    ",
    max_depth: int = 7,
    _depth: int = 0,
) -> str:
    name = obj.__class__.__name__

    if _depth >= max_depth:
        return f"{name}(...)"

    if fields is None:
        fields = [f for f in dir(obj) if not f.startswith("_") and not callable(getattr(obj, f, None))]

    values = []

    for field in fields:
        try:
            value = _repr(getattr(obj, field), indent=indent, max_depth=max_depth, _depth=_depth + 1)
        except AttributeError:
            value = "Unbounded"

        values.append(f"{field}={value}")

    return _join(f"{name}(", ")", values, lines, indent)


def number_repr(obj: float | complex | np.number, max_depth: int = 7, depth: int = 0) -> str:
    """부동소수점 잡음을 줄인 숫자 표현을 반환합니다."""
    if isinstance(obj, (complex, np.complexfloating)):
        if abs(obj.imag) <= 10 ** -REPR_PRECISION * max(1.0, abs(obj)):
            return number_repr(obj.real)

        return f"({number_repr(obj.real)}{'+' if obj.imag >= 0 else '-'}{number_repr(abs(obj.imag))}j)"

    if isinstance(obj, (bool, np.bool_)):
        return repr(bool(obj))

    value = float(obj)

    if value == 0:
        return "0.0"

    return repr(float(f"{value:.{REPR_PRECISION}g}"))


def ndarray_repr(obj: np.ndarray, max_depth: int = 7, depth: int = 0) -> str:
    if obj.ndim <= 1:
        return _join("[", "]", [number_repr(v) for v in obj.tolist()], None, "    ")

    rows = [_join("[", "]", [number_repr(v) for v in row], "single", "    ") for row in obj.tolist()]
    return _join("[", "]", rows, "multiple", "    ")


def _number_literal(obj: Any, max_depth: int = 7, depth: int = 0) -> str:
    return number_repr(obj)


custom_repr(np.bool_, lambda obj, max_depth=7, depth=0: repr(bool(obj)))
custom_repr(float, _number_literal)
custom_repr(complex, _number_literal)
custom_repr(np.number, _number_literal)
custom_repr(np.ndarray, ndarray_repr)
