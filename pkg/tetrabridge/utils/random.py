import numpy as np

from tetrabridge.__env__ import DEFAULT_SEED

__all__ = [
    "as_generator",
]


def as_generator(seed: np.random.Generator | int | None = None) -> np.random.Generator:
    """시드 또는 생성기를 PCG64 기반 numpy 생성기로 변환합니다. (None이면 기본 시드)"""
    if isinstance(seed, np.random.Generator):
        return seed

    return np.random.Generator(np.random.PCG64(DEFAULT_SEED if seed is None else seed))
