import os
import sys

DEFAULT_TOLERANCE: float = 1e-9
"""
기하/분류 판정 기본 허용 오차

환경 변수 `TETRA_BRIDGE_TOL`로 재정의할 수 있습니다.
"""
EXACT_TOLERANCE = 1e-10
"""재구성, 직교성 등 수치 비교 절대 허용 오차"""
CP_TOLERANCE = 1e-10
"""Choi 행렬 고유값 하한"""
PROBABILITY_SUM_TOLERANCE = 1e-12
"""확률 벡터 합 허용 오차"""

JACOBI_MAX_SWEEPS = 100
JACOBI_RELATIVE_OFFDIAG = 1e-13

EXPM_TRUNCATION = 1e-16
EXPM_MAX_NORM = 1e6

SAMPLER_MAX_ATTEMPTS = 100_000
GRAM_CONDITION_WARNING = 1e8

DEFAULT_SEED = 0
RANDOM_GENERATOR = "numpy.random.PCG64"
"""모든 난수는 명시적 시드로 초기화한 numpy PCG64 생성기에서 만들어집니다."""

_tol = os.environ.get("TETRA_BRIDGE_TOL")

if _tol:
    try:
        DEFAULT_TOLERANCE = float(_tol)
    except ValueError:
        raise RuntimeError(f"TETRA_BRIDGE_TOL 값이 올바르지 않습니다. ({_tol!r})")

    if not DEFAULT_TOLERANCE > 0:
        raise RuntimeError(f"TETRA_BRIDGE_TOL 값은 양수여야 합니다. ({_tol!r})")


VERSION = "{{VERSION_PLACEHOLDER}}"  # This is automatically set via a tag in GitHub Workflow.
VERSION = "1+dev" if "VERSION_PLACEHOLDER" in VERSION else VERSION

__package_name__ = "python-tetrabridge"
__version__ = VERSION
__license__ = "MIT"

if sys.version_info < (3, 10):
    raise RuntimeError(f"TetraBridge에는 Python 3.10 이상이 필요합니다. (Current: {sys.version})")
