import argparse
import sys
from typing import Callable, Sequence

from tetrabridge.__env__ import DEFAULT_SEED, DEFAULT_TOLERANCE, __version__
from tetrabridge.api.exceptions import TetraFileFormatError
from tetrabridge.cli.commands import (
    cmd_evolve,
    cmd_lindblad,
    cmd_random,
    cmd_to_channel,
    cmd_validate,
)
from tetrabridge.cli.report import TetraReport
from tetrabridge.logging import logger, setLevel
from tetrabridge.numkernel.exceptions import TetraException

__all__ = [
    "EXIT_OK",
    "EXIT_FAILURE",
    "EXIT_INPUT_ERROR",
    "build_parser",
    "main",
]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2


def _positive_float(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"숫자가 아닙니다: {value!r}")

    if not number > 0:
        raise argparse.ArgumentTypeError(f"양수여야 합니다: {value!r}")

    return number


def _diagnosis(args: argparse.Namespace) -> None:
    from tetrabridge.utils.diagnosis import check

    check()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=DEFAULT_TOLERANCE, help="판정 허용 오차")
    common.add_argument("--json", action="store_true", help="JSON 보고서 출력")
    common.add_argument("--verbose", action="store_true", help="DEBUG 로그 출력")

    parser = argparse.ArgumentParser(prog="tetrabridge", description="고전 확률 행렬과 큐비트 채널 사이의 사면체 대응")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    validate = subparsers.add_parser("validate", parents=[common], help="파일 검증")
    validate.add_argument("path")
    validate.set_defaults(handler=cmd_validate)

    to_channel = subparsers.add_parser("to-channel", parents=[common], help="확률 행렬을 채널로 변환")
    to_channel.add_argument("path")
    to_channel.add_argument("--basis", choices=["orthonormal", "sic"], default="orthonormal")
    to_channel.add_argument("--emit", choices=["choi", "superop", "both"], default="both")
    to_channel.add_argument("--out", default=None, help="채널 보고서 파일 경로")
    to_channel.set_defaults(handler=cmd_to_channel)

    lindblad = subparsers.add_parser("lindblad", parents=[common], help="생성자 판정")
    lindblad.add_argument("path")
    lindblad.add_argument("--time", default="1", help="쉼표로 구분한 시간 목록 (예: 0.1,1,5)")
    lindblad.set_defaults(handler=cmd_lindblad)

    evolve = subparsers.add_parser("evolve", parents=[common], help="고전/양자 궤적 동시 전개")
    evolve.add_argument("q", help="확률 행렬 파일")
    evolve.add_argument("p", help="확률 벡터 파일")
    evolve.add_argument("--steps", type=int, default=10)
    evolve.add_argument("--out", default=None, help="CSV 파일 경로 (없으면 표준 출력)")
    evolve.set_defaults(handler=cmd_evolve)

    random = subparsers.add_parser("random", parents=[common], help="무작위 표본 생성")
    random.add_argument("--count", type=int, default=1)
    random.add_argument("--seed", type=int, default=DEFAULT_SEED)
    random.add_argument("--kind", choices=["doubly", "lambda", "generator"], default="doubly")
    random.add_argument("--out", default=None, help="출력 디렉터리 (없으면 표준 출력에 JSON lines)")
    random.set_defaults(handler=cmd_random)

    diagnosis = subparsers.add_parser("diagnosis", help="버전 및 의존성 정보")
    diagnosis.set_defaults(handler=_diagnosis)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    명령줄 진입점

    Returns:
        0 성공, 1 판정 실패, 2 입력/형식 오류
    """
    args = build_parser().parse_args(argv)

    if getattr(args, "verbose", False):
        setLevel("DEBUG")

    handler: Callable[[argparse.Namespace], TetraReport | None] = args.handler

    try:
        report = handler(args)
    except (OSError, TetraFileFormatError) as e:
        logger.error(f"입력 오류: {e}")
        return EXIT_INPUT_ERROR
    except TetraException as e:
        logger.error(f"판정 실패: {e}")
        return EXIT_FAILURE

    if report is None:
        return EXIT_OK

    # 표준 출력으로 데이터를 내보내는 경우 보고서는 표준 오류로 보냅니다.
    stream = sys.stderr if args.command in ("evolve", "random") and not args.out else sys.stdout
    print(report.render(args.json), file=stream)

    return EXIT_OK if report.ok else EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
