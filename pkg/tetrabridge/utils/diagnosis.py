import importlib.metadata as metadata
import platform
import re

import tetrabridge.__env__ as env

__all__ = [
    "check",
]


def check() -> None:
    """버전, 플랫폼, 의존성 설치 상태를 출력합니다."""
    uname = platform.uname()

    print(f"Version: TetraBridge/{env.__version__}")
    print(f"Python: {platform.python_implementation()} {platform.python_version()}")
    print(f"System: {uname.system} {uname.release} [{uname.machine}]")
    print(f"Random: {env.RANDOM_GENERATOR} (default seed {env.DEFAULT_SEED})")
    print(f"Tolerance: {env.DEFAULT_TOLERANCE:g}")
    print()
    print("Installed Packages:", end=" ")

    try:
        requires = metadata.distribution(env.__package_name__).requires
    except metadata.PackageNotFoundError:
        print("Package Not Found")
        return

    if not requires:
        print("No Dependencies")
        return

    print()

    for requirement in requires:
        match = re.match(r"^\s*([A-Za-z0-9_.\-]+)\s*(.*)$", requirement)

        if not match:
            continue

        package, spec = match.groups()
        l = (30 - len(package)) // 2
        r = 30 - len(package) - l

        print(f"{'=' * l} {package} {'=' * r}\nRequired: {spec or '*'}\nInstalled: ", end="")

        try:
            print(metadata.version(package))
        except metadata.PackageNotFoundError:
            print("Not Found")

    print("=" * 32)
    print()


if __name__ == "__main__":
    check()
