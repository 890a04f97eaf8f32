import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from builders import cpn  # noqa: E402

from txygenus.fixedpoints import FixedPointData  # noqa: E402

_acceptance: dict[int, list[bool]] = {}


def pytest_configure(config):
    for n in range(1, 11):
        config.addinivalue_line("markers", f"criterion_{n}: acceptance criterion {n}")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key in report.keywords:
        if key.startswith("criterion_"):
            _acceptance.setdefault(int(key.split("_")[1]), []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        ok = all(_acceptance[n])
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}")


@pytest.fixture
def cp1() -> FixedPointData:
    return FixedPointData.from_pairs(1, [([1], 1), ([-1], 1)])


@pytest.fixture
def cp2() -> FixedPointData:
    return FixedPointData.from_pairs(2, [([1, 2], 1), ([-1, 1], 1), ([-2, -1], 1)])


@pytest.fixture
def single_point() -> FixedPointData:
    return FixedPointData.from_pairs(1, [([1], 1)])


@pytest.fixture
def cancelling_pair() -> FixedPointData:
    return FixedPointData.from_pairs(1, [([1], 1), ([1], -1)])


@pytest.fixture
def empty2() -> FixedPointData:
    return FixedPointData(2, ())


@pytest.fixture(params=[1, 2, 3, 4], ids=lambda n: f"CP{n}")
def golden(request) -> FixedPointData:
    return cpn(request.param)
