from fractions import Fraction

import pytest

from limwork import PointSet, generate
from limwork.workspace import collecting_stream

RIGHT_TRIANGLE = [(0, 0), (4, 0), (0, 4)]
EMST_TRIANGLE = [(0, 0), (2, 0), (Fraction(11, 10), 2)]
SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def collect(algorithm, *args, **kwargs) -> list:
    stream, out = collecting_stream()
    algorithm(*args, stream, **kwargs)
    return out


def instance(n: int, seed: int, guard: str = "general") -> PointSet:
    return generate(n, seed, guard)


@pytest.fixture
def right_triangle():
    return PointSet(RIGHT_TRIANGLE)


@pytest.fixture
def emst_triangle():
    return PointSet(EMST_TRIANGLE)


_VERDICTS: list[str] = []


@pytest.fixture
def verdict():
    """Record one ``criterion k: PASS|FAIL`` line; all are echoed after the run."""

    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(line)
        _VERDICTS.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_VERDICTS, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
