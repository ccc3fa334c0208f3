from __future__ import annotations

import pytest

from skewfact.constructors import make

# groups of order at most 10^4 used by the oracle comparisons
SMALL_CORPUS = [
    "S:3", "S:4", "A:4", "A:5", "S:5", "C:6", "C:7", "D:8", "D:12",
    "A:6", "PSL2:5", "PGL2:5", "PSL2:7", "PGL2:7", "GL32", "AGL32",
    "prod(A:4, C:2)", "prod(S:3, C:3)", "PSL2:11", "PGL2:11", "A:7", "M11",
]

# corpus groups with order at most 2000
DIHEDRAL_CORPUS = [s for s in SMALL_CORPUS if s not in ("A:6", "A:7", "M11")]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    return {s: make(s) for s in SMALL_CORPUS}


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
