import sys
from pathlib import Path

import pytest

from helpsolver.solver import Solver
from helpsolver.tables import load_bundled

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def a6():
    return load_bundled("a6")


@pytest.fixture(scope="session")
def a6_solver(a6):
    solver = Solver(a6)
    solver.solve_all()
    return solver


@pytest.fixture(scope="session")
def a6_ordinary_solver(a6):
    solver = Solver(a6, use_brauer=False)
    solver.solve_all()
    return solver


@pytest.fixture(scope="session")
def brute(a6):
    from oracles import BruteForce

    return BruteForce(a6, radius=8)


@pytest.fixture(scope="session")
def brute_ordinary(a6):
    from oracles import BruteForce

    return BruteForce(a6, radius=8, use_brauer=False)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
