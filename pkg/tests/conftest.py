import pytest

from tlrep.orbits import AlgebraCtx, Family


def ctx_of(family: str, n: int, ell: int) -> AlgebraCtx:
    return AlgebraCtx(Family(family), n, ell)


@pytest.fixture
def dtl12():
    return ctx_of("dtl", 12, 4)


@pytest.fixture
def tl12():
    return ctx_of("tl", 12, 4)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
