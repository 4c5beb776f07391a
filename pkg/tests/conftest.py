import pytest

from jordan_kit import constructions as C

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def sym4():
    return C.symmetric(4)


@pytest.fixture(scope="session")
def sym5():
    return C.symmetric(5)


@pytest.fixture(scope="session")
def sl2f5():
    return C.binary_icosahedral()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
