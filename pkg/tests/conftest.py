import pytest

from dtdesc.enumerate import descendants_up_to

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def db12():
    return descendants_up_to(12)


@pytest.fixture(scope="session")
def db14():
    return descendants_up_to(14)


@pytest.fixture(scope="session")
def acceptance_lines():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
