import pytest

from gencomplexity.quantum import clear_caches

ACCEPTANCE_LINES = []


@pytest.fixture
def fresh_caches():
    clear_caches()
    yield
    clear_caches()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
