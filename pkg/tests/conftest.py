import pytest

from liekoszul import charlib

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache(tmp_path_factory):
    charlib.set_cache_dir(tmp_path_factory.mktemp("charcache"))
    yield
    charlib.set_cache_dir(None)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
