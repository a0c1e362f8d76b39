import pytest

from finegrad.catalog import load_catalog


@pytest.fixture(scope="session")
def cat():
    return load_catalog()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "ACCEPTANCE_RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.format_results():
        terminalreporter.write_line(line)
