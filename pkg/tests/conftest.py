import pytest

from fareyseq import core


@pytest.fixture(scope="session")
def registries():
    """Registries for F_1 .. F_40, indexed by order."""
    return {reg.order: reg for reg in core.iter_sequences(40, with_registry=True)}


_ACCEPTANCE: list[tuple[str, str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _ACCEPTANCE.append((name, "PASS" if report.passed else "FAIL", f"{report.duration:.1f}s"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, dur in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {name}  ({dur})")
