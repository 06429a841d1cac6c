import pytest

from dirac2d.quantum_numbers import PhysicalParams, enumerate_states, validate_state

_CRITERIA: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def params():
    return PhysicalParams()


@pytest.fixture(scope="session")
def states(params):
    return enumerate_states(3, params)


@pytest.fixture
def state():
    return validate_state


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (passed, detail)."""

    def record(passed: bool, detail: str = "") -> None:
        _CRITERIA.append((request.node.name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
