import pytest

from qcompass import make_params

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record an acceptance line; the test still asserts on its own."""

    def record(label, passed, detail=""):
        _ACCEPTANCE.append((label, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{label}: {'PASS' if passed else 'FAIL'}  {detail}")


@pytest.fixture(params=[0.5, 1.3, 2.1], ids=lambda h: f"h={h}")
def params(request):
    return make_params(h=request.param)


@pytest.fixture
def unit_params():
    return make_params(1.0, 1.0, 1.0, 1.3)
