import importlib

import pytest

from negamma import _pykernels

try:
    _compiled = importlib.import_module("negamma._kernels")
except ImportError:
    _compiled = None


@pytest.fixture(params=["python", "cython"])
def kmod(request):
    """Each kernel backend in turn; the compiled one is skipped if it was not built."""
    if request.param == "python":
        return _pykernels
    if _compiled is None:
        pytest.skip("compiled kernels not built")
    return _compiled


def rel(x, y):
    return abs(x - y) / abs(y)


ACCEPTANCE = {}


@pytest.fixture
def record():
    """Store one pass/fail line per acceptance criterion for the terminal summary."""

    def _record(number, passed, detail):
        ACCEPTANCE[number] = (passed, detail)
        print(f"ACCEPTANCE {number}: {'PASS' if passed else 'FAIL'} ({detail})")

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
