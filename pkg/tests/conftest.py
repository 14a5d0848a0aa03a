import time
from contextlib import contextmanager

import pytest

_ACCEPTANCE: list[tuple[str, str, float]] = []


@pytest.fixture
def criterion():
    """Time a criterion body and record one pass/fail line for the summary."""

    @contextmanager
    def run(label: str, budget: float):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < budget, f"{label}: {elapsed:.2f}s over the {budget}s budget"
            ok = True
        finally:
            _ACCEPTANCE.append((label, "PASS" if ok else "FAIL", time.perf_counter() - start))

    return run


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, elapsed in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {label}  ({elapsed:.2f}s)")
