import sys
from pathlib import Path

import pytest

# make the oracles importable as a plain module
sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record one pass/fail line for an acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        _ACCEPTANCE[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[number])
