"""Shared test helpers, including the acceptance-criteria reporter."""

from __future__ import annotations

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


def record_criterion(number: int, description: str, passed: bool) -> bool:
    """Register one acceptance criterion outcome and echo a status line."""
    ACCEPTANCE_RESULTS[number] = (description, passed)
    print(f"ACCEPTANCE {number}: {'PASS' if passed else 'FAIL'} - {description}")
    return passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        description, passed = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(
            f"ACCEPTANCE {number}: {'PASS' if passed else 'FAIL'} - {description}")
