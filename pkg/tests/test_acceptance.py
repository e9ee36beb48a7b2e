"""Acceptance gate: every verification criterion at full scale.

Each criterion prints a single PASS/FAIL line (bypassing capture, so the
lines appear in any logged run) and then asserts.
"""

import pytest

from sutwist.selftest import ALL_CHECKS


@pytest.mark.parametrize("check", ALL_CHECKS, ids=[c.__name__ for c in ALL_CHECKS])
def test_criterion(check, capfd):
    result = check("full")
    verdict = "PASS" if result.passed else "FAIL"
    with capfd.disabled():
        print(f"[{verdict}] {result.name}: expected {result.expected}, got {result.actual}",
              flush=True)
    assert result.passed, f"{result.name}: expected {result.expected}, got {result.actual}"
