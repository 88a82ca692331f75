"""End-to-end acceptance criteria, each at its own tolerance and time limit."""
import pytest

from indmod.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda n: f"criterion_{n}")
def test_criterion(number, report_line):
    result = run_criterion(number)
    print(result.line())
    report_line(result.line())
    assert result.ok, result.detail
    assert result.elapsed < result.limit, f"took {result.elapsed:.2f}s, limit {result.limit}s"


def test_quick_mode_agrees():
    for number in (1, 2, 3):
        assert run_criterion(number, quick=True, seed=1).passed
