"""The acceptance suite: one test per criterion, one PASS/FAIL line per criterion.

Criteria 3, 5 and 8 compare against published values that the computation
contradicts; they are expected to fail (analysis in the decisions ledger).
"""
import pytest

from reflex.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    if not result.ok:
        pytest.fail(result.line(), pytrace=False)
