"""Top-level acceptance gate: the nine release criteria at full depth.

Each test prints one pass/fail line (visible under pytest -s or in the
captured output of a failing run) and asserts the criterion held.  The
same checks back the `coinweigh selftest` subcommand; here they run at
their full advertised scopes, so this module is the slowest in the suite
(the k=6 construction grid alone builds ~8000 schemes).
"""

import pytest

from coinweigh.selftest import CRITERIA, CriterionResult

# full scope per criterion; the selftest CLI trims these for quick runs
FULL_DEPTH = {1: 6, 2: 6, 3: 3, 4: 3, 5: 3, 6: 4, 7: 2, 8: 6, 9: 3}


@pytest.mark.parametrize(
    "number,title,fn",
    CRITERIA,
    ids=[f"criterion_{num}_{title.replace(' ', '_')}" for num, title, _ in CRITERIA],
)
def test_criterion(number, title, fn):
    passed, detail = fn(max_k=FULL_DEPTH[number])
    result = CriterionResult(number, title, passed, detail)
    print(result.line())
    assert passed, result.line()


def test_every_criterion_is_covered():
    assert [num for num, _, _ in CRITERIA] == list(range(1, 10))
    assert set(FULL_DEPTH) == set(range(1, 10))
