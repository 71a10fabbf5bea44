"""Adaptive decision trees and the game-tree feasibility oracle."""

import pytest

from coinweigh import (
    ADAPTIVE_ONLY,
    Configuration,
    HEAVIER,
    LIGHTER,
    NONE,
    SearchBudgetExceeded,
    UNSOLVABLE,
    VARIANTS,
    adaptive_feasible,
    bound,
    build_adaptive,
    is_solvable,
    render_adaptive,
    simulate_adaptive,
)
from coinweigh.adaptive import Leaf, Node, verify_plan


def test_root_splits_maximal_thirds():
    plan = build_adaptive("P4", 7, 2)
    assert plan.root.left == (1, 2, 3)
    assert plan.root.right == (4, 5, 6)
    # second weighing lives one level down on every branch
    for outcome in "lbr":
        child = plan.root.child(outcome)
        assert isinstance(child, (Node, Leaf)) or child is None


def test_p3_root_may_use_the_genuine_coin():
    # P3 brings a known-genuine coin (id n+1); the tip weighing at the
    # bottom pairs a lone suspect against it
    plan = build_adaptive("P3", 7, 2)
    ids = set()

    def walk(node):
        if node is None or isinstance(node, Leaf):
            return
        ids.update(node.left)
        ids.update(node.right)
        for o in "lbr":
            walk(node.child(o))

    walk(plan.root)
    assert 8 in ids


def test_simulate_adaptive_all_answers():
    plan = build_adaptive("P4", 7, 2)
    for coin in range(1, 8):
        a = simulate_adaptive(plan, Configuration(coin, HEAVIER))
        assert (a.culprit, a.sign) == (coin, HEAVIER)
    # a known-lighter session reads the same tree with the scale mirrored
    a = simulate_adaptive(plan, Configuration(7, LIGHTER))
    assert (a.culprit, a.sign) == (7, LIGHTER)
    a = simulate_adaptive(plan, Configuration(0, NONE))
    assert (a.culprit, a.sign) == (0, NONE)
    with pytest.raises(ValueError):
        simulate_adaptive(plan, Configuration(8, HEAVIER))


@pytest.mark.parametrize("var,n,k", [("P4", 7, 2), ("P3", 7, 2), ("P4", 25, 3), ("P3", 25, 3)])
def test_verify_plan_total_and_structural(var, n, k):
    assert is_solvable(var, n, k) == ADAPTIVE_ONLY
    report = verify_plan(build_adaptive(var, n, k))
    assert report.passed, report.summary()
    assert report.configurations_checked == 2 * n + 1


def test_build_adaptive_rejections():
    with pytest.raises(ValueError):
        build_adaptive("P4", 6, 2)  # a fixed scheme exists, no tree needed
    with pytest.raises(ValueError):
        build_adaptive("P8", 4, 2)  # trees only make sense when q1 holds
    with pytest.raises(ValueError):
        build_adaptive("P4", 9, 2)  # over the bound


def test_render_adaptive_header_and_leaves():
    text = render_adaptive(build_adaptive("P4", 7, 2))
    lines = text.splitlines()
    assert lines[0] == "variant=P4 n=7 k=2 adaptive"
    assert any(line.strip().startswith("weigh ") for line in lines)
    assert any(line.strip().endswith("no fake") for line in lines)
    assert any("fake 7" in line for line in lines)


def test_feasible_agrees_with_solvability_verdicts():
    # game-tree search and the closed-form verdicts must agree on both
    # sides of every bound
    for name in VARIANTS:
        for k in range(3):
            for n in range(1, bound(name, k) + 2):
                want = is_solvable(name, n, k) != UNSOLVABLE
                assert adaptive_feasible(name, n, k) == want, (name, n, k)


def test_feasible_without_the_reference_coin():
    # P5 with one suspect needs the genuine coin on the other pan; taking
    # it away leaves nothing to weigh against
    assert adaptive_feasible("P5", 1, 1)
    assert not adaptive_feasible("P5", 1, 1, extras=0)


def test_feasible_budget_exhaustion():
    with pytest.raises(SearchBudgetExceeded):
        adaptive_feasible("P12", 12, 3, budget=3)
