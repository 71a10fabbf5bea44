"""Adaptive weighing: decision trees and a game-tree feasibility oracle.

P3/P4 instances with n = 3^k - 2 suspects admit no fixed plan, but an
adaptive one exists: weigh 3^(k-1) suspects per pan; a tip hands the
implicated pan to a complete ternary identification subtree, while a
balance recurses on the 3^(k-1) - 2 leftovers with every weighed coin
banked as known genuine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Answer,
    Configuration,
    DecodeError,
    HEAVIER,
    LIGHTER,
    NONE,
    SearchBudgetExceeded,
    Variant,
    all_vectors,
    variant as _variant,
)
from .bounds import ADAPTIVE_ONLY, is_solvable

DEFAULT_FEASIBLE_BUDGET = 2_000_000

_FLIP = {"l": "r", "b": "b", "r": "l"}


@dataclass(frozen=True)
class Leaf:
    culprit: int  # 0 = no counterfeit


@dataclass(frozen=True)
class Node:
    left: tuple[int, ...]
    right: tuple[int, ...]
    on_l: "Node | Leaf | None"
    on_b: "Node | Leaf | None"
    on_r: "Node | Leaf | None"

    def child(self, outcome: str):
        return {"l": self.on_l, "b": self.on_b, "r": self.on_r}[outcome]


@dataclass(frozen=True)
class AdaptivePlan:
    variant: Variant
    n: int
    k: int
    root: "Node | Leaf"


def _complete_subtree(ids, t: int):
    """Identification tree for len(ids) == 3^t suspects whose direction is
    known (canonically: heavier), using exactly t trials.

    Suspect ids are assigned the vectors of {-1,0,+1}^t in lex order;
    trial d pans come from coordinate d, so every branch stays equal-pan
    because each coordinate value covers a third of the live block.
    """
    vectors = all_vectors(t)

    def build(pairs, d):
        if len(pairs) == 1:
            return Leaf(pairs[0][0])
        left = tuple(i for i, v in pairs if v[d] == -1)
        right = tuple(i for i, v in pairs if v[d] == 1)
        return Node(
            left, right,
            build([(i, v) for i, v in pairs if v[d] == -1], d + 1),
            build([(i, v) for i, v in pairs if v[d] == 0], d + 1),
            build([(i, v) for i, v in pairs if v[d] == 1], d + 1),
        )

    return build(list(zip(ids, vectors)), 0)


def build_adaptive(var, n: int, k: int) -> AdaptivePlan:
    """Adaptive plan for a P3/P4 instance at n = 3^k - 2.

    The final lone suspect is weighed against a known-genuine coin: the
    extra coin (id n+1) for P3, else the first coin banked from earlier
    balanced trials.  The right-tip branch of that last weighing cannot
    occur (the known comparison is canonically 'heavier') and is left
    out of the tree.
    """
    var = _variant(var)
    if not (var.q1 and not var.q2):
        raise ValueError(f"adaptive plans are built for P3/P4, not {var.name}")
    if is_solvable(var, n, k) != ADAPTIVE_ONLY:
        raise ValueError(f"{var.name} n={n} k={k} is not an adaptive-only instance")

    def build(suspects, pool, t):
        if len(suspects) == 1:
            s = suspects[0]
            return Node((s,), (pool[0],), Leaf(s), Leaf(0), None)
        m = 3 ** (t - 1)
        left, right, rest = suspects[:m], suspects[m:2 * m], suspects[2 * m:]
        return Node(
            tuple(left), tuple(right),
            _complete_subtree(left, t - 1),
            build(rest, pool + left + right, t - 1),
            _complete_subtree(right, t - 1),
        )

    pool = [n + 1] if var.q3 else []
    root = build(list(range(1, n + 1)), pool, k)
    return AdaptivePlan(var, n, k, root)


def simulate_adaptive(plan: AdaptivePlan, config: Configuration) -> Answer:
    """Walk the tree against a ground truth and report its answer.

    The plan is laid out for the canonical known-heavier comparison; a
    known-lighter session reads the scale mirrored, so the same tree
    serves all 2n+1 configurations.
    """
    if config.culprit > plan.n:
        raise ValueError(f"culprit {config.culprit} out of range for n={plan.n}")
    node = plan.root
    while isinstance(node, Node):
        c = config.culprit
        if c != 0 and c in node.left:
            phys = "l" if config.sign == HEAVIER else "r"
        elif c != 0 and c in node.right:
            phys = "r" if config.sign == HEAVIER else "l"
        else:
            phys = "b"
        if config.sign == LIGHTER:
            phys = _FLIP[phys]
        node = node.child(phys)
        if node is None:
            raise DecodeError(
                f"configuration ({config.culprit}, {config.sign}) reached an "
                f"outcome branch marked unreachable")
    if node.culprit == 0:
        return Answer(0, NONE)
    return Answer(node.culprit, config.sign)


def verify_plan(plan: AdaptivePlan):
    """Exhaustively walk all 2n+1 configurations through the plan and
    check structure: equal disjoint pans, ids in range, depth <= k."""
    from .verifier import VerificationReport

    report = VerificationReport(passed=True)
    max_id = plan.n + (1 if plan.variant.q3 else 0)

    def structure(node, depth):
        if node is None or isinstance(node, Leaf):
            return
        if depth >= plan.k:
            report.condition_failures.append(("depth", (depth + 1, plan.k)))
        if len(node.left) != len(node.right):
            report.condition_failures.append(
                ("balanced", (depth + 1, len(node.left) - len(node.right))))
        seen = set(node.left) | set(node.right)
        if len(seen) != len(node.left) + len(node.right):
            report.condition_failures.append(("distinct", (depth + 1,)))
        if any(not 1 <= i <= max_id for i in seen):
            report.condition_failures.append(("range", (depth + 1,)))
        for child in (node.on_l, node.on_b, node.on_r):
            structure(child, depth + 1)

    structure(plan.root, 0)

    checked = 0
    configs = [Configuration(0, NONE)] if not plan.variant.q2 else []
    for i in range(1, plan.n + 1):
        configs.append(Configuration(i, HEAVIER))
        configs.append(Configuration(i, LIGHTER))
    for config in configs:
        checked += 1
        try:
            answer = simulate_adaptive(plan, config)
        except DecodeError as e:
            report.decode_failures.append(
                (config.culprit, config.sign, None, str(e)))
            continue
        if answer.culprit != config.culprit or answer.sign != config.sign:
            report.decode_failures.append(
                (config.culprit, config.sign, None,
                 f"answered ({answer.culprit}, {answer.sign})"))
    report.configurations_checked = checked
    report.passed = not report.condition_failures and not report.decode_failures
    return report


def render_adaptive(plan: AdaptivePlan) -> str:
    """Stable text rendering: a header, then one line per weighing or
    verdict, children indented under their parent with outcome tags."""
    lines = [f"variant={plan.variant.name} n={plan.n} k={plan.k} adaptive"]

    def emit(node, prefix: str, indent: str):
        if isinstance(node, Leaf):
            verdict = "no fake" if node.culprit == 0 else f"fake {node.culprit}"
            lines.append(f"{indent}{prefix}{verdict}")
            return
        left = " ".join(str(i) for i in node.left)
        right = " ".join(str(i) for i in node.right)
        lines.append(f"{indent}{prefix}weigh {left} | {right}")
        child_indent = indent + "  " if prefix else indent
        for sym in ("l", "b", "r"):
            child = node.child(sym)
            if child is not None:
                emit(child, f"{sym}: ", child_indent)

    emit(plan.root, "", "")
    return "\n".join(lines) + "\n"


# ---------- feasibility oracle ----------

def adaptive_feasible(var, n: int, k: int, extras: int | None = None,
                      budget: int | None = None) -> bool:
    """Decide by exhaustive game search whether ANY adaptive strategy
    solves (variant, n, k).

    States track only counts: suspect classes, genuine coins available
    as pan filler, and whether "no counterfeit" is still live.  extras
    overrides the number of genuine coins on hand at the start (default:
    one when the variant grants one); more extras never help beyond
    filler, so the default matches the variant definition.

    Raises SearchBudgetExceeded if the explored state count passes the
    budget before a verdict.
    """
    var = _variant(var)
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if extras is None:
        extras = 1 if var.q3 else 0
    if extras < 0:
        raise ValueError("extras must be >= 0")
    limit = DEFAULT_FEASIBLE_BUDGET if budget is None else budget
    counter = [0]
    if var.q1:
        return _feasible_known(var, n, extras, k, counter, limit)
    return _feasible_unknown(var, n, extras, k, counter, limit)


def _spend(counter, limit, var, n, k):
    counter[0] += 1
    if counter[0] > limit:
        raise SearchBudgetExceeded(
            f"feasibility search for {var.name} n={n} k={k} "
            f"exceeded {limit} states")


def _feasible_known(var, n, g0, k, counter, limit):
    """Known-direction game: a state is (suspects, genuine, none-live)."""
    memo = {}

    def solve(p, g, none_p, t):
        none_c = 1 if none_p else 0
        if p + none_c <= 1:
            return True
        if t == 0 or p + none_c > 3 ** t:
            return False
        g = min(g, p)  # filler beyond the suspect count is never needed
        key = (p, g, none_p, t)
        if key in memo:
            return memo[key]
        _spend(counter, limit, var, n, k)
        ok = False
        for p1 in range(1, p + 1):
            for p2 in range(0, min(p - p1, p1) + 1):
                if p1 - p2 > g:
                    continue
                if (solve(p1, g + p - p1, False, t - 1)
                        and solve(p - p1 - p2, g + p1 + p2, none_p, t - 1)
                        and solve(p2, g + p - p2, False, t - 1)):
                    ok = True
                    break
            if ok:
                break
        memo[key] = ok
        return ok

    return solve(n, g0, not var.q2, k)


def _feasible_unknown(var, n, g0, k, counter, limit):
    """Unknown-direction game: a state is (both-ways suspects, heavy-only,
    light-only, genuine, none-live)."""
    q4 = var.q4
    none_slack = 0 if q4 else 1
    memo = {}

    def solve(u, h, l, g, none_p, t):
        none_c = 1 if none_p else 0
        configs = 2 * u + h + l + none_c
        if configs <= 1:
            return True
        if not q4 and u == 1 and h == 0 and l == 0 and not none_p:
            # the culprit is cornered and no direction is owed
            return True
        if t == 0:
            return False
        if u + h + l + none_c > 3 ** t:
            return False  # each culprit identity burns at least one path
        if configs > 3 ** t + none_slack:
            return False  # only an all-balanced path may keep a dual sign
        if h < l:
            h, l = l, h
        g = min(g, u + h + l)
        key = (u, h, l, g, none_p, t)
        if key in memo:
            return memo[key]
        _spend(counter, limit, var, n, k)

        def pan_splits():
            for u1 in range(u + 1):
                for u2 in range(u - u1 + 1):
                    for h1 in range(h + 1):
                        for h2 in range(h - h1 + 1):
                            for l1 in range(l + 1):
                                for l2 in range(l - l1 + 1):
                                    s1 = u1 + h1 + l1
                                    s2 = u2 + h2 + l2
                                    if s1 + s2 == 0 or abs(s1 - s2) > g:
                                        continue
                                    if (u1, h1, l1) > (u2, h2, l2):
                                        continue  # pan swap symmetry
                                    yield u1, h1, l1, u2, h2, l2, s1, s2

        ok = False
        total = u + h + l
        for u1, h1, l1, u2, h2, l2, s1, s2 in pan_splits():
            # left sinks: heavies on the left and lights on the right survive
            if not solve(0, u1 + h1, u2 + l2,
                         g + total - u1 - h1 - u2 - l2, False, t - 1):
                continue
            if not solve(u - u1 - u2, h - h1 - h2, l - l1 - l2,
                         g + s1 + s2, none_p, t - 1):
                continue
            if solve(0, u2 + h2, u1 + l1,
                     g + total - u2 - h2 - u1 - l1, False, t - 1):
                ok = True
                break
        memo[key] = ok
        return ok

    return solve(n, 0, 0, g0, not var.q2, k)
