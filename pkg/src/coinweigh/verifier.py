"""Checking schemes: structural conditions, exhaustive decoding, search.

Five structural conditions cover all twelve variants:

* balanced       -- every trial carries equally many coins per pan
                    (entrywise sum over coins plus genuine is zero),
* distinct       -- no two coins share a placement vector,
* opposite_free  -- no coin's vector is another's negation,
* zero_free      -- no coin stays off the scale for all trials,
* all_ones_free  -- no coin rides a pan in every trial (k >= 1).

The genuine coin is exempt from all but the balance count: it may
duplicate or negate a suspect without harming decodability.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    Answer,
    AmbiguousOutcome,
    HEAVIER,
    LIGHTER,
    NONE,
    Scheme,
    SearchBudgetExceeded,
    UNKNOWN,
    UndecodableOutcome,
    Vector,
    all_vectors,
    decode_candidates,
    negate,
    outcome_for_heavier,
    zero_vector,
)

BALANCED = "balanced"
DISTINCT = "distinct"
OPPOSITE_FREE = "opposite_free"
ZERO_FREE = "zero_free"
ALL_ONES_FREE = "all_ones_free"

ALL_CONDITIONS = frozenset(
    {BALANCED, DISTINCT, OPPOSITE_FREE, ZERO_FREE, ALL_ONES_FREE})

DEFAULT_SEARCH_BUDGET = 5_000_000

_MIRROR = str.maketrans("lr", "rl")


@dataclass
class VerificationReport:
    passed: bool
    condition_failures: list = field(default_factory=list)
    decode_failures: list = field(default_factory=list)
    configurations_checked: int = 0

    def summary(self) -> str:
        if self.passed:
            return (f"pass ({self.configurations_checked} configurations, "
                    f"no condition violations)")
        parts = []
        if self.condition_failures:
            parts.append(f"{len(self.condition_failures)} condition violation(s): "
                         + "; ".join(f"{c} {w}" for c, w in self.condition_failures[:5]))
        if self.decode_failures:
            parts.append(f"{len(self.decode_failures)} decode failure(s): "
                         + "; ".join(str(f) for f in self.decode_failures[:5]))
        return "FAIL " + " | ".join(parts)


def condition_failures(coin_vectors, genuine_vector, k, conditions):
    """All violations among the requested conditions, each with a witness.

    Witnesses use 1-based coin ids and trial numbers.
    """
    bad = []
    coins = list(coin_vectors)
    if BALANCED in conditions:
        stack = coins + ([genuine_vector] if genuine_vector is not None else [])
        for j in range(k):
            s = sum(v[j] for v in stack)
            if s != 0:
                bad.append((BALANCED, (j + 1, s)))
    if DISTINCT in conditions:
        seen = {}
        for i, v in enumerate(coins, start=1):
            if v in seen:
                bad.append((DISTINCT, (seen[v], i, v)))
            else:
                seen[v] = i
    if OPPOSITE_FREE in conditions:
        first = {}
        for i, v in enumerate(coins, start=1):
            nv = negate(v)
            if nv in first and nv != v:
                bad.append((OPPOSITE_FREE, (first[nv], i, v)))
            first.setdefault(v, i)
    if ZERO_FREE in conditions:
        zero = zero_vector(k)
        for i, v in enumerate(coins, start=1):
            if v == zero:
                bad.append((ZERO_FREE, (i,)))
    if ALL_ONES_FREE in conditions and k >= 1:
        for i, v in enumerate(coins, start=1):
            if all(t == -1 for t in v) or all(t == 1 for t in v):
                bad.append((ALL_ONES_FREE, (i, v)))
    return bad


def check_conditions(scheme: Scheme, conditions) -> VerificationReport:
    bad = condition_failures(
        scheme.coin_vectors, scheme.genuine_vector, scheme.k, conditions)
    return VerificationReport(passed=not bad, condition_failures=bad)


# ---------- exhaustive decode sweep ----------

def _candidate_map(scheme: Scheme) -> dict[str, list[Answer]]:
    """Outcome string -> admissible answers, built in one pass over the
    coins.  Mirrors decode_candidates exactly (tests cross-check)."""
    var = scheme.variant
    table: dict[str, list[Answer]] = {}
    for i, v in enumerate(scheme.coin_vectors, start=1):
        heavy = outcome_for_heavier(v)
        if var.q1:
            table.setdefault(heavy, []).append(Answer(i, HEAVIER))
            continue
        light = heavy.translate(_MIRROR)
        if heavy == light:
            if var.q4:
                table.setdefault(heavy, []).extend(
                    (Answer(i, HEAVIER), Answer(i, LIGHTER)))
            else:
                table.setdefault(heavy, []).append(Answer(i, UNKNOWN))
        else:
            table.setdefault(heavy, []).append(Answer(i, HEAVIER))
            table.setdefault(light, []).append(Answer(i, LIGHTER))
    if not var.q2:
        table.setdefault("b" * scheme.k, []).append(Answer(0, NONE))
    return table


def verify_exhaustive(plan) -> VerificationReport:
    """Sweep every admissible configuration and demand a unique, correct
    decode.  Also checks the physical premise that each trial loads both
    pans equally (recorded as a 'balanced' condition failure).

    Accepts a Scheme or an adaptive plan (dispatched by type).
    """
    if not isinstance(plan, Scheme):
        from .adaptive import verify_plan
        return verify_plan(plan)
    scheme = plan
    report = VerificationReport(passed=True)
    report.condition_failures = condition_failures(
        scheme.coin_vectors, scheme.genuine_vector, scheme.k, {BALANCED})
    table = _candidate_map(scheme)
    var = scheme.variant

    def expected(outcome: str, culprit: int, sign: str):
        got = table.get(outcome, [])
        if len(got) != 1:
            return (culprit, sign, outcome,
                    "no candidate" if not got else
                    "ambiguous: " + ", ".join(f"({a.culprit},{a.sign})" for a in got))
        a = got[0]
        if a.culprit != culprit:
            return (culprit, sign, outcome, f"decoded culprit {a.culprit}")
        if var.q4 or sign == NONE:
            ok = a.sign == sign
        else:
            ok = a.sign in (sign, UNKNOWN)
        if not ok:
            return (culprit, sign, outcome, f"decoded sign {a.sign}")
        return None

    checked = 0
    for i, v in enumerate(scheme.coin_vectors, start=1):
        heavy = outcome_for_heavier(v)
        if var.q1:
            bad = expected(heavy, i, HEAVIER)
            checked += 1
            if bad:
                report.decode_failures.append(bad)
            continue
        for sign, outcome in ((HEAVIER, heavy), (LIGHTER, heavy.translate(_MIRROR))):
            bad = expected(outcome, i, sign)
            checked += 1
            if bad:
                report.decode_failures.append(bad)
    if not var.q2:
        bad = expected("b" * scheme.k, 0, NONE)
        checked += 1
        if bad:
            report.decode_failures.append(bad)
    report.configurations_checked = checked
    report.passed = not report.condition_failures and not report.decode_failures
    return report


# ---------- bounded exhaustive search ----------

def search_nonadaptive(var, n: int, k: int, waive=frozenset(),
                       budget: int | None = None):
    """Find the lexicographically least scheme meeting the variant's
    construction conditions (minus any waived ones), or return None when
    the whole canonical space is exhausted.

    Coins are enumerated as strictly increasing vector sequences; the
    genuine vector, where the variant has one, is pinned to the same
    placement the constructors use, so constructive existence implies
    search success.  Raises SearchBudgetExceeded when the node budget
    runs out before either verdict.
    """
    from .constructors import genuine_for, required_conditions
    from .core import variant as _variant

    var = _variant(var)
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    conds = set(required_conditions(var, role="construction")) - set(waive)
    genuine = genuine_for(var, n, k)
    pool = all_vectors(k)
    zero = zero_vector(k)
    want_balance = BALANCED in conds
    target = negate(genuine) if (want_balance and genuine is not None) else zero
    limit = DEFAULT_SEARCH_BUDGET if budget is None else budget
    nodes = 0

    skip_zero = ZERO_FREE in conds
    skip_ones = ALL_ONES_FREE in conds and k >= 1
    skip_opposites = OPPOSITE_FREE in conds
    ones = (1,) * k
    neg_ones = (-1,) * k

    chosen: list[Vector] = []
    chosen_set: set[Vector] = set()
    sums = [0] * k

    def feasible(depth: int) -> bool:
        if not want_balance:
            return True
        remaining = n - depth
        return all(abs(target[c] - sums[c]) <= remaining for c in range(k))

    def dfs(start: int) -> Scheme | None:
        nonlocal nodes
        depth = len(chosen)
        if depth == n:
            if want_balance and tuple(sums) != target:
                return None
            return Scheme(var, n, k, tuple(chosen), genuine)
        for idx in range(start, len(pool)):
            v = pool[idx]
            nodes += 1
            if nodes > limit:
                raise SearchBudgetExceeded(
                    f"search for {var.name} n={n} k={k} exceeded {limit} nodes")
            if skip_zero and v == zero:
                continue
            if skip_ones and (v == ones or v == neg_ones):
                continue
            if skip_opposites and negate(v) in chosen_set:
                continue
            if depth == 0 and want_balance and negate(v) < v:
                # balance forces the lex-least coin to open with -1
                continue
            chosen.append(v)
            chosen_set.add(v)
            for c in range(k):
                sums[c] += v[c]
            if feasible(depth + 1):
                found = dfs(idx + 1)
                if found is not None:
                    return found
            chosen.pop()
            chosen_set.discard(v)
            for c in range(k):
                sums[c] -= v[c]
        return None

    return dfs(0)


def complement_argument_check(k: int) -> bool:
    """Confirm by enumeration that no two distinct vectors of {-1,0,+1}^k
    sum to zero while one of them is the zero vector.

    Removing two such vectors from the full space is the only way a
    fixed plan for n = 3^k - 2 unknown-direction suspects could stay
    balanced, duplicate-free and zero-free, so this establishes that no
    such plan exists.
    """
    vectors = all_vectors(k)
    zero = zero_vector(k)
    for a_idx in range(len(vectors)):
        for b_idx in range(a_idx + 1, len(vectors)):
            a, b = vectors[a_idx], vectors[b_idx]
            if a != b and negate(a) == b and (a == zero or b == zero):
                return False
    return True
