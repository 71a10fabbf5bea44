"""Exhaustive verification, exhaustive search, and their cross-checks."""

import pytest

from coinweigh import (
    NONADAPTIVE,
    Scheme,
    SearchBudgetExceeded,
    UNKNOWN,
    VARIANTS,
    bound,
    complement_argument_check,
    construct,
    decode,
    decode_candidates,
    is_solvable,
    search_nonadaptive,
    simulate,
    verify_exhaustive,
)
from coinweigh.core import Configuration, HEAVIER, LIGHTER
from coinweigh.verifier import ALL_ONES_FREE, _candidate_map, condition_failures


def test_condition_witnesses_are_specific():
    fails = condition_failures(((1, 0), (1, 0), (0, 0), (1, 1), (-1, -1)), None, 2,
                               {"balanced", "distinct", "opposite_free",
                                "zero_free", "all_ones_free"})
    by_name = {}
    for name, witness in fails:
        by_name.setdefault(name, []).append(witness)
    assert by_name["balanced"] == [(1, 2)]  # trial 1 tilts by +2
    assert by_name["distinct"] == [(1, 2, (1, 0))]
    assert by_name["opposite_free"] == [(4, 5, (-1, -1))]
    assert by_name["zero_free"] == [(3,)]
    # the full-pan vector is banned in both orientations
    assert sorted(by_name["all_ones_free"]) == [(4, (1, 1)), (5, (-1, -1))]


def test_verify_counts_configurations():
    assert verify_exhaustive(construct("P5", 13, 3)).configurations_checked == 26
    assert verify_exhaustive(construct("P12", 12, 3)).configurations_checked == 25
    assert verify_exhaustive(construct("P1", 27, 3)).configurations_checked == 27
    # existence unknown adds the all-genuine configuration
    assert verify_exhaustive(construct("P4", 26, 3)).configurations_checked == 27


def test_report_summary_strings():
    good = verify_exhaustive(construct("P8", 4, 2))
    assert good.passed
    assert good.summary().startswith("pass (8 configurations")
    bad = verify_exhaustive(Scheme("P8", 2, 2, ((0, -1), (0, 1))))
    assert not bad.passed
    assert bad.summary().startswith("FAIL")


def test_p6_zero_coin_answers_unknown_sign():
    # at the P6 ceiling one coin idles every trial; it is identified but
    # its sign stays open, which the variant explicitly tolerates
    s = construct("P6", 14, 3)
    idle = s.coin_vectors.index((0, 0, 0)) + 1
    assert decode(s, simulate(s, Configuration(idle, HEAVIER))).sign == UNKNOWN
    assert decode(s, simulate(s, Configuration(idle, LIGHTER))).sign == UNKNOWN
    report = verify_exhaustive(s)
    assert report.passed, report.summary()


@pytest.mark.parametrize("var,n,k", [("P8", 13, 3), ("P5", 4, 2), ("P12", 12, 3), ("P2", 9, 2)])
def test_candidate_map_agrees_with_decode(var, n, k):
    # forward route: simulate every configuration into an outcome table;
    # backward route: decode_candidates pattern-matches one outcome at a
    # time; the two must induce identical candidate sets everywhere
    s = construct(var, n, k)
    table = _candidate_map(s)
    from itertools import product

    for letters in product("lbr", repeat=k):
        t = "".join(letters)
        assert set(table.get(t, [])) == set(decode_candidates(s, t)), t


def test_search_agrees_with_solvability():
    for name in VARIANTS:
        for k in range(3):
            for n in range(1, bound(name, k) + 2):
                found = search_nonadaptive(name, n, k)
                if is_solvable(name, n, k) == NONADAPTIVE:
                    assert found is not None, (name, n, k)
                    report = verify_exhaustive(found)
                    assert report.passed, (name, n, k, report.summary())
                else:
                    assert found is None, (name, n, k)


def test_search_finds_nothing_beyond_the_bound():
    assert search_nonadaptive("P5", 5, 2) is None
    assert search_nonadaptive("P1", 10, 2) is None


def test_search_respects_waivers():
    # P7 at its k=3 ceiling admits no scheme under the house conditions,
    # but waiving the all-ones ban yields one
    found = search_nonadaptive("P7", 11, 3, waive=frozenset({ALL_ONES_FREE}))
    assert found is not None
    assert verify_exhaustive(found).passed
    assert (1, 1, 1) in found.coin_vectors or (-1, -1, -1) in found.coin_vectors


def test_search_budget_exhaustion():
    with pytest.raises(SearchBudgetExceeded):
        search_nonadaptive("P12", 12, 3, budget=5)


@pytest.mark.parametrize("k", range(1, 5))
def test_no_mutually_negating_pair_with_zero(k):
    # the pigeonhole step behind the adaptive-only window: a scheme for
    # n = 3^k - 2 would need two suspects whose vectors negate each other
    # while one of them idles, and no such pair exists
    assert complement_argument_check(k)
