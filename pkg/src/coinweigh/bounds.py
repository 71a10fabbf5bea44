"""Largest solvable instance size per variant, and solvability verdicts."""

from __future__ import annotations

from .core import Variant, variant

NONADAPTIVE = "nonadaptive"
ADAPTIVE_ONLY = "adaptive_only"
UNSOLVABLE = "unsolvable"


def bound(var: str | Variant, k: int) -> int:
    """Maximum number of suspect coins solvable in k trials.

    P1, P2: 3^k;  P3, P4: 3^k - 1;  P5, P8, P9, P10: (3^k - 1)/2;
    P6: (3^k + 1)/2;  P7, P11, P12: (3^k - 3)/2, never negative.
    """
    var = variant(var)
    if k < 0:
        raise ValueError("k must be >= 0")
    p = 3 ** k
    name = var.name
    if name in ("P1", "P2"):
        return p
    if name in ("P3", "P4"):
        return p - 1
    if name in ("P5", "P8", "P9", "P10"):
        return (p - 1) // 2
    if name == "P6":
        return (p + 1) // 2
    # P7, P11, P12
    return max(0, (p - 3) // 2)


def bounds_row(k: int) -> dict[str, int]:
    """The full bound table row for k trials, keyed P1..P12."""
    return {name: bound(name, k) for name in
            ("P1", "P2", "P3", "P4", "P5", "P6",
             "P7", "P8", "P9", "P10", "P11", "P12")}


def is_solvable(var: str | Variant, n: int, k: int) -> str:
    """Classify (variant, n, k) as nonadaptive / adaptive_only / unsolvable.

    A handful of tiny instances escape the bound formula:

    * P7/P11/P12 need three suspects; with n <= 2 every strategy leaves
      two configurations sharing an outcome path.
    * P8 with one suspect needs no weighing at all (the answer never
      reports a direction), so it is solvable even at k = 0; with two
      suspects it is unsolvable at any k.
    * P4 with one suspect is unsolvable: both directions of the lone
      coin must be reported but nothing can separate them.

    P3 and P4 instances at n = 3^k - 2 (k >= 2) are solvable only by
    adapting later weighings to earlier outcomes.
    """
    var = variant(var)
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    name = var.name
    if name in ("P7", "P11", "P12") and n <= 2:
        return UNSOLVABLE
    if name == "P8":
        if n == 1:
            return NONADAPTIVE
        if n == 2:
            return UNSOLVABLE
    if name == "P4" and n == 1:
        return UNSOLVABLE
    if n > bound(var, k):
        return UNSOLVABLE
    if name in ("P3", "P4") and k >= 2 and n == 3 ** k - 2:
        return ADAPTIVE_ONLY
    return NONADAPTIVE


def counting_bound_check(var: str | Variant, n: int, k: int) -> bool:
    """True when (n, k) survives the information-counting argument.

    Each of the 3^k outcome paths can name at most one configuration
    (q4 true) or one culprit identity (q4 false, where only a coin that
    rides the all-balanced path may keep both directions).  Variants
    with an extra genuine coin on hand gain nothing here; the counts
    below already fold in the sharper pan-parity refinements, so this
    predicate matches the adaptive game oracle everywhere with k >= 1.
    """
    var = variant(var)
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    p = 3 ** k
    extra = 0 if var.q2 else 1  # the no-counterfeit configuration
    if var.q1:
        return n + extra <= p
    if k == 0:
        # no weighings: every configuration must already be resolved
        per_coin = 2 if var.q4 else 1
        return per_coin * n + extra <= 1
    name = var.name
    if name == "P5":
        # 2n configurations, one path each; 3^k is odd
        return 2 * n <= p - 1
    if name == "P8":
        # the q4 slack dies to the tipped-pan dilemma: a first weighing
        # with 2l coins aboard either tips (leaving 2l >= 3^(k-1)+1
        # identities for k-1 trials) or balances into an instance that
        # again exceeds capacity
        return n <= (p - 1) // 2
    if name == "P6":
        return 2 * n <= (p - 1) + 2
    if name in ("P7", "P11", "P12"):
        # same dilemma against the P5 bound on the balanced branch
        return n <= (p - 3) // 2
    if name == "P9":
        return 2 * n + 1 <= p
    # P10
    return 2 * n + 1 <= p + 1
