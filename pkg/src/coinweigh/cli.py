"""Command line interface.

Exit codes: 0 = pass/found/feasible, 1 = fail/none/infeasible,
2 = usage error, malformed input, contradictory outcomes, or an
exhausted search budget.
"""

from __future__ import annotations

import argparse
import sys

from .adaptive import AdaptivePlan, Leaf, adaptive_feasible, build_adaptive, render_adaptive
from .bounds import ADAPTIVE_ONLY, UNSOLVABLE, bound, bounds_row, is_solvable
from .constructors import construct
from .core import (
    CoinWeighError,
    HEAVIER,
    Scheme,
    SchemeFormatError,
    SearchBudgetExceeded,
    UnsolvableInstance,
    VARIANTS,
    format_scheme,
    outcome_for_heavier,
    parse_scheme,
    trial_pans,
)
from .verifier import ALL_CONDITIONS, search_nonadaptive, verify_exhaustive


def _variant_arg(value: str):
    if value not in VARIANTS:
        raise argparse.ArgumentTypeError(f"unknown variant {value!r} (expected P1..P12)")
    return value


def _waive_arg(value: str):
    names = {s.strip() for s in value.split(",") if s.strip()}
    unknown = names - set(ALL_CONDITIONS)
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown condition(s) {sorted(unknown)}; choose from {sorted(ALL_CONDITIONS)}")
    return frozenset(names)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coinweigh",
        description="Construct, verify and search weighing schemes for the "
                    "twelve counterfeit-coin problem variants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="print the largest solvable n per variant")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", type=_variant_arg)

    p = sub.add_parser("build", help="construct a scheme (or adaptive plan)")
    p.add_argument("--variant", type=_variant_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="also write the text to this file")

    p = sub.add_parser("verify", help="exhaustively verify a scheme file")
    p.add_argument("path")

    p = sub.add_parser("search", help="exhaustive search for a scheme")
    p.add_argument("--variant", type=_variant_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--waive", type=_waive_arg, default=frozenset(),
                   help="comma-separated conditions to drop")
    p.add_argument("--budget", type=int)

    p = sub.add_parser("feasible", help="adaptive game-tree feasibility")
    p.add_argument("--variant", type=_variant_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--extras", type=int)
    p.add_argument("--budget", type=int)

    p = sub.add_parser("interact", help="run a weighing session on stdin/stdout")
    p.add_argument("--variant", choices=("P3", "P4"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--max-k", type=int, default=3, dest="max_k")

    return parser


def cmd_bounds(args) -> int:
    if args.k < 0:
        print("k must be >= 0", file=sys.stderr)
        return 2
    if args.variant:
        print(f"{args.variant} {bound(args.variant, args.k)}")
    else:
        for name, value in bounds_row(args.k).items():
            print(f"{name} {value}")
    return 0


def cmd_build(args) -> int:
    verdict = is_solvable(args.variant, args.n, args.k)
    if verdict == UNSOLVABLE:
        print(f"{args.variant} with n={args.n} k={args.k} is unsolvable",
              file=sys.stderr)
        return 1
    if verdict == ADAPTIVE_ONLY:
        text = render_adaptive(build_adaptive(args.variant, args.n, args.k))
    else:
        text = format_scheme(construct(args.variant, args.n, args.k))
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.path) as fh:
            scheme = parse_scheme(fh.read())
    except OSError as e:
        print(f"cannot read {args.path}: {e}", file=sys.stderr)
        return 2
    except SchemeFormatError as e:
        print(f"{args.path}: {e}", file=sys.stderr)
        return 2
    report = verify_exhaustive(scheme)
    print(report.summary())
    return 0 if report.passed else 1


def cmd_search(args) -> int:
    scheme = search_nonadaptive(args.variant, args.n, args.k,
                                waive=args.waive, budget=args.budget)
    if scheme is None:
        print(f"no scheme for {args.variant} n={args.n} k={args.k} "
              f"(search space exhausted)", file=sys.stderr)
        return 1
    sys.stdout.write(format_scheme(scheme))
    return 0


def cmd_feasible(args) -> int:
    ok = adaptive_feasible(args.variant, args.n, args.k,
                           extras=args.extras, budget=args.budget)
    print("feasible" if ok else "infeasible")
    return 0 if ok else 1


def _read_outcome(prompt: str) -> str | None:
    while True:
        sys.stdout.write(prompt)
        sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            return None
        answer = line.strip()
        if answer in ("l", "b", "r"):
            return answer
        print(f"invalid outcome {answer!r}: enter l, b or r")


def _interact_scheme(scheme: Scheme) -> int:
    var = scheme.variant
    poss = [(i, outcome_for_heavier(v))
            for i, v in enumerate(scheme.coin_vectors, start=1)]
    if not var.q2:
        poss.append((0, "b" * scheme.k))
    for j in range(1, scheme.k + 1):
        left, right = trial_pans(scheme, j)
        print(f"trial {j}: weigh {' '.join(map(str, left))} | "
              f"{' '.join(map(str, right))}")
        got = _read_outcome("outcome [l/b/r]? ")
        if got is None:
            print("aborted: input ended", file=sys.stderr)
            return 2
        poss = [(i, o) for i, o in poss if o[j - 1] == got]
        if not poss:
            print(f"outcome {got!r} at trial {j} contradicts the earlier "
                  f"observations: no configuration fits", file=sys.stderr)
            return 2
    culprit = poss[0][0]
    print("verdict: " + ("no fake" if culprit == 0 else f"fake {culprit}"))
    return 0


def _interact_plan(plan: AdaptivePlan) -> int:
    node = plan.root
    trial = 0
    while not isinstance(node, Leaf):
        trial += 1
        print(f"trial {trial}: weigh {' '.join(map(str, node.left))} | "
              f"{' '.join(map(str, node.right))}")
        got = _read_outcome("outcome [l/b/r]? ")
        if got is None:
            print("aborted: input ended", file=sys.stderr)
            return 2
        child = node.child(got)
        if child is None:
            print(f"outcome {got!r} at trial {trial} contradicts the earlier "
                  f"observations: no configuration fits", file=sys.stderr)
            return 2
        node = child
    print("verdict: " + ("no fake" if node.culprit == 0 else f"fake {node.culprit}"))
    return 0


def cmd_interact(args) -> int:
    verdict = is_solvable(args.variant, args.n, args.k)
    if verdict == UNSOLVABLE:
        print(f"{args.variant} with n={args.n} k={args.k} is unsolvable",
              file=sys.stderr)
        return 1
    print(f"session variant={args.variant} n={args.n} k={args.k} "
          f"known-comparison={HEAVIER}")
    if verdict == ADAPTIVE_ONLY:
        return _interact_plan(build_adaptive(args.variant, args.n, args.k))
    return _interact_scheme(construct(args.variant, args.n, args.k))


def cmd_selftest(args) -> int:
    from .selftest import run_all
    if args.max_k < 0:
        print("--max-k must be >= 0", file=sys.stderr)
        return 2
    results = run_all(max_k=args.max_k)
    for result in results:
        print(result.line())
    return 0 if all(r.passed for r in results) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "bounds": cmd_bounds,
        "build": cmd_build,
        "verify": cmd_verify,
        "search": cmd_search,
        "feasible": cmd_feasible,
        "interact": cmd_interact,
        "selftest": cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except SearchBudgetExceeded as e:
        print(str(e), file=sys.stderr)
        return 2
    except UnsolvableInstance as e:
        print(str(e), file=sys.stderr)
        return 1
    except (CoinWeighError, ValueError) as e:
        print(str(e), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
