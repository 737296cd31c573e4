"""Command-line surface: bounds, coefficient evaluation, transformation
trajectories, sweep tables and the example suites.

Results go to stdout as JSON or CSV; validation errors go to stderr as a
JSON object with a stable ``code`` field and exit status 2.  The env var
``CLIFFORD3_OUTPUT=json|csv`` overrides the per-command default format.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import (
    Rank3Query,
    h0_line_bound,
    h0_rank2_bound,
    h0_rank3_semistable_bound,
    h0_rank3_unstable_bound,
)
from .elmtrans import ElmState, StepChoice, seed_state_lemma36, step
from .errors import Clifford3Error
from .families import (
    FamilyAParams,
    FamilyBParams,
    FamilyCParams,
    family_a,
    family_b,
    family_c,
    suite,
    unstable_sharpness,
)
from .invariants import BundleInvariants, Curve
from .krawtchouk import KrawtchoukQuery, krawtchouk


def _output_format(default: str) -> str:
    fmt = os.environ.get("CLIFFORD3_OUTPUT", "").strip().lower()
    return fmt if fmt in ("json", "csv") else default


def _emit_error(exc: Exception) -> int:
    code = exc.code if isinstance(exc, Clifford3Error) else type(exc).__name__
    print(json.dumps({"code": code, "message": str(exc)}), file=sys.stderr)
    return 2


def _bound_csv(result) -> str:
    assumptions = ";".join(result.assumptions)
    return (
        "value,case,exact,assumptions\n"
        f"{result.value},{result.case},{str(result.exact).lower()},{assumptions}"
    )


def cmd_bound(args) -> int:
    curve = Curve(args.genus, hyperelliptic=args.hyperelliptic)
    if args.rank == 1:
        result = h0_line_bound(curve, args.degree)
    elif args.rank == 2:
        if args.s1 is None:
            raise Clifford3Error("rank 2 needs --s1")
        result = h0_rank2_bound(curve, args.degree, args.s1, use_delta=args.delta)
    else:
        if args.s1 is None or args.s2 is None:
            raise Clifford3Error("rank 3 needs --s1 and --s2")
        inv = BundleInvariants(3, args.degree, (args.s1, args.s2))
        q = Rank3Query(
            curve,
            inv,
            s1f=args.s1f,
            use_delta=args.delta,
            use_hyperelliptic_sharpening=args.hyperelliptic,
        )
        if args.unstable or args.s1 < 0 or args.s2 < 0:
            result = h0_rank3_unstable_bound(q, f_semistable=args.f_semistable)
        else:
            result = h0_rank3_semistable_bound(q)
    if _output_format("json") == "csv":
        print(_bound_csv(result))
    else:
        print(json.dumps(result.to_dict()))
    return 0


def cmd_krawtchouk(args) -> int:
    print(krawtchouk(KrawtchoukQuery(args.r, args.n, args.N)))
    return 0


def _state_row(st: ElmState) -> dict:
    return {
        "step": st.step_count,
        "rank": st.inv.rank,
        "d": st.inv.degree,
        "s": list(st.inv.s),
        "sb_dim_upper": {f"{r},{i}": v for (r, i), v in sorted(st.sb_dim_upper.items())},
    }


def cmd_elmtrans(args) -> int:
    curve = Curve(args.genus, hyperelliptic=args.hyperelliptic)
    state = seed_state_lemma36(curve, args.rank)
    n_choices = args.rank - 1
    bits = args.choices or "0" * (args.steps * n_choices)
    if len(bits) != args.steps * n_choices or set(bits) - {"0", "1"}:
        raise Clifford3Error(
            f"--choices must be a 0/1 string of length steps*(rank-1) = "
            f"{args.steps * n_choices}"
        )
    trajectory = [state]
    for k in range(args.steps):
        chunk = bits[k * n_choices : (k + 1) * n_choices]
        state = step(state, StepChoice(tuple(c == "1" for c in chunk)))
        trajectory.append(state)
    if _output_format("json") == "csv":
        print("step,d," + ",".join(f"s{r}" for r in range(1, args.rank)))
        for st in trajectory:
            print(f"{st.step_count},{st.inv.degree}," + ",".join(map(str, st.inv.s)))
    else:
        for st in trajectory:
            print(json.dumps(_state_row(st)))
    return 0


def cmd_table(args) -> int:
    curve = Curve(args.genus, hyperelliptic=args.hyperelliptic)
    g, s1, s2 = args.genus, args.s1, args.s2
    d_min = args.d_min if args.d_min is not None else s1
    d_max = args.d_max if args.d_max is not None else 6 * g - 6 - s2
    # only degrees matching the rank-3 congruence of s1 are swept
    start = d_min + ((s1 - d_min) % 3)
    rows = []
    for d in range(start, d_max + 1, 3):
        q = Rank3Query(curve, BundleInvariants(3, d, (s1, s2)))
        r = h0_rank3_semistable_bound(q)
        rows.append((d, r))
    if _output_format("csv") == "json":
        print(
            json.dumps(
                [
                    {"d": d, "value": r.value, "case": r.case, "exact": r.exact}
                    for d, r in rows
                ]
            )
        )
    else:
        print("d,value,case,exact")
        for d, r in rows:
            print(f"{d},{r.value},{r.case},{str(r.exact).lower()}")
    return 0


_SUITE_COLUMNS = "family,genus,n,k,m,variant,d,s1,s2,exact_h0,bound,sharp"


def cmd_examples(args) -> int:
    if args.suite:
        reports = suite(args.max_genus)
        if _output_format("csv") == "json":
            print(json.dumps([r.to_dict() for r in reports]))
        else:
            print(_SUITE_COLUMNS)
            for r in reports:
                p = r.params
                print(
                    ",".join(
                        str(x)
                        for x in (
                            r.family,
                            r.curve.genus,
                            p.get("n", ""),
                            p.get("k", ""),
                            p.get("m", ""),
                            p.get("variant", ""),
                            r.inv.degree,
                            r.inv.s[0],
                            r.inv.s[1],
                            r.exact_h0,
                            r.bound.value,
                            str(r.sharp).lower(),
                        )
                    )
                )
        return 0
    if args.family is None:
        raise Clifford3Error("need --family or --suite")
    if args.family == "a":
        report = family_a(FamilyAParams(args.genus, args.n, args.k))
    elif args.family == "b":
        report = family_b(FamilyBParams(args.genus, args.m))
    elif args.family == "c":
        report = family_c(FamilyCParams(args.genus, args.variant, args.k))
    else:
        curve = Curve(args.genus, hyperelliptic=True)
        report = unstable_sharpness(curve, args.dl, args.df, args.s1f)
    print(json.dumps(report.to_dict()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clifford3",
        description="Exact Clifford-type section bounds for rank-1/2/3 bundles on curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="one bound value as JSON")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--rank", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--s1", type=int)
    p.add_argument("--s2", type=int)
    p.add_argument("--s1f", type=int)
    p.add_argument("--hyperelliptic", action="store_true")
    p.add_argument("--delta", action="store_true", help="apply the Krawtchouk refinement")
    p.add_argument("--unstable", action="store_true")
    p.add_argument("--f-semistable", action="store_true", dest="f_semistable")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("krawtchouk", help="evaluate one coefficient")
    p.add_argument("r", type=int)
    p.add_argument("n", type=int)
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_krawtchouk)

    p = sub.add_parser("elmtrans", help="transformation trajectory as JSON lines")
    p.add_argument("--rank", type=int, choices=(2, 3), required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument(
        "--choices",
        help="0/1 string, one bit per (step, rank) pair; 1 hits a maximal subbundle",
    )
    p.add_argument("--hyperelliptic", action="store_true")
    p.set_defaults(func=cmd_elmtrans)

    p = sub.add_parser("table", help="sweep d over the special range as CSV")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--s1", type=int, required=True)
    p.add_argument("--s2", type=int, required=True)
    p.add_argument("--d-min", type=int, dest="d_min")
    p.add_argument("--d-max", type=int, dest="d_max")
    p.add_argument("--hyperelliptic", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("examples", help="example-family reports")
    p.add_argument("--family", choices=("a", "b", "c", "unstable"))
    p.add_argument("--genus", type=int, default=3)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--variant", choices=("E1", "E2"), default="E1")
    p.add_argument("--dl", type=int)
    p.add_argument("--df", type=int)
    p.add_argument("--s1f", type=int)
    p.add_argument("--suite", action="store_true")
    p.add_argument("--max-genus", type=int, default=5, dest="max_genus")
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Clifford3Error, ValueError) as exc:
        return _emit_error(exc)


if __name__ == "__main__":
    sys.exit(main())
