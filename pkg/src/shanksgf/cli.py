"""Command-line front end.

Exit codes: 0 success, 1 verification or integrality failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import closedform, dirichlet, signedperm
from .closedform import IntegralityError
from .verify import CHECKS, run_checks

DEFAULT_ORDER = 48

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _checks(text: str) -> List[str]:
    names = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in names if c not in CHECKS]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"checks must be a comma list from {','.join(CHECKS)}")
    return names


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_gf(args: argparse.Namespace) -> int:
    cf = closedform.build(args.m)
    if args.json:
        _emit(json.dumps(closedform.to_record(cf)))
    else:
        _emit(closedform.render(cf))
    return EXIT_OK


def cmd_coeffs(args: argparse.Namespace) -> int:
    if args.N > args.order:
        raise UsageError(f"N={args.N} exceeds the truncation order {args.order}; raise --order")
    values = closedform.s_coefficients(args.m, args.order)[: args.N + 1]
    if args.json:
        _emit(json.dumps({"m": args.m, "values": values}))
    elif args.bfile:
        _emit("".join(f"{n} {v}\n" for n, v in enumerate(values)))
    else:
        _emit(", ".join(str(v) for v in values))
    if args.plot:
        from .plotting import plot_coefficients

        plot_coefficients(args.m, values, args.plot)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_checks(args.m, max_n=args.max_n, checks=args.checks,
                         svals=args.s, blocks=args.blocks)
    ok = all(r.passed for r in results)
    if args.json:
        _emit(json.dumps({"m": args.m, "passed": ok, "results": [r.as_dict() for r in results]}))
    else:
        lines = ["check\tparam\ttolerance\tdeviation\tstatus"]
        for r in results:
            dev = "-" if r.deviation is None else f"{r.deviation:.3g}"
            status = "SKIP" if r.deviation is None else ("PASS" if r.passed else "FAIL")
            lines.append(f"{r.check}\t{r.param}\t{r.tolerance:g}\t{dev}\t{status}")
        lines.append(f"overall\t-\t-\t-\t{'PASS' if ok else 'FAIL'}")
        _emit("\n".join(lines))
    if args.plot:
        from .plotting import plot_report

        plot_report(args.m, results, args.plot)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dirichlet(args: argparse.Namespace) -> int:
    if args.sign == "plus":
        value = dirichlet.L_plus(args.m, args.s, args.blocks)
    else:
        if args.s < 2:
            raise UsageError("L_minus needs s >= 2")
        value = dirichlet.L_minus(args.m, args.s, args.blocks)
    if args.json:
        _emit(json.dumps({"sign": args.sign, "m": args.m, "s": args.s, "value": value.value,
                          "error_bound": value.error_bound, "terms_used": value.terms_used}))
    else:
        _emit(f"{value.value:.15g}\t{value.error_bound:.3g}\t{value.terms_used}")
    return EXIT_OK


def cmd_enum(args: argparse.Namespace) -> int:
    try:
        n = signedperm.count(args.r, args.p, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        _emit(json.dumps({"r": args.r, "p": args.p, "n": args.n, "count": n}))
    else:
        _emit(str(n))
    return EXIT_OK


def cmd_lhat(args: argparse.Namespace) -> int:
    values = [closedform.predicted_L(args.m, s + 1) for s in range(args.s_max + 1)]
    if args.json:
        _emit(json.dumps({"m": args.m, "lhat": values}))
    else:
        _emit("".join(f"{s}\t{v:.15g}\n" for s, v in enumerate(values)))
    if args.plot:
        from .plotting import plot_lhat

        plot_lhat(args.m, values, args.plot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shanksgf",
        description="Generating functions of the generalized Euler and class numbers s_{m,n}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gf", help="closed form of s_m(x)")
    p.add_argument("m", type=_positive)
    p.add_argument("--json", action="store_true", help="emit the structured record")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("coeffs", help="s_{m,0..N}")
    p.add_argument("m", type=_positive)
    p.add_argument("N", type=_nonnegative)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--bfile", action="store_true", help='lines "<n> <value>", no header')
    p.add_argument("--order", type=_nonnegative, default=DEFAULT_ORDER,
                   help=f"series truncation order (default {DEFAULT_ORDER}); must be >= N")
    p.add_argument("--plot", metavar="PATH", help="also write a coefficient-growth figure")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("verify", help="cross-check s_m against the independent oracles")
    p.add_argument("m", type=_positive)
    p.add_argument("--max-n", type=_nonnegative, default=6,
                   help="largest coefficient index for enum/recurrence (default 6)")
    p.add_argument("--checks", type=_checks, default=list(CHECKS),
                   help=f"comma list from {','.join(CHECKS)} (default all)")
    p.add_argument("--s", type=_positive, nargs="+", default=[2, 3],
                   help="arguments s for dirichlet/facto checks (default 2 3)")
    p.add_argument("--blocks", type=_positive, default=None,
                   help=f"complete character periods per L-value (default: up to {dirichlet.MAX_SUMMANDS:.0e} summands)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="PATH", help="also write a deviation figure")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dirichlet", help="numeric L_m(s) (plus) or L_{-m}(s) (minus)")
    p.add_argument("sign", choices=["plus", "minus"])
    p.add_argument("m", type=_positive)
    p.add_argument("s", type=_positive)
    p.add_argument("--blocks", type=_positive, default=None,
                   help=f"complete character periods (default: up to {dirichlet.MAX_SUMMANDS:.0e} summands)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dirichlet)

    p = sub.add_parser("enum", help="count Lambda-alternating augmented r-signed permutations")
    p.add_argument("r", type=int)
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("lhat", help="L-hat_m(0..s_max) from the generating function")
    p.add_argument("m", type=_positive)
    p.add_argument("s_max", type=_nonnegative)
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="PATH", help="also write a figure of the values")
    p.set_defaults(func=cmd_lhat)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"shanksgf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegralityError as exc:
        print(f"shanksgf: integrality check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
