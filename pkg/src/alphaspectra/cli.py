"""Command-line front end.

Exit codes: 0 ok, 1 a verification was falsified, 2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import extremal, spectral
from .digraph import Digraph, DigraphError, EvalPoint, charpoly_oracle
from .families import FamilySpec

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: str | None = None
    alpha: float = 0.0
    tol: float = 1e-12
    top: int | None = None
    output: str = "text"
    seed: int = 0
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise UsageError(f"alpha must lie in [0, 1), got {self.alpha}")
        if self.tol <= 0:
            raise UsageError("tol must be positive")


def _spec(text: str) -> FamilySpec:
    try:
        spec = FamilySpec.parse(text)
        spec.build()
    except DigraphError as exc:
        raise UsageError(str(exc)) from None
    return spec


def _digraph(args) -> tuple[Digraph, str]:
    if getattr(args, "load", None):
        try:
            with open(args.load) as fh:
                return Digraph.from_json(fh.read()), args.load
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot load {args.load}: {exc}") from None
    if not args.family:
        raise UsageError("give --family or --load")
    spec = _spec(args.family)
    return spec.build(), str(spec)


def _csv(header, row) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    w.writerow(row)
    return buf.getvalue()


def cmd_rho(args, out) -> int:
    cfg = RunConfig("rho", args.family, args.alpha, args.tol, output=args.output)
    g, name = _digraph(args)
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(g.to_json() + "\n")
    try:
        if args.method == "bisect":
            rho = spectral.rho_bisect(g, cfg.alpha, tol=cfg.tol)
            iterations, residual = None, None
        else:
            res = spectral.spectral_radius(g, cfg.alpha, tol=cfg.tol)
            rho, iterations, residual = res.rho, res.iterations, res.residual
    except spectral.ConvergenceError as exc:
        print(f"error: {exc}; best estimate {exc.best.rho:.{args.decimals}f} "
              f"(residual {exc.best.residual:.3e})", file=sys.stderr)
        return EXIT_NUMERIC
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except DigraphError as exc:
        raise UsageError(str(exc)) from None
    if cfg.output == "json":
        out.write(json.dumps({"digraph": name, "alpha": cfg.alpha, "rho": rho, "method": args.method,
                              "iterations": iterations, "residual": residual}, sort_keys=True) + "\n")
    elif cfg.output == "csv":
        out.write(_csv(["digraph", "alpha", "rho", "method", "iterations", "residual"],
                       [name, cfg.alpha, f"{rho:.{args.decimals}f}", args.method,
                        "" if iterations is None else iterations,
                        "" if residual is None else f"{residual:.3e}"]))
    else:
        extra = "" if iterations is None else f" iterations={iterations} residual={residual:.3e}"
        out.write(f"{name} alpha={cfg.alpha} rho={rho:.{args.decimals}f} method={args.method}{extra}\n")
    return EXIT_OK


def cmd_charpoly(args, out) -> int:
    spec = _spec(args.family)
    p = EvalPoint(args.x, args.alpha)
    try:
        closed = spectral.closed_form(spec, p)
    except ZeroDivisionError:
        raise UsageError("x must differ from alpha") from None
    oracle = charpoly_oracle(spec.build(), p)
    if args.output == "json":
        out.write(json.dumps({"family": str(spec), "x": args.x, "alpha": args.alpha,
                              "closed_form": closed, "oracle": oracle}, sort_keys=True) + "\n")
    elif args.output == "csv":
        out.write(_csv(["family", "x", "alpha", "closed_form", "oracle"],
                       [str(spec), args.x, args.alpha, f"{closed:.12g}", f"{oracle:.12g}"]))
    else:
        out.write(f"closed_form={closed:.12g} oracle={oracle:.12g}\n")
    return EXIT_OK


def _emit_ranked(ranked, args, out) -> int:
    if args.output == "json":
        out.write(ranked.to_json() + "\n")
    else:
        out.write(ranked.to_csv(args.decimals))
    return EXIT_OK


def cmd_table1(args, out) -> int:
    RunConfig("table1", alpha=args.alpha, top=args.top)
    try:
        ranked = extremal.rank_inf(args.m, args.alpha, args.top, restrict_middle=args.restrict_middle)
    except DigraphError as exc:
        raise UsageError(str(exc)) from None
    return _emit_ranked(ranked, args, out)


def cmd_table2(args, out) -> int:
    RunConfig("table2", alpha=args.alpha, top=args.top)
    try:
        ranked = extremal.rank_theta(args.m, args.s, args.t, args.alpha, args.top)
    except DigraphError as exc:
        raise UsageError(str(exc)) from None
    return _emit_ranked(ranked, args, out)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))
    return [getattr(args, n) for n in names]


VERIFIERS = {
    "rose_monotone": (("m", "k", "alpha"), extremal.verify_rose_monotone),
    "inf_max": (("m", "alpha"), extremal.verify_inf_max),
    "c_ordering": (("p", "q", "g", "alpha"), lambda p, q, g, a: extremal.verify_c_ordering(p, q, _spec(g), a)),
    "theta_block": (("m1", "m2", "s", "t", "alpha"), extremal.verify_theta_block),
    "theta_family": (("m", "s", "t", "alpha"), extremal.verify_theta_family),
    "joint_extremal": (("m", "k", "alpha"), extremal.verify_joint_extremal),
    "girth_chain": (("n", "alpha"), extremal.verify_girth_chain),
    "first_four": (("n", "alpha"), extremal.verify_first_four),
    "delta_threshold": (("m", "k"), extremal.scan_delta_threshold),
}


def cmd_verify(args, out) -> int:
    if args.theorem_id not in VERIFIERS:
        raise UsageError(f"unknown theorem id {args.theorem_id!r}; known: {', '.join(sorted(VERIFIERS))}")
    names, fn = VERIFIERS[args.theorem_id]
    values = _need(args, *names)
    if "alpha" in names:
        RunConfig("verify", alpha=args.alpha)
    try:
        report = fn(*values)
    except DigraphError as exc:
        raise UsageError(str(exc)) from None
    out.write(report.to_json() + "\n")
    return EXIT_OK if report.verified else EXIT_FALSIFIED


def cmd_conjecture(args, out) -> int:
    try:
        alphas = [float(a) for a in args.alphas.split(",")] if args.alphas else extremal.SCAN_ALPHAS
    except ValueError:
        raise UsageError(f"bad alpha list {args.alphas!r}") from None
    try:
        report = extremal.conjecture_scan(range(args.n_min, args.n_max + 1), alphas,
                                          boundary=not args.no_boundary)
    except DigraphError as exc:
        raise UsageError(str(exc)) from None
    # the label goes to stderr so stdout stays plain CSV
    print(report.label, file=sys.stderr)
    out.write(report.to_csv())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="alphaspectra", description="Alpha-spectral radii of digraph families.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, alpha_default=None):
        p.add_argument("--alpha", type=float, default=alpha_default, required=alpha_default is None)
        p.add_argument("--output", choices=("text", "csv", "json"), default="text")
        p.add_argument("--decimals", type=int, default=6)

    p = sub.add_parser("rho", help="spectral radius of one digraph")
    p.add_argument("--family")
    p.add_argument("--load", help="read a digraph JSON file instead of --family")
    p.add_argument("--dump", help="write the digraph as JSON")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--method", choices=("power", "bisect"), default="power")
    common(p)
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("charpoly", help="closed form against the determinant at one point")
    p.add_argument("--family", required=True)
    p.add_argument("--x", type=float, required=True)
    common(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("table1", help="rank tri-ring digraphs by radius")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--top", type=int, default=None)
    p.add_argument("--restrict-middle", action="store_true",
                   help="only tri-rings whose middle cycle has the median length")
    common(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="rank generalized thetas by radius")
    for name in ("m", "s", "t"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--top", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("verify", help="run one theorem check")
    p.add_argument("theorem_id")
    for name in ("m", "n", "k", "s", "t", "p", "q", "m1", "m2"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--g", help="base digraph spec for c_ordering")
    p.add_argument("--alpha", type=float)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="gap scan for 1/2 < alpha < 1")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--alphas", help="comma-separated grid inside (0.5, 1)")
    p.add_argument("--no-boundary", action="store_true")
    p.set_defaults(func=cmd_conjecture)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
