"""The ``tlrep`` command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 when
``verify`` finds failures.  Diagnostics always go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from . import __version__
from .arquiver import full_quiver, quiver_for_label
from .catalog import (
    ModuleSum,
    composition_factors,
    dual_sum,
    injective_hull,
    loewy_layers,
    projective_cover,
)
from .errors import DomainError, ParseError
from .functors import induce_sum, restrict_sum
from .homology import UNKNOWN, ext_dim, hom_dim, sum_dim
from .orbits import AlgebraCtx, Family, is_critical, lambda_set, partition
from .textio import (
    emit_dot,
    emit_json,
    format_factors,
    parse_sum,
    quiver_to_json,
    sum_to_json,
)
from .verify import CHECKS, run_all


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this CLI reserves 2 for domain errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _bounded_int(lo: int):
    def conv(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be at least {lo}, got {v}")
        return v
    return conv


def _algebra_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--family", choices=[f.value for f in Family], default="tl")
    p.add_argument("--n", type=_bounded_int(1), required=True)
    p.add_argument("--ell", type=_bounded_int(2), required=True)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    return p


def build_parser() -> _Parser:
    parser = _Parser(prog="tlrep", description="Indecomposable modules over TL_n and dTL_n at roots of unity.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _algebra_flags()

    sub.add_parser("orbits", parents=[common], help="critical labels and the orbit partition")
    for name, help_ in [
        ("normalize", "canonical form of a module spec"),
        ("factors", "composition factors"),
        ("loewy", "Loewy layers, socle first"),
        ("dual", "twisted dual"),
        ("cover", "projective cover"),
        ("hull", "injective hull"),
        ("res", "restriction to n-1"),
        ("ind", "induction to n+1"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("spec")
    for name in ("hom", "ext"):
        sp = sub.add_parser(name, parents=[common], help=f"dimension of {name.capitalize()}(M, N)")
        sp.add_argument("m")
        sp.add_argument("n_spec", metavar="n")

    qp = sub.add_parser("quiver", parents=[common], help="Auslander-Reiten quiver of a block")
    which = qp.add_mutually_exclusive_group(required=True)
    which.add_argument("--k", type=int, help="any label of the block")
    which.add_argument("--all", action="store_true", help="every block of the algebra")
    qp.add_argument("--format", choices=["dot", "json"], default="dot")
    qp.add_argument("--show-tau", action="store_true", help="draw the translation as dashed edges")

    vp = sub.add_parser("verify", help="run the batch consistency checks")
    vp.add_argument("--max-n", type=_bounded_int(1), default=12)
    vp.add_argument("--max-ell", type=_bounded_int(2), default=6)
    vp.add_argument("--check", action="append", choices=sorted(CHECKS), help="run only this check (repeatable)")
    vp.add_argument("--json", action="store_true")
    return parser


def _ctx(args) -> AlgebraCtx:
    return AlgebraCtx(Family(args.family), args.n, args.ell)


def _layers_of_sum(s: ModuleSum) -> list[Counter]:
    out: list[Counter] = []
    for m, c in s.items():
        for i, layer in enumerate(loewy_layers(m)):
            while len(out) <= i:
                out.append(Counter())
            for k, d in layer.items():
                out[i][k] += c * d
    return out


def _emit_sum(args, s: ModuleSum, out, **extra) -> None:
    if args.json:
        print(emit_json({**sum_to_json(s), **extra}), file=out)
    else:
        print(s, file=out)


def _cmd_orbits(args, out) -> int:
    ctx = _ctx(args)
    crits = [k for k in lambda_set(ctx) if is_critical(ctx, k)]
    blocks = [orb for orb in partition(ctx) if not orb.critical]
    if args.json:
        print(emit_json({
            "critical": crits,
            "orbits": [{"members": list(o.members), "labels": list(o.labels)} for o in blocks],
        }), file=out)
        return 0
    print("critical: " + (", ".join(map(str, crits)) or "none"), file=out)
    for o in blocks:
        print("{" + ", ".join(map(str, o.members)) + "}", file=out)
    return 0


def _cmd_sum_op(args, out) -> int:
    ctx = _ctx(args)
    s = parse_sum(ctx, args.spec)
    cmd = args.command
    if cmd == "normalize":
        _emit_sum(args, s, out)
    elif cmd == "factors":
        f = composition_factors(s)
        if args.json:
            print(emit_json({"factors": sorted(f.elements())}), file=out)
        else:
            print(format_factors(f) or "none", file=out)
    elif cmd == "loewy":
        layers = _layers_of_sum(s)
        if args.json:
            print(emit_json({"layers": [sorted(x.elements()) for x in layers]}), file=out)
        else:
            for i, layer in enumerate(layers):
                print(f"{i}: {format_factors(layer)}", file=out)
    elif cmd == "dual":
        _emit_sum(args, dual_sum(s), out)
    elif cmd == "cover":
        _emit_sum(args, s.map(projective_cover), out)
    elif cmd == "hull":
        _emit_sum(args, s.map(injective_hull), out)
    elif cmd == "res":
        if ctx.n < 2:
            raise DomainError("restriction needs n >= 2")
        _emit_sum(args, restrict_sum(ctx, s), out, n=ctx.n - 1)
    elif cmd == "ind":
        _emit_sum(args, induce_sum(ctx, s), out, n=ctx.n + 1)
    return 0


def _cmd_dim(args, out) -> int:
    ctx = _ctx(args)
    a = parse_sum(ctx, args.m)
    b = parse_sum(ctx, args.n_spec)
    v = sum_dim(hom_dim if args.command == "hom" else ext_dim, a, b)
    if args.json:
        print(emit_json({"dim": None if v is UNKNOWN else v}), file=out)
    else:
        print(v, file=out)
    return 0


def _cmd_quiver(args, out) -> int:
    ctx = _ctx(args)
    quivers = full_quiver(ctx) if args.all else [quiver_for_label(ctx, args.k)]
    if args.format == "json":
        docs = [quiver_to_json(q) for q in quivers]
        print(emit_json(docs if args.all else docs[0]), file=out)
    else:
        out.write("".join(emit_dot(q, args.show_tau) for q in quivers))
    return 0


def _cmd_verify(args, out) -> int:
    results = run_all(args.max_n, args.max_ell, args.check)
    failed = sum(len(r.failures) for r in results)
    if args.json:
        print(emit_json({"checks": [
            {"name": r.name, "runs": r.runs, "failures": r.failures} for r in results
        ]}), file=out)
    else:
        for r in results:
            status = "ok" if r.ok else f"{len(r.failures)} failures"
            print(f"{r.name}: {r.runs} cases, {status}", file=out)
    for r in results:
        for msg in r.failures:
            print(f"{r.name}: {msg}", file=sys.stderr)
    return 3 if failed else 0


_DISPATCH = {
    "orbits": _cmd_orbits,
    "hom": _cmd_dim,
    "ext": _cmd_dim,
    "quiver": _cmd_quiver,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    handler = _DISPATCH.get(args.command, _cmd_sum_op)
    try:
        return handler(args, out)
    except ParseError as e:
        print(f"tlrep: parse error: {e}", file=sys.stderr)
        return 1
    except DomainError as e:
        print(f"tlrep: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
