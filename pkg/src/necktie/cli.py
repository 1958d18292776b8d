"""Command-line entry point: ``necktie verify|fuzz|figure``.

Exit codes: 0 every verdict holds, 1 something is violated, 2 only
degenerate failures or an invalid scene, 3 I/O or parse errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .errors import GeometryError, InvariantError
from .fuzz import DEFAULT_BOUND, FuzzPlan, Report, fuzz
from .render import LAYERS, FigureSpec, render_svg
from .scalars import DivisionByZero, ParseError
from .scene_io import emit_report, parse_scene, verify_scene
from .theorems import CLAIMS, Status

EXIT_OK, EXIT_VIOLATED, EXIT_DEGENERATE, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def _claim(value: str) -> str:
    if value != "all" and value not in CLAIMS:
        raise argparse.ArgumentTypeError(f"unknown claim {value!r}; choose from all, {', '.join(CLAIMS)}")
    return value


def _layers(value: str) -> tuple[str, ...]:
    names = tuple(n.strip() for n in value.split(",") if n.strip())
    bad = [n for n in names if n not in LAYERS]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"unknown layers {bad}; choose from {', '.join(LAYERS)}")
    return names


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="necktie", description="Exact verification of the necktie theorem family.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check claims on one scene file")
    v.add_argument("--claim", type=_claim, required=True)
    v.add_argument("--scene", required=True)

    f = sub.add_parser("fuzz", help="check claims on random configurations")
    f.add_argument("--claim", type=_claim, required=True)
    f.add_argument("--trials", type=_positive, default=1000)
    f.add_argument("--seed", type=int, default=42)
    f.add_argument("--bound", type=_positive, default=DEFAULT_BOUND)
    f.add_argument("--field", choices=("rational", "prime"), default="rational")

    g = sub.add_parser("figure", help="draw a scene as SVG")
    g.add_argument("--scene", required=True)
    g.add_argument("--layers", type=_layers, default=None)
    g.add_argument("--out", required=True)
    g.add_argument("--normalize", action="store_true", help="send A, B, C, P to a standard frame first")
    return ap


def _exit_code(report: Report) -> int:
    if report.count(Status.VIOLATED):
        return EXIT_VIOLATED
    if report.count(Status.DEGENERATE):
        return EXIT_DEGENERATE
    return EXIT_OK


def _read_scene(path: str):
    with open(path, "rb") as fh:
        return parse_scene(fh.read())


def _verify(args) -> int:
    scene = _read_scene(args.scene)
    trial = scene.trial()
    if args.claim != "all" and args.claim not in trial.applicable():
        raise InvariantError(f"scene lacks the data claim {args.claim} needs")
    report = verify_scene(scene, args.claim)
    sys.stdout.buffer.write(emit_report(report))
    return _exit_code(report)


def _fuzz(args) -> int:
    plan = FuzzPlan(seed=args.seed, trials=args.trials, bound=args.bound, field=args.field)
    report = fuzz(args.claim, plan)
    sys.stdout.buffer.write(emit_report(report))
    return _exit_code(report)


def _figure(args) -> int:
    scene = _read_scene(args.scene)
    if scene.cfg is None:
        raise InvariantError("scene has no triangle configuration to draw")
    spec = FigureSpec(layers=args.layers or FigureSpec().layers, normalize=args.normalize)
    svg = render_svg(scene.cfg, spec)
    with open(args.out, "wb") as fh:
        fh.write(svg)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"verify": _verify, "fuzz": _fuzz, "figure": _figure}[args.command]
    try:
        return handler(args)
    except (ParseError, DivisionByZero) as exc:
        print(f"necktie: parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"necktie: {exc}", file=sys.stderr)
        return EXIT_IO
    except (InvariantError, GeometryError, ValueError) as exc:
        print(f"necktie: invalid scene: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
