"""Command line interface: ``numrange {bounds,octagon,check,plot,ensemble}``.

Exit codes: 0 success, 2 bad input, 3 zero operator, 4 verification
failure, 5 output not writable.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import bound_report
from .enclosure import Polygon, Segment, octagon_closed_form
from .ensemble import DEFAULT_SIZES, FULL_SIZES, EnsembleConfig, run_ensemble, to_csv, to_json
from .errors import DimensionError, MatrixFormatError, ZeroOperatorError
from .linalg import NormKind, cartesian_split, spectral_norm
from .matrixio import read_matrix
from .oracle import DEFAULT_ANGLES, DEFAULT_RTOL, DEFAULT_SAMPLES, containment_violation, fov_sample, tangency_check
from .svgplot import render_svg

EXIT_INPUT = 2
EXIT_ZERO = 3
EXIT_VERIFY = 4
EXIT_IO = 5


class InputError(Exception):
    pass


def _sig12(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _sig12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sig12(v) for v in obj]
    return obj


def _emit(doc) -> None:
    print(json.dumps(_sig12(doc), indent=2))


def _load(path):
    try:
        return read_matrix(path)
    except (MatrixFormatError, DimensionError, ValueError) as exc:
        field = getattr(exc, "field", None)
        raise InputError(f"{path}: {exc}" + (f" (field: {field})" if field else "")) from None


def region_to_dict(region) -> dict:
    if isinstance(region, Segment):
        e = region.endpoint
        return {"kind": "segment", "endpoint": [e.real, e.imag], "vertices": region.vertices.tolist()}
    return {"kind": region.kind, "vertices": region.vertices.tolist()}


def _scaled(region, factor: float):
    if isinstance(region, Segment):
        return Segment(region.endpoint * factor)
    return Polygon(region.vertices * factor, region.shape)


def cmd_bounds(args) -> int:
    t = _load(args.matrix)
    try:
        report = bound_report(t)
    except ZeroOperatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO
    _emit(report.as_dict())
    return 0


def cmd_octagon(args) -> int:
    t = _load(args.matrix)
    region = octagon_closed_form(cartesian_split(t), args.norm)
    _emit({"norm": args.norm, **region_to_dict(region)})
    return 0


def cmd_check(args) -> int:
    t = _load(args.matrix)
    pair = cartesian_split(t)
    kind = NormKind(args.norm)
    region = octagon_closed_form(pair, kind)
    if args.debug_scale is not None:
        region = _scaled(region, args.debug_scale)
    tol = args.tol * (1.0 + spectral_norm(t))
    sample = fov_sample(t, args.angles, args.samples, args.seed)
    violation = containment_violation(region, sample.points)
    contained = violation <= tol
    report = {
        "kind": region.kind,
        "norm": kind.value,
        "tolerance": tol,
        "oracle_radius": sample.oracle_radius,
        "max_violation": max(violation, 0.0),
        "contained": contained,
        "tangency": None,
    }
    ok = contained
    if kind is NormKind.SPECTRAL and isinstance(region, Polygon):
        reps = tangency_check(pair, region, args.angles, tol)
        report["tangency"] = {
            r.name: {"offset": r.offset, "plus": r.touches_plus, "minus": r.touches_minus, "tangent": r.tangent}
            for r in reps
        }
        ok = ok and all(r.tangent for r in reps)
    _emit(report)
    return 0 if ok else EXIT_VERIFY


def cmd_plot(args) -> int:
    t = _load(args.matrix)
    svg = render_svg(t, args.angles)
    try:
        with open(args.output, "w") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    return 0


def cmd_ensemble(args) -> int:
    sizes = tuple(args.sizes) if args.sizes else (FULL_SIZES if args.full else DEFAULT_SIZES)
    try:
        config = EnsembleConfig(sizes, args.trials, args.seed, args.entry_range)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rows = run_ensemble(config, jobs=args.jobs)
    sys.stdout.write(to_csv(rows) if args.format == "csv" else to_json(config, rows) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--norm", choices=[k.value for k in NormKind], default="spectral",
                        help="norm for the polygon (default: spectral)")
    common.add_argument("--seed", type=int, default=0, help="random seed")
    common.add_argument("--angles", type=int, default=DEFAULT_ANGLES, help="boundary sweep resolution")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="random interior samples")
    common.add_argument("--tol", type=float, default=DEFAULT_RTOL,
                        help="relative tolerance, scaled by 1 + ||T||")

    parser = argparse.ArgumentParser(prog="numrange", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="numerical radius bounds as JSON")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("octagon", parents=[common], help="enclosing polygon as JSON")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_octagon)

    p = sub.add_parser("check", parents=[common], help="verify containment and tangency against the oracle")
    p.add_argument("matrix")
    p.add_argument("--debug-scale", type=float, default=None, metavar="FACTOR",
                   help="scale the polygon before checking (negative control)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("plot", parents=[common], help="write an SVG of the range, polygon and bounds")
    p.add_argument("matrix")
    p.add_argument("output")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("ensemble", parents=[common], help="mean bound ratios over random matrices")
    p.add_argument("--sizes", type=int, nargs="+", default=None, help="matrix sizes (default: 10 100)")
    p.add_argument("--full", action="store_true", help="also run m = 500 and 1000")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--entry-range", type=float, default=4.0, help="half-width of the entry distribution")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.set_defaults(func=cmd_ensemble)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
