"""Command-line client for the analysis library.

Subcommands mirror the service endpoints: kmatrix, rank, stability,
impulse, compare, plus serve to run the HTTP service.  Exit codes:
2 usage error, 3 unreadable or invalid map document, 4 impulse analysis
blocked by instability or divergence, 5 path enumeration over the cap.
"""
from __future__ import annotations

import argparse
import sys

from .errors import (
    DivergenceDetected,
    MapParseError,
    MapValidationError,
    PathExplosion,
    Unstable,
)
from .impulse import impulse_closed_form, impulse_simulate, parse_vector_spec
from .mapio import load_map
from .model import scale_map
from .report import (
    METRICS,
    analyze,
    render_impulse_trajectory,
    render_impulse_values,
    render_report,
)

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_UNSTABLE = 4
EXIT_PATH_EXPLOSION = 5


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--format",
        choices=("text", "csv", "json"),
        default=d if suppress else "text",
        help="output format (default: text)",
    )
    parser.add_argument(
        "--normalize",
        type=float,
        metavar="C",
        default=d,
        help="divide weights by C before impulse analysis; the influence "
        "matrix always uses the raw weights",
    )
    parser.add_argument(
        "--path-cap",
        type=int,
        metavar="N",
        default=d if suppress else 1_000_000,
        help="abort when a pair has more than N simple paths (default: 1000000)",
    )
    parser.add_argument(
        "--parallel",
        type=int,
        metavar="K",
        default=d if suppress else 1,
        help="worker processes for the influence matrix (default: 1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cogmap",
        description="Analyze cognitive maps: pairwise influence via the "
        "circuit method and pulse propagation via the impulse method.",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kmatrix", help="print the pairwise influence matrix")
    p.add_argument("map", help="map file (.json document or .csv edge list)")
    _add_common(p, suppress=True)

    p = sub.add_parser("rank", help="rank concepts by a collective influence metric")
    p.add_argument("map")
    p.add_argument("--metric", choices=METRICS, default="pressure")
    p.add_argument("--method", choices=("k", "impulse", "both"), default="k")
    _add_common(p, suppress=True)

    p = sub.add_parser("stability", help="spectral radius report")
    p.add_argument("map")
    _add_common(p, suppress=True)

    p = sub.add_parser("impulse", help="closed-form values or a pulse trajectory")
    p.add_argument("map")
    p.add_argument(
        "--p0",
        default="all-ones",
        help="initial pulse: comma-separated numbers, 'all-ones', 'zero' "
        "or 'unit:<concept id>' (default: all-ones)",
    )
    p.add_argument(
        "--v-init",
        default="zero",
        help="initial values, same forms as --p0 (default: zero)",
    )
    p.add_argument(
        "--steps",
        type=int,
        default=None,
        metavar="N",
        help="simulate N steps and print the trajectory instead of the "
        "closed-form limit",
    )
    _add_common(p, suppress=True)

    p = sub.add_parser("compare", help="full circuit-vs-impulse report with rank agreement")
    p.add_argument("map")
    _add_common(p, suppress=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _validated(args: argparse.Namespace, parser: argparse.ArgumentParser):
    normalize = getattr(args, "normalize", None)
    if normalize == 0:
        parser.error("--normalize must be nonzero")
    if getattr(args, "path_cap", 1) < 1:
        parser.error("--path-cap must be >= 1")
    if getattr(args, "parallel", 1) < 1:
        parser.error("--parallel must be >= 1")
    if getattr(args, "steps", None) is not None and args.steps < 0:
        parser.error("--steps must be >= 0")
    return normalize


def _run(args: argparse.Namespace, normalize) -> str:
    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return ""

    cmap = load_map(args.map)

    if args.command == "stability":
        report = analyze(cmap, normalize=normalize)
        return render_report(report, args.format)

    if args.command == "kmatrix":
        report = analyze(
            cmap, include_k=True, metrics=(), cap=args.path_cap, workers=args.parallel
        )
        return render_report(report, args.format)

    if args.command == "rank":
        report = analyze(
            cmap,
            include_k=args.method in ("k", "both"),
            include_impulse=args.method in ("impulse", "both"),
            keep_matrix=False,
            metrics=(args.metric,),
            normalize=normalize,
            cap=args.path_cap,
            workers=args.parallel,
        )
        return render_report(report, args.format)

    if args.command == "compare":
        report = analyze(
            cmap,
            include_k=True,
            include_impulse=True,
            normalize=normalize,
            cap=args.path_cap,
            workers=args.parallel,
        )
        return render_report(report, args.format)

    if args.command == "impulse":
        target = cmap if normalize is None else scale_map(cmap, 1.0 / normalize)
        labels = [target.label_of(i + 1) for i in range(target.n)]
        try:
            v_init = parse_vector_spec(args.v_init, target.n)
            p0 = parse_vector_spec(args.p0, target.n)
        except ValueError as exc:
            raise MapParseError(str(exc)) from exc
        if args.steps is None:
            values = impulse_closed_form(target, v_init, p0)
            return render_impulse_values(values, labels, args.format)
        state = impulse_simulate(target, v_init, p0, args.steps)
        return render_impulse_trajectory(state, labels, args.format)

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    normalize = _validated(args, parser)
    try:
        output = _run(args, normalize)
    except (MapParseError, MapValidationError) as exc:
        print(f"cogmap: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Unstable, DivergenceDetected) as exc:
        hint = "" if normalize is not None else " (try --normalize)"
        print(f"cogmap: {exc}{hint}", file=sys.stderr)
        return EXIT_UNSTABLE
    except PathExplosion as exc:
        print(f"cogmap: {exc}", file=sys.stderr)
        return EXIT_PATH_EXPLOSION
    if output:
        sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
