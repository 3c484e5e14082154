"""Command-line interface.

Trace-producing subcommands (streamline, tornado) write CSV or SVG. The
others print a single ``key=value`` report line; fit can also draw its data
and fitted curve as SVG. Exit status: 0 success, 1 domain error (the error
code is printed on stderr as ``error: <Code>: <message>``), 2 usage error.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .contour import DEFAULT_SAMPLES, ClosedContour, circ_flux, laurent_coeff
from .errors import IoError, SpiralVortexError
from .field_core import FieldParams, classify_field, eval_field, pitch_angle
from .output import read_csv, tornado_polylines, trace_table, write_csv, write_svg
from .spiral_fit import fit_polar, fit_spiral, unwrap_polar
from .streamline import PolarSpiral, analytic_streamline, integrate_streamline, polar_point
from .tornado3d import TornadoParams, canonicalize_matrix3, classify_matrix3, tornado_trace

SVG_COMMANDS = {"streamline", "tornado", "fit"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return s[1:] if s == "-0.000000" else s


def _report(pairs) -> str:
    return " ".join(f"{k}={v if isinstance(v, str) else _fmt(v)}" for k, v in pairs) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spiralvortex", description="Spiral-vortex fields c/conj(z) and their 3D extension.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("csv", "svg"), default="csv")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    def field_flags(p):
        p.add_argument("--a", type=float, required=True, help="flux / 2pi")
        p.add_argument("--b", type=float, required=True, help="circulation / 2pi")

    p = sub.add_parser("field", help="evaluate V at one point")
    field_flags(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    common(p)

    p = sub.add_parser("classify", help="source/sink/vortex class and pitch angle")
    field_flags(p)
    common(p)

    p = sub.add_parser("streamline", help="closed-form (or RK4) streamline")
    field_flags(p)
    p.add_argument("--r0", type=float, required=True, help="initial radius C")
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--steps", type=int, default=1000, help="closed-form intervals")
    p.add_argument("--step", type=float, default=1e-3, help="RK4 step")
    p.add_argument("--numeric", action="store_true", help="integrate with RK4 instead")
    common(p)

    p = sub.add_parser("circulation", help="circulation and flux around a circle")
    field_flags(p)
    p.add_argument("--center-x", type=float, default=0.0)
    p.add_argument("--center-y", type=float, default=0.0)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--nsamples", type=int, default=DEFAULT_SAMPLES)
    common(p)

    p = sub.add_parser("laurent", help="Laurent coefficient of conj(V)")
    field_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--nsamples", type=int, default=DEFAULT_SAMPLES)
    common(p)

    p = sub.add_parser("tornado", help="3D spiral trace")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--r0", type=float, required=True)
    p.add_argument("--z0", type=float, required=True)
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--steps", type=int, default=1000)
    common(p)

    p = sub.add_parser("canonical", help="eigen-structure and canonical basis of a 3x3 matrix")
    p.add_argument("--matrix", required=True, help="9 comma-separated reals, row-major")
    common(p)

    p = sub.add_parser("fit", help="fit an equiangular spiral to points")
    p.add_argument("--input", required=True, help="CSV with header x,y (or theta,r with --polar)")
    p.add_argument("--polar", action="store_true")
    common(p)
    return parser


def _parse_matrix(text: str) -> np.ndarray:
    parts = [s for s in text.replace(" ", "").split(",") if s]
    if len(parts) != 9:
        raise _UsageError(f"--matrix needs 9 comma-separated reals, got {len(parts)}")
    try:
        return np.array([float(s) for s in parts]).reshape(3, 3)
    except ValueError as exc:
        raise _UsageError(f"--matrix: {exc}") from exc


def _emit_text(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {out!r}: {exc.strerror or exc}") from exc


def _emit_table(header, rows, out) -> None:
    write_csv(header, rows, sys.stdout if out is None else out)


def _emit_svg(polys, out) -> None:
    write_svg(polys, sys.stdout if out is None else out)


def _cmd_field(args):
    c = FieldParams(args.a, args.b)
    u, v = eval_field(c, (args.x, args.y))
    _emit_text(_report([("u", u), ("v", v)]), args.out)


def _cmd_classify(args):
    c = FieldParams(args.a, args.b)
    pairs = [("class", classify_field(c).value)]
    pairs.append(("pitch_angle", "undefined" if c.b == 0 else pitch_angle(c)))
    _emit_text(_report(pairs), args.out)


def _cmd_streamline(args):
    c = FieldParams(args.a, args.b)
    if args.numeric:
        z0 = args.r0 * complex(math.cos(args.gamma), -math.sin(args.gamma))
        trace = integrate_streamline(c, (z0.real, z0.imag), args.t0, args.t1, args.step)
    else:
        trace = analytic_streamline(c, args.r0, args.gamma, args.t0, args.t1, args.steps)
    if args.format == "svg":
        _emit_svg([trace], args.out)
    else:
        _emit_table(*trace_table(trace), args.out)


def _cmd_circulation(args):
    g = ClosedContour.circle((args.center_x, args.center_y), args.radius, args.nsamples)
    res = circ_flux(FieldParams(args.a, args.b), g)
    _emit_text(_report([("circulation", res.circulation), ("flux", res.flux)]), args.out)


def _cmd_laurent(args):
    cn = laurent_coeff(FieldParams(args.a, args.b), args.n, args.radius, args.nsamples)
    _emit_text(_report([("n", str(args.n)), ("re", cn.real), ("im", cn.imag)]), args.out)


def _cmd_tornado(args):
    params = TornadoParams(args.k, args.p, args.r0, args.z0)
    trace = tornado_trace(params, args.t0, args.t1, args.steps)
    if args.format == "svg":
        _emit_svg(tornado_polylines(trace), args.out)
    else:
        _emit_table(*trace_table(trace), args.out)


def _cmd_canonical(args):
    A = _parse_matrix(args.matrix)
    es = classify_matrix3(A)
    if es.kind == "all_real":
        pairs = [("kind", "all_real"), ("roots", ",".join(_fmt(r) for r in es.roots)), ("margin", es.margin)]
    else:
        es = canonicalize_matrix3(A)
        pairs = [
            ("kind", "spiral"), ("a", es.a), ("b", es.b), ("p", es.p),
            ("condition", es.condition), ("margin", es.margin),
            ("basis", ",".join(_fmt(v) for v in es.basis.ravel())),
        ]
    _emit_text(_report(pairs), args.out)


def _cmd_fit(args):
    if args.polar:
        data = read_csv(args.input, ("theta", "r"))
        fit = fit_polar(data[:, 0], data[:, 1])
        pts = np.column_stack([data[:, 1] * np.cos(data[:, 0]), data[:, 1] * np.sin(data[:, 0])])
        theta = data[:, 0]
    else:
        pts = read_csv(args.input, ("x", "y"))
        fit = fit_spiral(pts)
        theta, _ = unwrap_polar(pts)
    if args.format == "svg":
        th = np.linspace(theta.min(), theta.max(), 400)
        curve = polar_point(PolarSpiral(fit.r0, fit.k, 0.0), th)
        _emit_svg([pts, curve], args.out)
        return
    pairs = [("r0", fit.r0), ("k", fit.k), ("gamma", fit.gamma), ("rmse", fit.rmse),
             ("pitch_deg", fit.pitch_deg), ("n", str(fit.n))]
    _emit_text(_report(pairs), args.out)


_COMMANDS = {
    "field": _cmd_field,
    "classify": _cmd_classify,
    "streamline": _cmd_streamline,
    "circulation": _cmd_circulation,
    "laurent": _cmd_laurent,
    "tornado": _cmd_tornado,
    "canonical": _cmd_canonical,
    "fit": _cmd_fit,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.format == "svg" and args.command not in SVG_COMMANDS:
            raise _UsageError(f"spiralvortex {args.command}: --format svg is only valid for "
                              f"{', '.join(sorted(SVG_COMMANDS))}")
        _COMMANDS[args.command](args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except SpiralVortexError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
