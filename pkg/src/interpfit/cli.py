"""Command-line front end.

    interpfit interp --method newton --input pts.csv --grid 0:1:11
    interpfit interp --method hermite --input pts.csv --at 0.25,0.5
    interpfit interp --method spline --input pts.csv --json
    interpfit fit --model multilinear --input loans.csv
    interpfit demo runge --degree 10 --nodes chebyshev
    interpfit nodes --n 4 --interval -1,1

Data goes to stdout, diagnostics to stderr. Exit codes: 0 ok, 2 bad
input, 3 duplicate nodes, 4 singular system, 5 non-positive data for a
log-linearized fit.

CSV input is comma separated with an optional header row (detected when the
first row is not numeric). Numbers are written in shortest round-trip form,
so re-parsing the output gives back the exact floats.

JSON key order is fixed:
  interp newton       method, centers, coefficients
  interp spline       method, knots, a, b, c, d
  interp lagrange     method, nodes, values        (neville likewise)
  interp hermite      method, nodes, values, derivatives
  fit                 model, theta, sse, n_samples
For ``fit`` the theta order is (intercept, slope) for line, (a, b) for exp
(y = b e^(a x)) and power (y = b x^a), and (theta_0, theta_1, ...) for
multilinear, where theta_0 multiplies the constant column.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import chebyshev, fitting, hermite, polyinterp, spline
from .errors import (
    DegenerateData,
    DuplicateNode,
    InterpfitError,
    NonPositiveData,
    SingularMatrix,
)
from .samples import HermiteSampleSet, SampleSet

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DUPLICATE = 3
EXIT_SINGULAR = 4
EXIT_DOMAIN = 5

# flags whose values may legitimately start with "-"
_VALUE_FLAGS = {"--grid", "--at", "--interval"}


class UsageError(Exception):
    pass


def fmt(v) -> str:
    return repr(float(v))


def read_points(path: str) -> np.ndarray:
    """Parse a numeric CSV into an (m, k) array; all rows must have k columns."""
    try:
        with open(path, newline="") as fh:
            rows = [r for r in csv.reader(fh) if r and any(f.strip() for f in r)]
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if rows:
        try:
            [float(f) for f in rows[0]]
        except ValueError:
            rows = rows[1:]
    if not rows:
        raise UsageError(f"{path}: no data rows")
    width = len(rows[0])
    data = []
    for lineno, row in enumerate(rows, 1):
        if len(row) != width:
            raise UsageError(f"{path}: row {lineno} has {len(row)} fields, expected {width}")
        try:
            vals = [float(f) for f in row]
        except ValueError:
            raise UsageError(f"{path}: row {lineno} is not numeric") from None
        if not all(math.isfinite(v) for v in vals):
            raise UsageError(f"{path}: row {lineno} has a non-finite value")
        data.append(vals)
    return np.array(data, dtype=np.float64)


def parse_grid(text: str) -> np.ndarray:
    try:
        start, stop, count = text.split(":")
        start, stop, count = float(start), float(stop), int(count)
    except ValueError:
        raise UsageError(f"bad grid {text!r}; expected start:stop:count") from None
    if count < 2 or not start < stop:
        raise UsageError(f"bad grid {text!r}; need start < stop and count >= 2")
    return np.linspace(start, stop, count)


def parse_at(text: str) -> np.ndarray:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"bad point list {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise UsageError("evaluation points must be finite")
    return np.array(vals, dtype=np.float64)


def parse_interval(text: str) -> tuple[float, float]:
    try:
        a, b = (float(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad interval {text!r}; expected a,b") from None
    if not a < b:
        raise UsageError(f"bad interval {text!r}; need a < b")
    return a, b


def _csv(header, columns) -> str:
    lines = [",".join(header)]
    for row in zip(*columns):
        lines.append(",".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


def cmd_interp(args, out, err) -> int:
    data = read_points(args.input)
    method = args.method
    want = 3 if method == "hermite" else 2
    if data.shape[1] != want:
        raise UsageError(f"method {method} needs {want}-column input, got {data.shape[1]}")
    if args.json:
        t = None
    elif args.grid is not None:
        t = parse_grid(args.grid)
    elif args.at is not None:
        t = parse_at(args.at)
    else:
        raise UsageError("give --grid, --at or --json")

    if method == "hermite":
        h = HermiteSampleSet(data[:, 0], data[:, 1], data[:, 2])
        if t is None:
            out.write(_dump({
                "method": method,
                "nodes": h.x.tolist(),
                "values": h.y.tolist(),
                "derivatives": h.dy.tolist(),
            }))
            return EXIT_OK
        out.write(_csv(("x", "y"), (t, hermite.hermite_eval(h, t))))
        return EXIT_OK

    samples = SampleSet(data[:, 0], data[:, 1])
    if method == "lagrange" or method == "neville":
        if t is None:
            out.write(_dump({"method": method, "nodes": samples.x.tolist(), "values": samples.y.tolist()}))
            return EXIT_OK
        if method == "lagrange":
            y = polyinterp.lagrange_eval(samples, t)
        else:
            y = np.array([polyinterp.neville_eval(samples, v).apex for v in t])
    elif method == "newton":
        p = polyinterp.newton_build(samples)
        if t is None:
            out.write(_dump({"method": method, "centers": list(p.centers), "coefficients": list(p.coefficients)}))
            return EXIT_OK
        y = polyinterp.newton_eval(p, t)
    else:
        s = spline.natural_cubic_spline(samples)
        if t is None:
            out.write(_dump({
                "method": method,
                "knots": s.knots.tolist(),
                "a": s.a.tolist(),
                "b": s.b.tolist(),
                "c": s.c.tolist(),
                "d": s.d.tolist(),
            }))
            return EXIT_OK
        y = spline.spline_eval(s, t)
        n_out = int(np.count_nonzero(s.outside(t)))
        if n_out:
            err.write(
                f"warning: {n_out} point(s) outside [{fmt(s.knots[0])}, {fmt(s.knots[-1])}]; "
                "extrapolated with the end pieces\n"
            )
    out.write(_csv(("x", "y"), (t, y)))
    return EXIT_OK


def cmd_fit(args, out, err) -> int:
    data = read_points(args.input)
    model = fitting.ModelKind(args.model)
    if model is fitting.ModelKind.MULTILINEAR:
        if data.shape[1] < 2:
            raise UsageError("multilinear input needs at least one feature column and a y column")
        res = fitting.fit_normal_equations(fitting.DesignMatrix.from_features(data[:, :-1], data[:, -1]))
    else:
        if data.shape[1] != 2:
            raise UsageError(f"model {model.value} needs 2-column input, got {data.shape[1]}")
        x, y = data[:, 0], data[:, 1]
        if model is fitting.ModelKind.LINE:
            res = fitting.fit_line(x, y)
        else:
            res = fitting.fit_transformed(x, y, model)
    out.write(_dump({
        "model": model.value,
        "theta": [float(v) for v in res.theta],
        "sse": res.sse,
        "n_samples": res.n_samples,
    }))
    return EXIT_OK


def runge_table(degree: int, node_kind: str, grid_size: int):
    """Grid, f, interpolant and |error| for the Runge function on [-1, 1]."""
    if node_kind == "chebyshev":
        nodes = np.array(chebyshev.chebyshev_nodes(degree).nodes)
    else:
        nodes = chebyshev.equispaced_nodes(degree)
    samples = SampleSet(nodes, chebyshev.runge_function(nodes))
    interp = lambda v: polyinterp.lagrange_eval(samples, v)  # noqa: E731
    report = chebyshev.max_abs_error(chebyshev.runge_function, interp, -1.0, 1.0, grid_size)
    grid = np.linspace(-1.0, 1.0, grid_size)
    f = chebyshev.runge_function(grid)
    p = interp(grid)
    return grid, f, p, np.abs(f - p), report


def cmd_demo_runge(args, out, err) -> int:
    if args.degree < 1:
        raise UsageError("--degree must be >= 1")
    if args.grid_size < 2:
        raise UsageError("--grid-size must be >= 2")
    grid, f, p, e, report = runge_table(args.degree, args.nodes, args.grid_size)
    text = _csv(("x", "f", "p", "abs_err"), (grid, f, p, e))
    text += f"# max_err={fmt(report.max_abs_error)} at x={fmt(report.location)}\n"
    out.write(text)
    return EXIT_OK


def cmd_nodes(args, out, err) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    a, b = parse_interval(args.interval)
    grid = chebyshev.chebyshev_nodes(args.n, a, b)
    out.write("".join(fmt(v) + "\n" for v in grid.nodes))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="interpfit", description="Interpolation and least-squares fitting.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("interp", help="evaluate an interpolant on a grid or at points")
    p.add_argument("--method", required=True, choices=["lagrange", "newton", "neville", "hermite", "spline"])
    p.add_argument("--input", required=True, help="CSV of x,y (or x,y,dy for hermite)")
    p.add_argument("--grid", help="start:stop:count, inclusive")
    p.add_argument("--at", help="comma-separated evaluation points")
    p.add_argument("--json", action="store_true", help="emit coefficients as JSON instead")
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("fit", help="least-squares fit; prints JSON")
    p.add_argument("--model", required=True, choices=[k.value for k in fitting.ModelKind])
    p.add_argument("--input", required=True, help="CSV; for multilinear the last column is y")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("demo", help="demonstrations")
    demo = p.add_subparsers(dest="demo", required=True)
    r = demo.add_parser("runge", help="Runge function vs. its interpolant on [-1, 1]")
    r.add_argument("--degree", type=int, required=True)
    r.add_argument("--nodes", choices=["equispaced", "chebyshev"], default="equispaced")
    r.add_argument("--grid-size", type=int, default=chebyshev.DEFAULT_GRID_SIZE)
    r.set_defaults(func=cmd_demo_runge)

    p = sub.add_parser("nodes", help="Chebyshev nodes, ascending")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--interval", default="-1,1", help="a,b")
    p.set_defaults(func=cmd_nodes)
    return parser


def _join_values(argv):
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_join_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        code, msg = EXIT_INPUT, str(exc)
    except DuplicateNode as exc:
        code, msg = EXIT_DUPLICATE, str(exc)
    except (SingularMatrix, DegenerateData) as exc:
        code, msg = EXIT_SINGULAR, str(exc)
    except NonPositiveData as exc:
        code, msg = EXIT_DOMAIN, str(exc)
    except (InterpfitError, ValueError) as exc:
        code, msg = EXIT_INPUT, str(exc)
    err.write(f"interpfit: error: {msg}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
