"""Command-line interface: ``torusgrid <command> <series> <rank> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings

import numpy as np

from . import grids, transform, weyl
from .algebra import build, volume_of_F
from .errors import GridMismatch, TorusGridError
from .grids import GridPoint, WeightPoint
from .orbitfn import eval_C_grid, eval_C_real, eval_S_grid, eval_S_real

EXIT_FAIL = 1
EXIT_ERROR = 2


class InputError(TorusGridError):
    code = "bad-input"


# Built-in test functions of the coweight coordinates y.
SAMPLE_FUNCTIONS = {
    "gauss": lambda y: math.exp(-10.0 * float(np.sum((y - 0.1) ** 2))),
    "poly": lambda y: 1.0 + float(np.sum(np.arange(1, len(y) + 1) * y)) ** 2,
    "wave": lambda y: complex(np.cos(3.0 * np.sum(y)), np.sin(2.0 * y[0])),
}


def _fmt_num(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def _emit(out, fields, fmt):
    """Write ``(name, value)`` pairs as aligned text or a JSON object."""
    if fmt == "json":
        out.write(json.dumps(dict(fields), sort_keys=False) + "\n")
        return
    width = max(len(k) for k, _ in fields)
    for key, value in fields:
        if isinstance(value, (list, tuple)):
            value = " ".join(_fmt_num(v) for v in value)
        elif isinstance(value, dict):
            value = " ".join(f"{k}:{_fmt_num(v)}" for k, v in value.items())
        else:
            value = _fmt_num(value) if isinstance(value, (int, float, np.number)) else str(value)
        out.write(f"{key.ljust(width)}  {value}\n")


def _int_list(text, length=None, what="vector"):
    try:
        vals = [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"cannot parse {what} {text!r} as integers") from None
    if length is not None and len(vals) != length:
        raise InputError(f"{what} needs {length} entries, got {len(vals)}")
    return tuple(vals)


def _float_list(text, length):
    try:
        vals = [float(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"cannot parse point {text!r}") from None
    if len(vals) != length:
        raise InputError(f"point needs {length} coordinates, got {len(vals)}")
    return np.array(vals)


def _grid_point(data, text, M):
    s = _int_list(text, data.n + 1, "grid point")
    if min(s) < 0 or s[0] + sum(m * v for m, v in zip(data.marks, s[1:])) != M:
        raise InputError(f"{s} is not a point of F_{M}({data})")
    return GridPoint(M, s)


def _weight_point(data, text, M):
    t = _int_list(text, data.n + 1, "weight point")
    if min(t) < 0 or t[0] + sum(m * v for m, v in zip(data.dual_marks, t[1:])) != M:
        raise InputError(f"{t} is not a point of Lambda_{M}({data})")
    return WeightPoint(M, t)


# -- CSV formats ------------------------------------------------------------


def _read_table(path, prefix, n):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    header = [h.strip() for h in rows[0]] if rows else []
    expected = [f"{prefix}_{i}" for i in range(n + 1)] + ["re", "im"]
    if header != expected:
        raise InputError(f"{path}: header must be {','.join(expected)}")
    out = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != n + 3:
            raise InputError(f"{path}:{lineno}: expected {n + 3} fields")
        try:
            key = tuple(int(v) for v in row[: n + 1])
            val = complex(float(row[n + 1]), float(row[n + 2]))
        except ValueError:
            raise InputError(f"{path}:{lineno}: malformed number") from None
        if key in out:
            raise InputError(f"{path}:{lineno}: duplicate point {key}")
        out[key] = val
    if not out:
        raise InputError(f"{path}: no data rows")
    return out


def _infer_M(rows, weights, what):
    Ms = {k[0] + sum(w * v for w, v in zip(weights, k[1:])) for k in rows}
    if len(Ms) != 1 or min(Ms) < 1 or any(min(k) < 0 for k in rows):
        raise GridMismatch(f"{what} rows do not lie on a single grid (level sums {sorted(Ms)[:5]})")
    return Ms.pop()


def read_samples(data, path, kind) -> transform.SampleSet:
    """Load ``s_0..s_n,re,im`` rows and check they cover the expected grid."""
    rows = _read_table(path, "s", data.n)
    M = _infer_M(rows, data.marks, "sample")
    values = {GridPoint(M, k): v for k, v in rows.items()}
    samples = transform.SampleSet(M, kind, values)
    samples.as_array(data)
    return samples


def read_coefficients(data, path, kind) -> transform.CoefficientSet:
    rows = _read_table(path, "t", data.n)
    M = _infer_M(rows, data.dual_marks, "coefficient")
    coeffs = transform.CoefficientSet(M, kind, {WeightPoint(M, k): v for k, v in rows.items()})
    coeffs.as_array(data)
    return coeffs


def _write_table(out, prefix, n, items):
    out.write(",".join([f"{prefix}_{i}" for i in range(n + 1)] + ["re", "im"]) + "\n")
    for key, val in items:
        val = complex(val)
        out.write(",".join([str(v) for v in key] + [repr(val.real), repr(val.imag)]) + "\n")


def _open_out(path):
    return open(path, "w", newline="") if path and path != "-" else None


# -- commands -----------------------------------------------------------------


def cmd_info(data, args, out):
    fields = [
        ("algebra", str(data)),
        ("rank", data.n),
        ("weyl_order", data.weyl_order),
        ("volume", volume_of_F(data)),
        ("center_order", data.cartan_det),
        ("coxeter_number", data.coxeter),
        ("L", data.L),
        ("N", data.N),
        ("marks", list(data.marks)),
        ("dual_marks", list(data.dual_marks)),
        ("cartan", [list(r) for r in data.cartan] if args.format == "json" else
         " | ".join(" ".join(map(str, r)) for r in data.cartan)),
    ]
    _emit(out, fields, args.format)


def _points_cmd(data, args, out, enum, attr, label):
    pts = enum(data, args.M, interior_only=args.interior)
    rows = [getattr(p, attr) for p in pts]
    if args.format == "json":
        out.write(json.dumps({"algebra": str(data), "M": args.M, "count": len(rows),
                              label: [list(r) for r in rows]}) + "\n")
    elif args.format == "csv":
        out.write(",".join(f"{attr}_{i}" for i in range(data.n + 1)) + "\n")
        for r in rows:
            out.write(",".join(map(str, r)) + "\n")
    else:
        out.write(f"# {data.lie_type.series} {data.n} {args.M} {len(rows)}\n")
        for r in rows:
            out.write(" ".join(map(str, r)) + "\n")


def cmd_grid(data, args, out):
    _points_cmd(data, args, out, grids.enumerate_F, "s", "points")


def cmd_weights(data, args, out):
    _points_cmd(data, args, out, grids.enumerate_Lambda, "t", "weights")


def cmd_count(data, args, out):
    M = args.M
    strata = {K: grids.count_primitive(data, M // K) for K in grids.divisors(M)}
    fields = [
        ("algebra", str(data)),
        ("M", M),
        ("F_M", grids.count_F(data, M)),
        ("F_M_interior", grids.count_F_interior(data, M)),
        ("Lambda_M", grids.count_Lambda(data, M)),
        ("Lambda_M_interior", grids.count_Lambda_interior(data, M)),
        ("gcd_strata", {str(k): v for k, v in strata.items()} if args.format == "json" else strata),
    ]
    _emit(out, fields, args.format)


def cmd_stab(data, args, out):
    if args.dual:
        point = _weight_point(data, args.point, args.M)
        rep = weyl.stabilizer_order_lambda(data, point)
    else:
        point = _grid_point(data, args.point, args.M)
        rep = weyl.stabilizer_order_x(data, point)
    fields = [
        ("algebra", str(data)),
        ("M", args.M),
        ("coords", list(point.t if args.dual else point.s)),
        ("zero_nodes", list(rep.zero_nodes)),
        ("components", list(rep.component_weyl_orders)),
        ("stabilizer_order", rep.order),
        ("orbit_size", data.weyl_order // rep.order),
    ]
    _emit(out, fields, args.format)


def cmd_orbit(data, args, out):
    seed = _int_list(args.seed, data.n, "seed")
    elems = weyl.orbit(data, seed, basis=args.basis, cap=args.cap, signed=args.signed)
    if args.format == "json":
        out.write(json.dumps({"algebra": str(data), "size": len(elems),
                              "orbit": [{"coords": list(e.coords), "sign": e.sign} for e in elems]}) + "\n")
        return
    out.write(f"# {data.lie_type.series} {data.n} orbit size {len(elems)}\n")
    for e in elems:
        out.write(" ".join(map(str, e.coords)) + (f" {e.sign:+d}" if args.signed else "") + "\n")


def cmd_eval(data, args, out):
    lam = _weight_point(data, args.weight, args.M)
    if args.point:
        x = _grid_point(data, args.point, args.M)
        f = eval_C_grid if args.kind == "C" else eval_S_grid
        val = f(data, lam, x, cap=args.cap)
    else:
        if not args.y:
            raise InputError("eval needs --point or --y")
        y = _float_list(args.y, data.n)
        f = eval_C_real if args.kind == "C" else eval_S_real
        val = f(data, lam, y, cap=args.cap)
    _emit(out, [("re", float(val.real)), ("im", float(val.imag))], args.format)


def cmd_sample(data, args, out):
    samples = transform.SampleSet.from_function(data, args.M, args.kind, SAMPLE_FUNCTIONS[args.func])
    target = _open_out(args.output) or out
    try:
        _write_table(target, "s", data.n, ((p.s, samples.values[p]) for p in samples.points(data)))
    finally:
        if target is not out:
            target.close()


def _cmd_transform(data, args, out, kind):
    samples = read_samples(data, args.input, kind)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", transform.EmptyGridWarning)
        fn = transform.ctransform if kind == "C" else transform.stransform
        coeffs = fn(data, samples, cap=args.cap)
    if kind == "S" and not coeffs.coeffs:
        args.err.write("warning[empty-grid]: M is below the Coxeter number; no coefficients\n")
    target = _open_out(args.output) or out
    try:
        _write_table(target, "t", data.n, ((w.t, coeffs.coeffs[w]) for w in coeffs.weights(data)))
    finally:
        if target is not out:
            target.close()


def cmd_ctransform(data, args, out):
    _cmd_transform(data, args, out, "C")


def cmd_stransform(data, args, out):
    _cmd_transform(data, args, out, "S")


def cmd_interpolate(data, args, out):
    coeffs = read_coefficients(data, args.coeffs, args.kind)
    with open(args.points, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r]
    expected = [f"y_{i}" for i in range(1, data.n + 1)]
    if not rows or [h.strip() for h in rows[0]] != expected:
        raise InputError(f"{args.points}: header must be {','.join(expected)}")
    try:
        pts = np.array([[float(v) for v in r] for r in rows[1:]], dtype=float).reshape(-1, data.n)
    except ValueError:
        raise InputError(f"{args.points}: malformed point row") from None
    fn = transform.interpolate_C if args.kind == "C" else transform.interpolate_S
    vals = fn(data, coeffs, pts, cap=args.cap) if len(pts) else np.zeros(0, dtype=complex)
    target = _open_out(args.output) or out
    try:
        target.write(",".join(expected + ["re", "im"]) + "\n")
        for y, v in zip(pts, vals):
            target.write(",".join([repr(float(c)) for c in y] + [repr(float(v.real)), repr(float(v.imag))]) + "\n")
    finally:
        if target is not out:
            target.close()


def cmd_verify(data, args, out):
    rep = transform.verify_orthogonality(data, args.M, args.kind, tolerance=args.tol, cap=args.cap)
    _emit(out, [
        ("algebra", str(data)),
        ("M", args.M),
        ("kind", args.kind),
        ("size", rep.size),
        ("max_offdiag", rep.max_offdiag),
        ("max_diag_relerr", rep.max_diag_relerr),
        ("tolerance", rep.tolerance),
        ("result", "pass" if rep.passed else "fail"),
    ], args.format)
    return 0 if rep.passed else EXIT_FAIL


def cmd_rmatrix(data, args, out):
    computed = grids.generate_R(data)
    stored = grids.stored_R(data)
    diffs = [
        (l, i, a, b)
        for l, (ra, rb) in enumerate(zip(computed.rows, stored.rows))
        for i, (a, b) in enumerate(zip(ra, rb))
        if a != b
    ]
    if computed.shape != stored.shape:
        diffs.append(("shape", computed.shape, stored.shape))
    if args.format == "json":
        out.write(json.dumps({"algebra": str(data), "L": data.L, "N": data.N,
                              "R": [list(r) for r in computed.rows], "matches_table": not diffs}) + "\n")
    else:
        out.write(f"# R({data}) L={data.L} N={data.N}\n")
        for row in computed.rows:
            out.write(" ".join(map(str, row)) + "\n")
        out.write(f"# table: {'match' if not diffs else f'{len(diffs)} differences'}\n")
        for d in diffs:
            out.write(f"# diff {d}\n")
    return 0 if not diffs else EXIT_FAIL


COMMANDS = {
    "info": cmd_info,
    "grid": cmd_grid,
    "weights": cmd_weights,
    "count": cmd_count,
    "stab": cmd_stab,
    "orbit": cmd_orbit,
    "eval": cmd_eval,
    "sample": cmd_sample,
    "ctransform": cmd_ctransform,
    "stransform": cmd_stransform,
    "interpolate": cmd_interpolate,
    "verify": cmd_verify,
    "rmatrix": cmd_rmatrix,
}


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("M must be >= 1")
    return v


def build_parser():
    parser = argparse.ArgumentParser(prog="torusgrid", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("series", help="algebra series A-G")
    common.add_argument("rank", type=int)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--cap", type=int, default=weyl.DEFAULT_CAP, help="orbit enumeration cap")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, *, M=False, kind=False):
        p = sub.add_parser(name, parents=[common], help=help_)
        if M:
            p.add_argument("--M", type=_positive_int, required=True)
        if kind:
            p.add_argument("--kind", choices=("C", "S"), default="C")
        return p

    add("info", "structural constants")
    add("grid", "list F_M", M=True).add_argument("--interior", action="store_true")
    add("weights", "list Lambda_M", M=True).add_argument("--interior", action="store_true")
    add("count", "point counts and gcd strata", M=True)
    p = add("stab", "stabilizer of a grid point (or weight with --dual)", M=True)
    p.add_argument("--point", required=True, help="barycentric coordinates s_0..s_n or t_0..t_n")
    p.add_argument("--dual", action="store_true")
    p = add("orbit", "Weyl orbit of a vector")
    p.add_argument("--seed", required=True)
    p.add_argument("--basis", choices=("weight", "coweight"), default="weight")
    p.add_argument("--signed", action="store_true")
    p = add("eval", "evaluate an orbit function", M=True, kind=True)
    p.add_argument("--weight", required=True, help="t_0..t_n")
    p.add_argument("--point", help="grid point s_0..s_n (exact phases)")
    p.add_argument("--y", help="real coweight coordinates y_1..y_n")
    p = add("sample", "sample a built-in function on a grid", M=True, kind=True)
    p.add_argument("--func", choices=sorted(SAMPLE_FUNCTIONS), default="gauss")
    p.add_argument("--output", "-o")
    for name in ("ctransform", "stransform"):
        p = add(name, f"discrete {name[0].upper()}-transform of a sample CSV")
        p.add_argument("--input", "-i", required=True)
        p.add_argument("--output", "-o")
    p = add("interpolate", "evaluate an interpolant at real points", kind=True)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--points", required=True, help="CSV with header y_1..y_n")
    p.add_argument("--output", "-o")
    p = add("verify", "check discrete orthogonality", M=True, kind=True)
    p.add_argument("--tol", type=float, default=1e-8)
    add("rmatrix", "regenerate R and compare with the stored table")
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    args.err = err
    try:
        data = build((args.series, args.rank))
        status = COMMANDS[args.command](data, args, out)
    except TorusGridError as exc:
        err.write(f"error[{exc.code}]: {exc}\n")
        return EXIT_ERROR
    except NotImplementedError as exc:
        err.write(f"error[unsupported]: {exc}\n")
        return EXIT_ERROR
    except OSError as exc:
        err.write(f"error[io]: {exc}\n")
        return EXIT_ERROR
    return status or 0


def run(argv):
    """Run a command in-process and return ``(status, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    try:
        status = main(argv, out, err)
    except SystemExit as exc:
        status = exc.code
    return status, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
