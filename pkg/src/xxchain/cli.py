"""Command-line front end: sweep tables as CSV (default) or JSON.

Every subcommand writes one table. CSV has a header row, comma separators and
LF line endings; floats use the shortest repr that round-trips. JSON is
``{"meta": {...}, "rows": [[x, value, ...], ...]}`` with the column names in
``meta["columns"]``.

Exit codes: 0 success, 1 validation failure, 2 usage or parameter error.
"""

import argparse
from dataclasses import dataclass, field
import io
import json
import math
import sys

import numpy as np

from . import fidelity, kernel, pairstate, spectrum, thermo, validation
from .errors import DomainError, InvalidStateError, ResourceLimitError

CONVENTION = (
    "at an exact crossing field B = B_k the higher-field state is reported "
    "(region index counts crossings with B_k > B strictly)"
)


class UsageError(Exception):
    pass


@dataclass
class SweepTable:
    meta: dict
    columns: list
    rows: list = field(default_factory=list)

    def __post_init__(self):
        xs = [row[0] for row in self.rows]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("rows must be strictly increasing in the first column")

    def to_json(self) -> str:
        meta = dict(self.meta, columns=list(self.columns))
        return json.dumps({"meta": meta, "rows": [list(r) for r in self.rows]}) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(self.columns) + "\n")
        for row in self.rows:
            buf.write(",".join(_cell(v) for v in row) + "\n")
        return buf.getvalue()


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def _scalar(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    return float(v)


def _table(meta, columns, rows):
    rows = sorted(([_scalar(v) for v in r] for r in rows), key=lambda r: r[0])
    return SweepTable(meta=meta, columns=columns, rows=rows)


def _fields(args, default):
    """Field values from --b or --b-min/--b-max/--steps, else ``default()``."""
    grid = (args.b_min, args.b_max, args.steps)
    if args.b is not None:
        if any(v is not None for v in grid):
            raise UsageError("--b cannot be combined with --b-min/--b-max/--steps")
        return [args.b]
    if all(v is None for v in grid):
        return default()
    if any(v is None for v in grid):
        raise UsageError("a uniform grid needs all of --b-min, --b-max and --steps")
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    if args.steps > 1 and not args.b_max > args.b_min:
        raise UsageError("--b-max must exceed --b-min")
    return list(np.linspace(args.b_min, args.b_max, args.steps))


def _midpoints(n):
    return lambda: [spectrum.region_midpoint(n, k) for k in range(n + 1)]


def _region(n, b):
    return spectrum.region_index(spectrum.ChainSpec(n, b))


def cmd_crossings(args):
    fields = spectrum.crossing_fields(args.n)
    rows = [(k, b) for k, b in enumerate(fields, start=1)]
    return _table({"command": "crossings", "n": args.n, "notes": CONVENTION}, ["k", "b_k"], rows)


def cmd_energy(args):
    rows = []
    for b in _fields(args, _midpoints(args.n)):
        spec = spectrum.ChainSpec(args.n, b)
        e = spectrum.ground_energy(spec)
        if args.per_spin:
            e /= args.n
        rows.append((b, e, spectrum.region_index(spec)))
    meta = {"command": "energy", "n": args.n, "observable": "energy_per_spin" if args.per_spin else "energy",
            "notes": CONVENTION}
    return _table(meta, ["b", "energy", "k"], rows)


def cmd_corr(args):
    n = args.n
    if (args.b is None) == (args.k is None):
        raise UsageError("corr needs exactly one of --b or --k")
    k = args.k if args.k is not None else _region(n, args.b)
    kern = kernel.kernel_matrix(n, k)
    kind = args.kind
    if kind == "z":
        sites = [args.l] if args.l is not None else range(1, n + 1)
        rows = [(l, kernel.magnetization(kern, l)) for l in sites]
        column = "l"
    else:
        if args.l is None:
            raise UsageError(f"--kind {kind} needs --l")
        if args.m is not None:
            partners = [args.m]
        elif kind == "kernel":
            partners = range(1, n + 1)
        elif kind == "zz":
            partners = [m for m in range(1, n + 1) if m != args.l]
        else:
            partners = range(args.l + 1, n + 1)
        func = {"kernel": lambda m: kernel.kernel_entry(n, k, args.l, m),
                "zz": lambda m: kernel.zz_corr(kern, args.l, m),
                "xx": lambda m: kernel.xx_corr(kern, args.l, m)}[kind]
        rows = [(m, func(m)) for m in partners]
        column = "m"
    meta = {"command": "corr", "n": n, "k": k, "sites": [args.l] if args.l else [], "observable": kind,
            "notes": CONVENTION}
    return _table(meta, [column, "value"], rows)


def _entanglement(args, measure):
    n, l = args.n, args.l
    m = None
    if measure == "concurrence":
        m = args.m if args.m is not None else l + 1
        sites = [l, m]
    else:
        sites = [l]
    uses_grid = args.b is not None or args.b_min is not None
    if args.sweep and uses_grid:
        raise UsageError("--sweep cannot be combined with --b or a uniform grid")
    if not uses_grid:
        points = pairstate.measure_sweep(n, l, m, measure)
        rows = [(p.b, p.value, p.k) for p in points]
    else:
        rows = []
        for b in _fields(args, _midpoints(n)):
            k = _region(n, b)
            kern = kernel.kernel_matrix(n, k)
            if measure == "tangle":
                value = pairstate.one_tangle(kern, l)
            else:
                value = pairstate.pair_concurrence(kern, l, m)
            rows.append((b, value, k))
    meta = {"command": measure, "n": n, "sites": sites, "observable": measure, "notes": CONVENTION}
    return _table(meta, ["b", "value", "k"], rows)


def cmd_tangle(args):
    return _entanglement(args, "tangle")


def cmd_concurrence(args):
    return _entanglement(args, "concurrence")


def cmd_fidelity(args):
    points = fidelity.fidelity_sweep(args.n, args.site)
    rows = [(p.k, p.b_k, p.fid, p.chi) for p in points]
    meta = {"command": "fidelity", "n": args.n, "sites": [args.site], "observable": "fidelity",
            "notes": "susceptibility step is the crossing spacing B_{k-1} - B_k with B_0 = 1"}
    return _table(meta, ["k", "b_k", "fid", "chi"], rows)


THERMO = {
    "energy": lambda b, r: thermo.energy_per_spin(b),
    "mag": lambda b, r: thermo.bulk_magnetization(b),
    "zz": lambda b, r: thermo.bulk_zz(b, r),
    "xx": lambda b, r: thermo.bulk_xx(b, r),
    "xx-asymptote": lambda b, r: thermo.xx_asymptote(r),
    "concurrence": lambda b, r: thermo.bulk_concurrence(b, r),
    "k-fraction": lambda b, r: thermo.k_fraction(b),
}


def cmd_thermo(args):
    func = THERMO[args.observable]
    meta = {"command": "thermo", "observable": args.observable, "notes": "bulk spins, N -> infinity"}
    if args.observable == "xx-asymptote" or args.r_max is not None:
        r_max = args.r if args.r_max is None else args.r_max
        if r_max < args.r:
            raise UsageError("--r-max must be at least --r")
        bs = [0.0] if args.observable == "xx-asymptote" and args.b is None else _fields(args, lambda: [0.0])
        if len(bs) != 1:
            raise UsageError("a sweep over r needs a single field value")
        meta["b"] = bs[0]
        rows = [(r, func(bs[0], r)) for r in range(args.r, r_max + 1)]
        return _table(meta, ["r", "value"], rows)
    meta["r"] = args.r
    bs = _fields(args, lambda: list(np.linspace(-1.0, 1.0, 21)))
    return _table(meta, ["b", "value"], [(b, func(b, args.r)) for b in bs])


def cmd_validate(args):
    reports = validation.validate(args.n_max, args.cases_per_region, n_min=args.n_min)
    rows = []
    for rep in reports:
        rows.append([rep.n, rep.cases] + [rep.errors[c] for c in validation.CHECKS] + [rep.passed])
        for check in validation.CHECKS:
            err = rep.errors[check]
            status = "PASS" if err < validation.TOLERANCE else "FAIL"
            print(f"{status} n={rep.n} {check}: max error {err:.3e} (tol {validation.TOLERANCE:g})",
                  file=sys.stderr)
    meta = {"command": "validate", "tolerance": validation.TOLERANCE,
            "cases_per_region": args.cases_per_region, "notes": CONVENTION}
    table = _table(meta, ["n", "cases", *validation.CHECKS, "passed"], rows)
    return table, all(rep.passed for rep in reports)


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _finite(text):
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="xxchain",
        description="Exact ground-state properties of the open XX chain in a transverse field. "
                    "Coupling J = 1; fields are dimensionless. Convention: " + CONVENTION + ".",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--b", type=_finite, help="single field value")
    grid.add_argument("--b-min", type=_finite)
    grid.add_argument("--b-max", type=_finite)
    grid.add_argument("--steps", type=int)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("crossings", parents=[common], help="crossing fields B_k = cos(k pi / (N + 1))")
    p.add_argument("--n", type=_positive_int, required=True)
    p.set_defaults(func=cmd_crossings)

    p = sub.add_parser("energy", parents=[common, grid],
                       help="ground-state energy (default: one row per region midpoint)")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--per-spin", action="store_true")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("corr", parents=[common], help="kernel and spin correlators at one field or region")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--b", type=_finite)
    p.add_argument("--k", type=int, help="region index instead of a field")
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--kind", choices=("kernel", "z", "zz", "xx"), required=True)
    p.set_defaults(func=cmd_corr)

    for name, func in (("tangle", cmd_tangle), ("concurrence", cmd_concurrence)):
        p = sub.add_parser(name, parents=[common, grid],
                           help=f"{name} versus field (default: --sweep over region midpoints)")
        p.add_argument("--n", type=_positive_int, required=True)
        p.add_argument("--l", type=int, required=True)
        if name == "concurrence":
            p.add_argument("--m", type=int, help="second site (default l + 1)")
        p.add_argument("--sweep", action="store_true", help="one row per region midpoint")
        p.set_defaults(func=func)

    p = sub.add_parser("fidelity", parents=[common], help="coarse-grained single-spin fidelity and susceptibility")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--site", type=int, required=True)
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser("thermo", parents=[common, grid], help="thermodynamic-limit bulk quantities")
    p.add_argument("--observable", choices=tuple(THERMO), required=True)
    p.add_argument("--r", type=_positive_int, default=1, help="spin distance (default 1)")
    p.add_argument("--r-max", type=_positive_int, help="sweep distances r..r-max at one field")
    p.set_defaults(func=cmd_thermo)

    p = sub.add_parser("validate", parents=[common], help="compare analytic results with the brute-force oracle")
    p.add_argument("--n-max", type=_positive_int, default=10)
    p.add_argument("--n-min", type=_positive_int, default=2)
    p.add_argument("--cases-per-region", type=_positive_int, default=3)
    p.set_defaults(func=cmd_validate)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    status = 0
    try:
        result = args.func(args)
        if isinstance(result, tuple):
            result, ok = result
            status = 0 if ok else 1
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"xxchain {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ResourceLimitError, InvalidStateError) as exc:
        print(f"xxchain {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = result.to_json() if args.format == "json" else result.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main():
    sys.exit(run())
