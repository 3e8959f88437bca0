"""Command-line front end.

    looijenga table log P2:H+Q --dmax 6
    looijenga table kontsevich --dmax 6
    looijenga table dt --loops 2 --dmax 12
    looijenga verify log-open --geometry dP3:D1+D2 --d0max 3
    looijenga bps P2:3H --dmax 6

Exit codes: 0 success, 1 a checked identity failed, 2 usage error.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from itertools import product

from . import bps, correspond
from .catalog import get_geometry, use_catalog
from .errors import EngineUnavailable, LooijengaError, UnknownGeometry
from .exact import rational_to_str
from .localgw import nloc
from .loggw import kontsevich
from .qcalc import QLaurent, QRational, eval_q1

__all__ = ["main", "build_parser", "class_grid", "suite_checks"]

TABLE_KINDS = ("log", "local", "open", "kp", "dt", "kontsevich")
SUITES = ("log-local", "log-open", "loc-open", "kp-lmov", "integrality", "all")
DEFAULT_GEOMETRIES = ("P2:H+Q", "P2:3H", "P1xP1:H1,H2,diag", "P(1,1,1):H+Q",
                      "P(1,1,2):H+Q", "P(1,1,3):H+Q", "dP3:D1+D2")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# serialisation


def _value(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, QLaurent):
        return x.to_json()
    if isinstance(x, QRational):
        return x.as_laurent().to_json() if x.is_laurent() else x.to_json()
    if isinstance(x, (Fraction, int)):
        return rational_to_str(x)
    if isinstance(x, (list, tuple)):
        return [_value(y) for y in x]
    return x


def record(geometry, cls, kind, genus, value, provenance, **extra):
    """InvariantRecord as a plain dict."""
    rec = {"geometry": geometry, "class": list(cls), "kind": kind, "genus": genus,
           "value": _value(value), "provenance": provenance}
    rec.update({k: _value(v) for k, v in extra.items()})
    return rec


def emit(rows, fmt, out):
    if fmt == "json":
        out.write(json.dumps(rows, sort_keys=True, indent=1) + "\n")
        return
    keys = sorted({k for row in rows for k in row})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (json.dumps(v, sort_keys=True) if isinstance(v, (list, dict)) else v)
                         for k, v in row.items()})
    out.write(buf.getvalue())


# ---------------------------------------------------------------------------
# class grids


def class_grid(geometry, dmax: int, d0max: int = 3):
    """Classes with every d.D_i > 0 up to the degree cap, in a fixed order."""
    entry = get_geometry(geometry)
    if entry.id.startswith("dP3"):
        # every other class with these d0 has a vanishing q-binomial on both sides
        cells = [(d0, d1, d2, d3) for d0 in range(1, d0max + 1) for d1 in range(1, d0 + 1)
                 for d2 in range(d0 + 1) for d3 in range(d0 + 1)]
    elif entry.rank == 1:
        cells = [(d,) for d in range(1, dmax + 1)]
    else:
        cells = [d for d in product(range(dmax + 1), repeat=entry.rank) if 0 < sum(d) <= dmax]
    return [d for d in cells if min(entry.degrees(d)) > 0]


# ---------------------------------------------------------------------------
# tables


def _log_rows(geometry, dmax, d0max):
    rows = []
    for d in class_grid(geometry, dmax, d0max):
        try:
            value = correspond.nlog_genus0(geometry, d)
            prov = "loggw"
        except EngineUnavailable:
            value = correspond.nlog_from_open(geometry, d).genus0
            prov = "correspond.nlog_from_open"
        extra = {}
        try:
            local = nloc(geometry, d)
            extra = {"nloc": local, "ratio": value / local if local else None}
        except LooijengaError:
            pass
        rows.append(record(geometry, d, "log", 0, value, prov, **extra))
    return rows


def _local_rows(geometry, dmax, d0max):
    rows = []
    for d in class_grid(geometry, dmax, d0max):
        try:
            rows.append(record(geometry, d, "local", 0, nloc(geometry, d), "localgw"))
        except LooijengaError:
            rows.append(record(geometry, d, "local", 0, correspond.nloc_from_open(geometry, d),
                               "correspond.nloc_from_open"))
    return rows


def _open_rows(geometry, dmax, d0max):
    rows = []
    for d in class_grid(geometry, dmax, d0max):
        series = correspond.open_value(geometry, d)
        rows.append(record(geometry, d, "open", "all", series, "vertex", genus0=eval_q1(series)))
    return rows


def _kp_rows(geometry, dmax, d0max):
    return [record(geometry, d, "KP", 0, bps.kp(geometry, d), "bps.kp")
            for d in class_grid(geometry, dmax, d0max)]


def cmd_table(args, out):
    kind = args.kind
    dmax = args.dmax if args.dmax is not None else args.cutoff
    if kind == "kontsevich":
        rows = [record("P2", (d,), "kontsevich", 0, kontsevich(d), "loggw.kontsevich")
                for d in range(1, dmax + 1)]
    elif kind == "dt":
        rows = [record(f"{args.loops}-loop quiver", (d,), "DT", 0, bps.dt_loop_quiver(args.loops, d),
                       "bps.dt_loop_quiver") for d in range(1, dmax + 1)]
    else:
        if not args.geometry:
            raise UsageError(f"table {kind} needs a geometry")
        get_geometry(args.geometry)
        build = {"log": _log_rows, "local": _local_rows, "open": _open_rows, "kp": _kp_rows}[kind]
        rows = build(args.geometry, dmax, args.d0max)
    emit(rows, args.format, out)
    return 0


# ---------------------------------------------------------------------------
# verification suites


_SUITE_GEOMETRIES = {
    "log-local": ("P2:H+Q", "P2:3H"),
    "log-open": ("P2:H+Q", "P2:3H", "P(1,1,1):H+Q", "P(1,1,2):H+Q", "P(1,1,3):H+Q", "dP3:D1+D2"),
    "loc-open": ("P2:H+Q", "P2:3H", "P1xP1:H1,H2,diag"),
    "kp-lmov": DEFAULT_GEOMETRIES,
    "integrality": DEFAULT_GEOMETRIES,
}


def _kp_lmov(geometry, d):
    entry = get_geometry(geometry)
    a = bps.kp(entry, d)
    b = bps.lmov0(bps.open_values_for(entry), d, entry.l)
    return correspond.CheckReport("kp-lmov", entry.id, tuple(d), a, b, 1, a == b)


def _integrality(geometry, d):
    entry = get_geometry(geometry)
    k = bps.kp(entry, d)
    windings = entry.apply_iota(d)[1]
    lq, lq_ok = bps.lmov_q(bps.open_series_for(entry), d, windings, entry.l)
    lb, lb_ok = bps.log_bps(entry, d)
    return [
        correspond.CheckReport("integrality:KP", entry.id, tuple(d), k, None, None, k.denominator == 1),
        correspond.CheckReport("integrality:LMOVq", entry.id, tuple(d), lq, None, None, lq_ok),
        correspond.CheckReport("integrality:LOGBPS", entry.id, tuple(d), lb, None, None, lb_ok),
    ]


def suite_checks(suite, geometries=None, dmax=6, d0max=3):
    """All CheckReports of one suite (or of every suite for ``all``)."""
    if suite == "all":
        reports = []
        for name in SUITES[:-1]:
            reports += suite_checks(name, geometries, dmax, d0max)
        return reports
    allowed = _SUITE_GEOMETRIES[suite]
    chosen = [g for g in (geometries or allowed)]
    reports = []
    for g in chosen:
        if g not in allowed and get_geometry(g).id not in allowed:
            continue
        for d in class_grid(g, dmax, d0max):
            if suite == "log-local":
                reports.append(correspond.check_log_local(g, d))
            elif suite == "log-open":
                reports.append(correspond.check_log_open(g, d))
            elif suite == "loc-open":
                reports.append(correspond.check_loc_open(g, d))
            elif suite == "kp-lmov":
                reports.append(_kp_lmov(g, d))
            elif suite == "integrality":
                reports.extend(_integrality(g, d))
    return reports


def cmd_verify(args, out):
    dmax = args.dmax if args.dmax is not None else args.cutoff
    geometries = [args.geometry] if args.geometry else None
    if args.geometry:
        get_geometry(args.geometry)
    reports = suite_checks(args.suite, geometries, dmax, args.d0max)
    rows = [r.to_record() for r in reports]
    passed = all(r.passed for r in reports)
    if args.format == "json":
        out.write(json.dumps({"suite": args.suite, "passed": passed, "count": len(rows),
                              "failures": [r for r in rows if not r["passed"]], "checks": rows},
                             sort_keys=True, indent=1) + "\n")
    else:
        emit(rows, "csv", out)
    return 0 if passed else 1


def cmd_bps(args, out):
    dmax = args.dmax if args.dmax is not None else args.cutoff
    entry = get_geometry(args.geometry)
    rows = []
    for d in class_grid(entry, dmax, args.d0max):
        windings = entry.apply_iota(d)[1]
        k = bps.kp(entry, d)
        lq, lq_ok = bps.lmov_q(bps.open_series_for(entry), d, windings, entry.l)
        lb, lb_ok = bps.log_bps(entry, d)
        for rec in (bps.BpsRecord(entry.id, d, "KP", k, k.denominator == 1),
                    bps.BpsRecord(entry.id, d, "LMOVq", lq, lq_ok),
                    bps.BpsRecord(entry.id, d, "LOGBPS", lb, lb_ok)):
            rows.append(record(rec.geometry, rec.cls, rec.kind, 0 if rec.kind == "KP" else "all",
                               rec.value, "bps", integral=rec.integral))
    emit(rows, args.format, out)
    return 0 if all(r["integral"] for r in rows) else 1


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_global_flags(parser, defaults):
    def default(name):
        return argparse.SUPPRESS if defaults is None else defaults[name]

    parser.add_argument("--format", choices=("json", "csv"), default=default("format"))
    parser.add_argument("--catalog", default=default("catalog"), help="catalogue JSON file (default: bundled)")
    parser.add_argument("--cutoff", type=int, default=default("cutoff"), help="default degree cap")


def build_parser():
    parser = _Parser(prog="looijenga", description=__doc__.splitlines()[0])
    _add_global_flags(parser, {"format": "json", "catalog": None, "cutoff": 6})
    # the same flags are accepted after the subcommand without clobbering earlier ones
    shared = _Parser(add_help=False)
    _add_global_flags(shared, None)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    table = sub.add_parser("table", help="print invariants", parents=[shared])
    table.add_argument("kind", choices=TABLE_KINDS)
    table.add_argument("geometry", nargs="?")
    table.add_argument("--dmax", type=int)
    table.add_argument("--d0max", type=int, default=3)
    table.add_argument("--loops", type=int, default=2)

    verify = sub.add_parser("verify", help="run a correspondence suite", parents=[shared])
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--geometry")
    verify.add_argument("--dmax", type=int)
    verify.add_argument("--d0max", type=int, default=3)

    bps_cmd = sub.add_parser("bps", help="BPS transforms with integrality flags", parents=[shared])
    bps_cmd.add_argument("geometry")
    bps_cmd.add_argument("--dmax", type=int)
    bps_cmd.add_argument("--d0max", type=int, default=3)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing command")
        if args.cutoff < 1 or (getattr(args, "dmax", None) is not None and args.dmax < 1):
            raise UsageError("degree caps must be positive")
        if args.catalog:
            use_catalog(args.catalog)
        handler = {"table": cmd_table, "verify": cmd_verify, "bps": cmd_bps}[args.command]
        return handler(args, out)
    except UsageError as exc:
        print(f"looijenga: {exc}", file=sys.stderr)
        return 2
    except (UnknownGeometry, EngineUnavailable, OSError) as exc:
        print(f"looijenga: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
