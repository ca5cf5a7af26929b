"""Command-line entry point: ``ghpkerr <subcommand> [options]``.

Exit status: 0 when every suite passes, 1 on a tolerance failure, 2 on a
usage error (including a spin outside 0 < a < M), 3 on a domain error.
"""

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import DomainError, UsageError
from .geometry import Chart, KerrParams, SpacetimePoint
from .newman_penrose import np_table, weyl_scalars
from .suites import (chart_consistency_suite, hopf_suites, horizon_suite, np_vanishing_suite,
                     operator_suites, psi2_suite, ricci_suite, sample_points, tetrad_suite,
                     transition_stationarity_suite, weyl_vanishing_suite)
from .swfield import SpinWeight, TestField
from .teukolsky import (OperatorReport, SuiteConfig, apply_T, apply_T_closed_form,
                        magical_report)
from .tetrad import tetrad_for

DEFAULT_SEED = 0xC0FFEE


def _fmt(x):
    """Float with 17 significant digits (JSON number, or null if not finite)."""
    x = float(x)
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def dump_json(obj, indent=0):
    """Deterministic JSON: insertion-ordered keys, floats with 17 significant digits."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ["%s%s: %s" % (pad, json.dumps(str(k)), dump_json(v, indent + 1)) for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(dump_json(v) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + dump_json(v, indent + 1) for v in obj) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, complex):
        return "[%s, %s]" % (_fmt(obj.real), _fmt(obj.imag))
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    return json.dumps(str(obj))


def suite_entry(rep):
    return {
        "name": rep.name if rep.name not in ("teukolsky", "magical", "factorization",
                                             "stationarity") else "%s[2s=%d]" % (rep.name, rep.two_s),
        "max_abs": rep.max_abs_residual,
        "max_rel": None if rep.zero_check else rep.max_rel_residual,
        "pass": bool(rep.passed),
        "worst_point": list(rep.worst_point) if rep.worst_point is not None else None,
    }


def render(report, fmt):
    if fmt == "json":
        return dump_json(report) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "max_abs", "max_rel", "pass", "worst_point"])
    for s in report["suites"]:
        wp = s["worst_point"]
        w.writerow([s["name"], _fmt(s["max_abs"]),
                    "" if s["max_rel"] is None else _fmt(s["max_rel"]),
                    "true" if s["pass"] else "false",
                    "" if wp is None else " ".join(_fmt(x) for x in wp)])
    return buf.getvalue()


# -- argument parsing ---------------------------------------------------------

def _positive_threads():
    raw = os.environ.get("GHPKERR_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise UsageError("GHPKERR_THREADS must be a positive integer")
    return n


def build_parser():
    p = argparse.ArgumentParser(prog="ghpkerr", description="GHP/Newman-Penrose checks on Kerr.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mass", type=float, default=1.0)
    common.add_argument("--spin", type=float, default=0.5)
    common.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    common.add_argument("--tol-abs", type=float, default=1e-8)
    common.add_argument("--tol-rel", type=float, default=1e-6)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", default="-", help="output path ('-' for stdout)")

    point = argparse.ArgumentParser(add_help=False)
    point.add_argument("--t", type=float, default=0.0)
    point.add_argument("--r", type=float, default=3.0)
    point.add_argument("--theta", type=float, default=math.pi / 2, help="radians")
    point.add_argument("--phi", type=float, default=math.pi, help="radians")

    sp = p.add_subparsers(dest="command", required=True)
    v = sp.add_parser("verify", parents=[common], help="run all geometry and operator suites")
    v.add_argument("--s", type=int, default=4, dest="s2", help="doubled spin weight 2s")
    v.add_argument("--points", type=int, default=20, help="number of sample points")
    sp.add_parser("np-table", parents=[common, point], help="spin coefficients at a point")
    sp.add_parser("weyl", parents=[common, point], help="Weyl scalars at a point")
    tp = sp.add_parser("teukolsky-point", parents=[common, point],
                       help="GHP and closed-form T_s on a test field at a point")
    tp.add_argument("--s", type=int, default=4, dest="s2", help="doubled spin weight 2s")
    h = sp.add_parser("hopf-check", parents=[common], help="Hopf fibration suite")
    h.add_argument("--samples", type=int, default=50)
    i = sp.add_parser("identities", parents=[common], help="operator identities for one s")
    i.add_argument("--s", type=int, default=4, dest="s2", help="doubled spin weight 2s")
    return p


def _config(args):
    cfg = {"command": args.command, "mass": args.mass, "spin": args.spin, "seed": args.seed,
           "tol_abs": args.tol_abs, "tol_rel": args.tol_rel, "format": args.format}
    for k in ("s2", "points", "samples", "t", "r", "theta", "phi"):
        if hasattr(args, k):
            cfg[k] = getattr(args, k)
    return cfg


def _point(args):
    return SpacetimePoint(Chart.BL_ANGULAR, (args.t, args.r, args.theta, args.phi))


def _run_parallel(tasks, threads):
    if threads <= 1:
        return [f() for f in tasks]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        futures = [ex.submit(f) for f in tasks]
        return [fu.result() for fu in futures]


def _flatten(results):
    out = []
    for r in results:
        out.extend(r if isinstance(r, list) else [r])
    return out


def run(args, threads=1):
    """Execute a parsed command; returns the report dict."""
    params = KerrParams(args.mass, args.spin)
    ta, tr = args.tol_abs, args.tol_rel
    values = None
    sc = SuiteConfig(seed=args.seed, tol_abs=ta, tol_rel=tr)
    if args.command == "verify":
        pts = sample_points(params, args.points, args.seed)
        tasks = [
            lambda: ricci_suite(params, pts, ta),
            lambda: tetrad_suite(params, pts, ta),
            lambda: np_vanishing_suite(params, pts, ta),
            lambda: weyl_vanishing_suite(params, pts, ta),
            lambda: psi2_suite(params, pts, tr),
            lambda: horizon_suite(params, ta),
            lambda: chart_consistency_suite(params, pts[:5], args.seed, ta),
            lambda: transition_stationarity_suite(params, args.seed, min(ta, 1e-14)),
            lambda: operator_suites(args.s2, params, sc),
        ]
        suites = _flatten(_run_parallel(tasks, threads))
    elif args.command == "identities":
        tasks = [lambda: operator_suites(args.s2, params, sc)]
        if args.s2 != 0:
            tasks.append(lambda: _renamed(magical_report(abs(args.s2), params, sc, shift=1),
                                          "magical-lower"))
        suites = _flatten(_run_parallel(tasks, threads))
    elif args.command == "np-table":
        p = _point(args)
        c = np_table(params, p, tetrad_for(params, p, "M"))
        suites = [_single("np-vanishing", p, max(abs(c.kappa), abs(c.sigma), abs(c.lam), abs(c.nu)), ta)]
        values = c.as_dict()
    elif args.command == "weyl":
        p = _point(args)
        w = weyl_scalars(params, p, tetrad_for(params, p, "M"))
        suites = [_single("weyl-vanishing", p, max(abs(w.psi0), abs(w.psi1), abs(w.psi3), abs(w.psi4)), ta),
                  psi2_suite(params, [p], tr)]
        values = w.as_dict()
    elif args.command == "teukolsky-point":
        p = _point(args)
        u = TestField(SpinWeight(args.s2, args.s2), args.seed, 0, native="M")
        ghp = apply_T(args.s2 / 2, u, params).value("M", p)
        cf = apply_T_closed_form(args.s2 / 2, lambda q: u.component("M", q), params)(p)
        rep = OperatorReport("teukolsky", args.s2, "point", tol_abs=ta, tol_rel=tr, mode="rel")
        rep.add(p.coords, ghp, cf)
        suites = [rep]
        values = {"ghp": ghp, "closed_form": cf}
    elif args.command == "hopf-check":
        suites = hopf_suites(params, args.seed, args.samples, ta)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError("unknown command")
    report = {"config": _config(args), "suites": [suite_entry(s) for s in suites]}
    if values is not None:
        report["values"] = values
    report["pass"] = all(s["pass"] for s in report["suites"])
    return report


def _renamed(rep, name):
    rep.name = name
    return rep


def _single(name, p, value, tol):
    rep = OperatorReport(name, 0, "point", tol_abs=tol, mode="abs")
    rep.add_zero(p.coords, value)
    return rep


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on parse errors
    if not 0 < args.spin < args.mass:
        parser.error("subextremality requires 0 < spin < mass (got spin=%r, mass=%r)"
                     % (args.spin, args.mass))
    try:
        threads = _positive_threads()
        report = run(args, threads)
    except DomainError as exc:
        print("domain error: %s" % exc, file=sys.stderr)
        return 3
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    text = render(report, args.format)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0 if report["pass"] else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
