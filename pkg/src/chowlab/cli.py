"""Command-line front end: ``chowlab <subcommand> ...``, reports as JSON."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import factorial

from . import errors
from .chern import (
    boolean_chern_alpha,
    chern_alpha,
    chern_report,
    h2_from_chern,
    miyaoka_yau_alpha,
    perm_c1k,
    perm_ck,
    perm_pk,
    todd_alpha_check,
    top_chern,
    verify_chern_inequality,
)
from .chow import chow_via_flags, chow_via_recursion, gamma_vector
from .cmfs import build_cmfs
from .cone import certify, verify_certificate, verify_infeasibility
from .corpus import full_corpus
from .flags import flag_table
from .matroid import Matroid, flats, simplification_is_boolean
from .moments import boolean_sweep, flag_inequality, gamma_inequality, power_sum_report, verify_bounds
from .serialize import dumps, matroid_to_dict, parse_spec

EXIT_OK, EXIT_FAIL, EXIT_ERROR, EXIT_CAP = 0, 1, 2, 3


def _emit(obj, output: str | None) -> None:
    text = dumps(obj) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_info(args) -> tuple:
    m = parse_spec(args.matroid)
    lat = flats(m)
    return {
        **matroid_to_dict(m),
        "rank": m.rank,
        "d": m.d,
        "flats_per_rank": lat.counts(),
        "simplification_is_boolean": simplification_is_boolean(m),
    }, EXIT_OK


def cmd_flags(args) -> tuple:
    m = parse_spec(args.matroid)
    table = flag_table(m)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["mask", "J", "count"])
        for mask, c in enumerate(table):
            J = [j + 1 for j in range(m.d) if mask >> j & 1]
            w.writerow([mask, " ".join(map(str, J)), c])
        with open(args.csv, "w", newline="") as fh:
            fh.write(buf.getvalue())
    return {"d": m.d, "table": {str(mask): c for mask, c in enumerate(table)}}, EXIT_OK


def cmd_chow(args) -> tuple:
    m = parse_spec(args.matroid)
    h = chow_via_flags(m)
    out = {
        "coeffs": h,
        "gamma": list(gamma_vector(h, m.d).gamma),
        "palindromic": h.is_palindromic(m.d),
        "H1": h(1),
    }
    if not args.no_cross_check:
        agree = chow_via_recursion(m) == h
        out["recursion_agrees"] = agree
        if not agree:
            return out, EXIT_FAIL
    return out, EXIT_OK


def _report_dict(report) -> dict:
    return {
        "d": report.d,
        "central_moments": report.central_moments,
        "factorial_moments": report.factorial_moments,
        "bound_comparisons": [
            {"bound": b.name, "k": b.k, "value": b.value, "holds": b.holds, "equality": b.equality}
            for b in report.bound_comparisons
        ],
        "equality_diagnosis": report.equality_diagnosis,
    }


def cmd_moments(args) -> tuple:
    m = parse_spec(args.matroid)
    report = verify_bounds(m, args.kmax)
    return _report_dict(report), EXIT_OK if report.all_hold else EXIT_FAIL


def cmd_sweep(args) -> tuple:
    res = boolean_sweep(args.dmax, args.tmax)
    out = {
        "dmax": args.dmax,
        "tmax": args.tmax,
        "violations": res.violations,
        "equalities": res.equalities,
    }
    return out, EXIT_OK if not res.violations else EXIT_FAIL


def cmd_cmfs(args) -> tuple:
    state = build_cmfs(args.order)
    return {"h": list(state.h_coeffs), "f": list(state.f_polys), "C_steps": list(state.C_steps)}, EXIT_OK


def cmd_chern(args) -> tuple:
    m = parse_spec(args.matroid)
    r = chern_report(m, args.k)
    out = {
        "c_d": r.c_d,
        "c1_cd1": r.c1_cd1,
        "inequality_holds": r.inequality_holds,
        "equality": r.equality,
        "h_values": r.h_values,
        "alpha_rows": {
            k: {"ck_alpha": a, "c1ck1_alpha": b, "lower_bound": lo, "my_alpha_value": my}
            for k, (a, b, lo, my) in r.alpha_rows.items()
        },
    }
    return out, EXIT_OK if r.inequality_holds else EXIT_FAIL


def cmd_perm(args) -> tuple:
    d = args.d
    out = {
        "d": d,
        "c_d": factorial(d + 1),
        "c1k": {k: perm_c1k(d, k) for k in range(1, d)},
        "pk": {k: perm_pk(d, k) for k in range(1, d)},
        "ck": {k: perm_ck(d, k) for k in range(1, d // 2 + 1)},
    }
    return out, EXIT_OK


def cmd_cone(args) -> tuple:
    try:
        cert = certify(args.d, method=args.method, max_d=args.max_d)
    except errors.DimensionTooLarge as exc:
        return {"d": args.d, "error": exc.kind, "message": str(exc)}, EXIT_CAP
    if cert.feasible:
        out = {
            "d": cert.d,
            "feasible": True,
            "verified": verify_certificate(cert),
            "method": cert.method,
            "multipliers": [
                {"J": lo, "J_prime": hi, "lambda": lam}
                for (lo, hi), lam in sorted(cert.multipliers.items())
            ],
        }
        return out, EXIT_OK if out["verified"] else EXIT_FAIL
    out = {"d": cert.d, "feasible": False, "dual": cert.dual, "dual_verified": verify_infeasibility(cert)}
    return out, EXIT_FAIL


def verify_all_one(m: Matroid) -> dict:
    """Every exact check for one matroid; ``ok`` is false iff some check fails."""
    checks = {}
    h = chow_via_flags(m)
    checks["chow_routes_agree"] = chow_via_recursion(m) == h
    report = verify_bounds(m, 8)
    checks["moment_bounds"] = report.all_hold
    var = report.central_moments[2]
    checks["variance"] = var <= Fraction(m.d + 2, 12)
    g = gamma_vector(h, m.d)
    checks["gamma_nonnegative"] = all(x >= 0 for x in g.gamma)
    checks["gamma_inequality"] = gamma_inequality(m)[1]
    checks["flag_inequality"] = flag_inequality(m)[1]
    lhs, holds, eq = verify_chern_inequality(m)
    checks["chern_inequality"] = holds
    checks["c_d_equals_H1"] = top_chern(m) == h(1)
    checks["h2_bridge"] = h2_from_chern(m) == top_chern(m) * var
    if m.d >= 2:
        checks["miyaoka_yau_alpha"] = miyaoka_yau_alpha(m)[1]
    checks["power_sums"] = power_sum_report(m).bounds_hold
    checks["todd"] = all(todd_alpha_check(m, k) for k in range(min(3, m.d) + 1))
    checks["chern_alpha_lower"] = all(
        chern_alpha(m, k) >= boolean_chern_alpha(m.d, k) for k in range(m.d + 1)
    )
    return {
        "matroid": matroid_to_dict(m),
        "d": m.d,
        "checks": checks,
        "equality_diagnosis": report.equality_diagnosis,
        "chern_lhs": lhs,
        "chern_equality": eq,
        "ok": all(checks.values()),
    }


def cmd_verify_all(args) -> tuple:
    ms = [parse_spec(s) for s in args.matroids]
    if args.corpus:
        ms += list(full_corpus())
    if not ms:
        raise errors.InvalidParameters("verify-all needs at least one matroid or --corpus")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(verify_all_one, ms))
    else:
        results = [verify_all_one(m) for m in ms]
    ok = all(r["ok"] for r in results)
    out = results[0] if len(results) == 1 else {"ok": ok, "results": results}
    return out, EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chowlab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, matroid=True, **kw):
        sp = sub.add_parser(name, **kw)
        if matroid:
            sp.add_argument("matroid", help='"uniform:r,n", "boolean:n", "pg:d,q" or a JSON file')
        sp.add_argument("--output", "-o", help="write the JSON report here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    add("info", cmd_info, help="ground set, rank and flat counts")
    sp = add("flags", cmd_flags, help="the full N_J table")
    sp.add_argument("--csv", help="also write the table as CSV")
    sp = add("chow", cmd_chow, help="Chow polynomial and gamma vector")
    sp.add_argument("--no-cross-check", action="store_true")
    sp = add("moments", cmd_moments, help="moments and bound comparisons")
    sp.add_argument("--kmax", type=_nonneg, default=8)
    sp = add("sweep", cmd_sweep, matroid=False, help="Boolean moment sweep")
    sp.add_argument("--dmax", type=_nonneg, default=40)
    sp.add_argument("--tmax", type=_nonneg, default=25)
    sp = add("cmfs", cmd_cmfs, matroid=False, help="build the moment function sequence")
    sp.add_argument("--order", type=_even, default=6)
    sp = add("chern", cmd_chern, help="Chern numbers and alpha rows")
    sp.add_argument("--k", type=_nonneg, default=None)
    sp = add("perm", cmd_perm, matroid=False, help="permutahedral intersection numbers")
    sp.add_argument("--d", type=_positive, required=True)
    sp = add("cone", cmd_cone, matroid=False, help="cone certificate for the flag inequality")
    sp.add_argument("--d", type=_positive, required=True)
    sp.add_argument("--max-d", type=_positive, default=14)
    sp.add_argument("--method", choices=["flow", "simplex"], default="flow")
    sp = sub.add_parser("verify-all", help="run every exact check")
    sp.add_argument("matroids", nargs="*")
    sp.add_argument("--corpus", action="store_true", help="include the built-in corpus")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_verify_all)
    return p


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _even(s: str) -> int:
    v = _nonneg(s)
    if v % 2 or v > 12:
        raise argparse.ArgumentTypeError("must be even and at most 12")
    return v


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except errors.ChowlabError as exc:
        sys.stderr.write(dumps({"error": exc.kind, "message": str(exc)}) + "\n")
        return EXIT_ERROR
    _emit(out, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
