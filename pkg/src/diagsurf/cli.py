"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size bound
exceeded.  Big integers are written to JSON as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codes, counts, enumeration, hermitian, verify, zeta
from .counts import DiagonalParams
from .errors import DiagsurfError, SizeExceeded
from .ff import build_field

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3


def _emit(args, data):
    text = json.dumps(data, indent=2) + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _params(args) -> DiagonalParams:
    return DiagonalParams(args.p, args.r, args.k, args.d)


def cmd_count(args):
    P = _params(args)
    c = counts.affine_counts(P, args.s)
    data = {"N0": str(c.N0), "N1": str(c.N1), "N2": str(c.N2)}
    if args.s >= 2:
        data[f"projective_dim{args.s - 1}"] = str(counts.projective_count(P, args.s - 1))
    _emit(args, data)
    return EXIT_OK


def cmd_profile(args):
    P = _params(args)
    ctx = build_field(P.p, 2 * P.r * P.k)
    prof = enumeration.value_profile(ctx, P.d, args.s)
    data = {
        "Q": prof.Q,
        "d": prof.d,
        "s": prof.s,
        "zero": str(prof.zero),
        "on_units": None if prof.on_units is None else str(prof.on_units),
        "off_units": None if prof.off_units is None else str(prof.off_units),
    }
    if args.full:
        data["counts"] = [str(c) for c in prof.counts]
    _emit(args, data)
    return EXIT_OK


def cmd_lemmas(args):
    grid = verify.diagonal_grid(args.sizes)
    rows = []
    ok = True
    for P in grid:
        for s in range(2, args.max_s + 1):
            reps = [counts.verify_lemma_22(P, s), counts.verify_lemma_23(P, s)]
            reps += [counts.verify_lemma_24(P, s, i) for i in range(1, s)]
            for rep in reps:
                ok = ok and rep.holds
                rows.append({"p": P.p, "r": P.r, "k": P.k, "d": P.d, "s": s, "identity": rep.name,
                             "lhs": str(rep.lhs), "rhs": str(rep.rhs), "holds": rep.holds})
    _emit(args, {"all_hold": ok, "checks": rows})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_zeta(args):
    Z = zeta.diagonal_zeta(args.p, args.r, args.d, args.s)
    data = Z.to_json()
    data["rational"] = str(Z)
    data["series"] = [str(N) for N in zeta.series_counts(Z, args.terms)]
    status = EXIT_OK
    if args.check_ratio:
        rep = zeta.ratio_f_check(args.p, args.r, args.d, args.s, args.terms)
        data["ratio_check"] = {"passed": rep.passed, "coefficients": [str(c) for c in rep.ratio_series]}
        status = EXIT_OK if rep.passed else EXIT_FAIL
    _emit(args, data)
    return status


def cmd_tower(args):
    rows = zeta.tower_zeta_report(args.p, args.r, args.s, args.terms)
    _emit(args, {
        "p": args.p, "r": args.r, "s": args.s,
        "counts": [str(row.oracle) for row in rows],
        "report": [{"k": row.k, "counts": str(row.oracle), "printed_form": str(row.printed),
                    "exact_form": str(row.exact)} for row in rows],
    })
    return EXIT_OK


def cmd_hermitian(args):
    ctx = build_field(args.p, 2 * args.r)
    if args.method == "direct":
        pm = hermitian.build_direct(ctx, args.s)
    else:
        pm = hermitian.build_recursive(ctx, args.s)[0][-1]
    if args.export:
        Path(args.export).write_text(hermitian.points_csv(pm))
    data = {"p": args.p, "r": args.r, "s": args.s, "method": args.method, "points": len(pm)}
    status = EXIT_OK
    if args.verify:
        rows = hermitian.verify_recursion(ctx, args.s)
        data["verify"] = [{"s": row.s, "direct": row.h_direct, "recursive": row.h_recursive,
                           "same_set": row.same_set, "recursion": row.recursion_ok,
                           "bose_as_printed": str(row.bose_literal), "passed": row.passed} for row in rows]
        status = EXIT_OK if all(row.passed for row in rows) else EXIT_FAIL
    _emit(args, data)
    return status


def cmd_code(args):
    build = codes.hermitian_code if args.points == "hermitian" else codes.projective_code
    G = build(args.p, args.r, args.s, args.h)
    spec = codes.weight_distribution(G, args.max_words)
    if args.export_matrix:
        Path(args.export_matrix).write_text(codes.matrix_csv(G))
    if args.export_spectrum:
        path = Path(args.export_spectrum)
        path.write_text(spec.to_csv() if path.suffix == ".csv" else spec.to_json() + "\n")
    data = {"n": spec.n, "k": spec.k, "weights": {str(w): c for w, c in sorted(spec.weights.items())}}
    status = EXIT_OK
    if args.two_weight:
        rep = codes.two_weight_check(args.p, args.r, args.s)
        data["two_weight"] = {"corrected": sorted(rep.corrected), "as_printed": sorted(rep.literal),
                              "matches_corrected": rep.matches_corrected, "matches_printed": rep.matches_literal}
        status = EXIT_OK if rep.matches_corrected else EXIT_FAIL
    if args.tss:
        rep = codes.min_weight_vs_tss(args.p, args.r, args.s, args.h)
        data["tss"] = {"min_weight": rep.min_weight, "bound": rep.bound, "met": rep.met, "equality": rep.equality}
        status = status if rep.met else EXIT_FAIL
    _emit(args, data)
    return status


def cmd_verify_all(args):
    log = (lambda line: None) if args.quiet else print
    ok = verify.run_all(args.out, log=log)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diagsurf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, **flags):
        sp = sub.add_parser(name, help=help)
        for flag in flags.get("need", ()):
            sp.add_argument(f"--{flag}", type=int, required=True)
        for flag, default in flags.get("opt", {}).items():
            sp.add_argument(f"--{flag}", type=int, default=default)
        sp.add_argument("-o", "--output", help="write JSON here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    add("count", cmd_count, "closed-form affine and projective counts", need=("p", "r", "d", "s"), opt={"k": 1})
    sp = add("profile", cmd_profile, "brute-force value profile", need=("p", "r", "d", "s"), opt={"k": 1})
    sp.add_argument("--full", action="store_true", help="include the count for every field element")
    sp = add("lemmas", cmd_lemmas, "identity suite over a parameter grid", opt={"max-s": 6})
    sp.add_argument("--sizes", type=int, nargs="+", default=list(verify.GRID_FIELD_SIZES))
    sp = add("zeta", cmd_zeta, "factored zeta function and its series", need=("p", "r", "d", "s"), opt={"terms": 4})
    sp.add_argument("--check-ratio", action="store_true")
    add("tower", cmd_tower, "growing-degree Hermitian counts", need=("p", "r", "s"), opt={"terms": 3})
    sp = add("hermitian", cmd_hermitian, "build Hermitian point sets", need=("p", "r", "s"))
    sp.add_argument("--method", choices=("direct", "recursive"), default="direct")
    sp.add_argument("--export", help="CSV path for the point matrix")
    sp.add_argument("--verify", action="store_true")
    sp = add("code", cmd_code, "evaluation codes and weight spectra", need=("p", "r", "s", "h"),
             opt={"max-words": codes.ENUM_MAX})
    sp.add_argument("--points", choices=("hermitian", "projective"), default="hermitian")
    sp.add_argument("--export-matrix")
    sp.add_argument("--export-spectrum", help=".json or .csv")
    sp.add_argument("--two-weight", action="store_true")
    sp.add_argument("--tss", action="store_true")
    sp = sub.add_parser("verify-all", help="run the full verification suite")
    sp.add_argument("--out", help="directory for verify.log and exports")
    sp.add_argument("--quiet", action="store_true")
    sp.set_defaults(func=cmd_verify_all)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SizeExceeded as exc:
        print(f"diagsurf: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except DiagsurfError as exc:
        print(f"diagsurf: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
