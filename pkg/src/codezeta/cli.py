"""Command-line front-end: parse code files, run the checks, emit reports.

Exit codes: 0 all checks pass, 1 a mathematical check failed (witness in the
output), 2 usage/parse/capacity error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import enumerator as enum_mod
from . import extremal as extremal_mod
from . import matroid as matroid_mod
from . import zeta as zeta_mod
from .code import CapacityError, ParseError, dual_code, parse_code, weight_distribution
from .exactmath import UniPoly, format_poly
from .gf import FieldError


def _frac(v):
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def _uni(p, var="T"):
    return {"coeffs": [_frac(c) for c in p.coeffs], "text": format_poly(p, var)}


def _bi(p, vars=("x", "y")):
    return {
        "vars": list(vars),
        "terms": [[i, j, _frac(c)] for (i, j), c in p.sorted_terms()],
    }


def _ratfun(f, vars=("x", "y")):
    return {"num": _bi(f.num, vars), "den": _bi(f.den, vars)}


def cmd_weights(C):
    wd = weight_distribution(C)
    dual_wd = weight_distribution(dual_code(C))
    report = {
        "q": C.q,
        "n": C.n,
        "k": C.k,
        "d": wd.d,
        "d_dual": wd.d_dual,
        "counts": [str(c) for c in wd.counts],
        "dual_counts": [str(c) for c in dual_wd.counts],
    }
    return report, True


def cmd_zeta(C):
    wd = weight_distribution(C)
    a = enum_mod.normalize(wd)
    P = zeta_mod.zeta_from_normalized(a, k=wd.k, d_dual=wd.d_dual)
    P1 = zeta_mod.zeta_from_enumerator_def1(wd)
    routes_agree = P.P == P1.P
    dual_wd = weight_distribution(dual_code(C))
    Pd = zeta_mod.zeta_from_normalized(
        enum_mod.normalize(dual_wd), k=dual_wd.k, d_dual=dual_wd.d_dual
    )
    functional = zeta_mod.check_functional_eq(P, Pd)
    abound = zeta_mod.a_coefficient_bound(P, a.a_list)
    nondegenerate = wd.d >= 2 and wd.d_dual >= 2
    report = {
        "P": _uni(P.P),
        "P_def1": _uni(P1.P),
        "routes_agree": routes_agree,
        "g": P.g,
        "g_dual": P.g_dual,
        "deg_P": P.P.degree,
        "P_at_1": _frac(P.P(1)),
        "nondegenerate": nondegenerate,
        "functional_equation": functional,
        "a_bound": {
            "a": _frac(abound["a"]),
            "relation_holds": abound["relation_holds"],
            "bound": _frac(abound["bound"]),
            "bound_holds": abound["bound_holds"],
        },
    }
    ok = routes_agree and functional and abound["relation_holds"] and abound["bound_holds"]
    if nondegenerate:
        deg_ok = P.P.degree == C.n + 2 - wd.d - wd.d_dual
        p1_ok = P.P(1) == 1
        report["deg_matches"] = deg_ok
        report["P1_is_one"] = p1_ok
        ok = ok and deg_ok and p1_ok
    return report, ok


def cmd_rankgen(C):
    W = matroid_mod.rank_gen_poly(C)
    Wn = matroid_mod.normalized_rank_gen(C)
    Wp = matroid_mod.wn_plus(Wn)
    report = {
        "W": _bi(W.W),
        "Wn": _bi(Wn.Wn),
        "Wn_plus": _ratfun(Wp),
        "W_at_11": str(W.W.eval(1, 1)),
    }
    return report, W.W.eval(1, 1) == 2**C.n


def cmd_greene(C):
    wd = weight_distribution(C)
    W = matroid_mod.rank_gen_poly(C)
    Wn = matroid_mod.normalized_rank_gen(C)
    plain = matroid_mod.check_greene(wd, W)
    normalized = matroid_mod.check_greene_normalized(wd, Wn)
    report = {"greene": plain, "greene_normalized": normalized}
    return report, plain and normalized


def cmd_twovar(C):
    wd = weight_distribution(C)
    Wn = matroid_mod.normalized_rank_gen(C)
    g = C.n + 1 - C.k - wd.d
    report = {}
    try:
        Z = zeta_mod.two_var_zeta(matroid_mod.wn_plus(Wn), C.k, C.n, g)
    except zeta_mod.StructuralError as exc:
        report["error"] = str(exc)
        return report, False
    a = enum_mod.normalize(wd)
    P = zeta_mod.zeta_from_normalized(a, k=wd.k, d_dual=wd.d_dual)
    compat = zeta_mod.check_two_var_compat(Z, P)
    report.update(
        {
            "Z": _ratfun(Z.value, vars=("T", "u")),
            "g": g,
            "compatible_with_one_variable": compat,
            "functional_equation_exploratory": zeta_mod.two_var_functional_eq(Z),
        }
    )
    return report, compat


def cmd_bounds(C):
    wd = weight_distribution(C)
    dual_wd = weight_distribution(dual_code(C))
    report = bounds_mod.check_bounds(wd, dual_wd)
    a = enum_mod.normalize(wd)
    c = report["c"]
    h = bounds_mod.h_poly(a, c, wd.d_dual)
    audit = bounds_mod.zero_count_audit(
        h, bounds_mod.proof_zero_bound(C.n, wd.d, c), c, C.n
    )
    report = dict(report)
    report["zero_audit"] = {
        "zeros": audit["zeros"],
        "count": audit["count"],
        "bound": _frac(audit["bound"]),
        "meets": audit["meets"],
    }
    ok = report["singleton_holds"] and report["divisibility_holds"] and audit["meets"]
    if report.get("strong_holds") is False:
        ok = False
    ms = report.get("mallows_sloane")
    if ms is not None:
        ok = ok and ms["holds"]
    return report, ok


def cmd_clifford(C, args):
    if args.sample is not None:
        report = matroid_mod.clifford_check(
            C, mode="sample", count=args.sample, seed=args.seed
        )
    else:
        report = matroid_mod.clifford_check(C, mode="exhaustive")
    return report, report["ok"]


def cmd_extremal(args):
    enum = extremal_mod.extremal_sd_enumerator(args.q, args.c, args.n)
    report = {
        "q": enum.q,
        "c": enum.c,
        "n": enum.n,
        "d": enum.d,
        "unique": enum.unique,
        "solution_dim": enum.solution_dim,
        "nonnegative": enum.nonnegative,
        "counts": [str(v) for v in enum.counts] if enum.counts else None,
    }
    ok = enum.unique and enum.nonnegative
    if args.ultraspherical:
        if not enum.unique:
            return report, False
        from .code import WeightDistribution

        wd = WeightDistribution(
            q=enum.q, n=enum.n, k=enum.n // 2, counts=enum.counts,
            d=enum.d, d_dual=enum.d,
        )
        a = enum_mod.normalize(wd)
        P = zeta_mod.zeta_from_normalized(a, k=wd.k, d_dual=wd.d_dual)
        m = enum.d - 3
        lam, holds = extremal_mod.check_ultraspherical(P, m)
        radii = (
            extremal_mod.critical_circle_radii(P) if P.P.degree >= 1 else []
        )
        on_circle = all(abs(r - 0.5) <= 1e-9 for r in radii)
        report["ultraspherical"] = {
            "m": m,
            "lambda": _frac(lam),
            "holds": holds,
            "radii": radii,
            "on_critical_circle": on_circle,
        }
        ok = ok and holds and on_circle
    return report, ok


def cmd_report(C, args):
    full = {}
    ok = True
    for name, fn in (
        ("weights", cmd_weights),
        ("zeta", cmd_zeta),
        ("rankgen", cmd_rankgen),
        ("greene", cmd_greene),
        ("twovar", cmd_twovar),
        ("bounds", cmd_bounds),
    ):
        sub, sub_ok = fn(C)
        full[name] = sub
        ok = ok and sub_ok
    sub, sub_ok = cmd_clifford(C, args)
    full["clifford"] = sub
    ok = ok and sub_ok
    return full, ok


def _render_human(report, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(report, dict):
        for key in report:
            value = report[key]
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_human(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_flat(value)}")
    elif isinstance(report, list):
        for value in report:
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{pad}-")
                lines.extend(_render_human(value, indent + 1))
            else:
                lines.append(f"{pad}- {_flat(value)}")
    else:
        lines.append(f"{pad}{_flat(report)}")
    return lines


def _is_flat(value):
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _flat(value):
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="codezeta",
        description="Exact zeta/enumerator/matroid reports for short linear codes.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("weights", "zeta", "rankgen", "greene", "twovar", "bounds"):
        p = sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p = sub.add_parser("clifford")
    p.add_argument("file")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p = sub.add_parser("extremal")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ultraspherical", action="store_true")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p = sub.add_parser("report")
    p.add_argument("file")
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    threads = os.environ.get("CODEZETA_THREADS")
    if threads is not None:
        try:
            if int(threads) < 0:
                raise ValueError
        except ValueError:
            print("CODEZETA_THREADS must be a nonnegative integer", file=sys.stderr)
            return 2
    try:
        if args.command == "extremal":
            report, ok = cmd_extremal(args)
        else:
            with open(args.file) as fh:
                C = parse_code(fh.read())
            if args.command == "weights":
                report, ok = cmd_weights(C)
            elif args.command == "zeta":
                report, ok = cmd_zeta(C)
            elif args.command == "rankgen":
                report, ok = cmd_rankgen(C)
            elif args.command == "greene":
                report, ok = cmd_greene(C)
            elif args.command == "twovar":
                report, ok = cmd_twovar(C)
            elif args.command == "bounds":
                report, ok = cmd_bounds(C)
            elif args.command == "clifford":
                report, ok = cmd_clifford(C, args)
            else:
                report, ok = cmd_report(C, args)
    except (ParseError, CapacityError, FieldError, OSError, ValueError,
            extremal_mod.InfeasibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (zeta_mod.CrossCheckError, zeta_mod.StructuralError,
            bounds_mod.LemmaCheckError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(_render_human(report)))
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
