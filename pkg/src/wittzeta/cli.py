"""Command-line interface.

Subcommand groups mirror the library layers:

    witt  add|mul|neg|teichmuller|ghost|iota   Witt ring arithmetic
    rat   mul|rationalize                      rational Witt vectors
    zeta  weil|kapranov                        zeta series of measures
    check expo|totaro|bundle|gident|lambda-axioms   identity checkers
    count points|census|sym                    point counting

Exit codes: 0 success or identity holds, 1 identity fails or no rational
form found within the degree bound, 2 usage or input errors (reported on
standard error).  Output is deterministic; --threads never changes it.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .counting import (
    closed_point_census,
    count_points,
    field_params_from_q,
    sym_product_counts,
)
from .errors import WittzetaError
from .measures import (
    Measure,
    counting_measure,
    euler_atom,
    euler_measure,
    poincare_measure,
)
from .parsing import parse_poly
from .rational import RatWitt, rat_make, rat_mul, rationalize
from .rings import ZZ, poly_ring
from .series import TruncSeries
from .sigma import BINOMIAL_Z, PLETHYSTIC_ZU, ZU, check_lambda_additivity
from .varieties import CATALOG, SymbolicAtom, load_variety
from .witt import ghost, lambda_involution, teichmuller, witt_add, witt_mul
from .zeta import (
    bundle_zeta_check,
    check_exponentiation,
    g_witt_identity_check,
    kapranov_zeta,
    totaro_check,
    totaro_proof_trace,
    weil_zeta,
)

_GIDENT_VARS = ("a", "b", "s")


def _poly_coeffs(text: str) -> tuple:
    """Coefficient tuple of an integer polynomial in t, constant first."""
    poly = parse_poly(text, ("t",))
    degree = max((exps[0] for exps, _ in poly), default=0)
    out = [0] * (degree + 1)
    for exps, c in poly:
        out[exps[0]] = c
    return tuple(out)


def _series_arg(text: str, precision: int, invert: bool) -> TruncSeries:
    coeffs = _poly_coeffs(text)[: precision + 1]
    series = TruncSeries.make(ZZ, coeffs, precision)
    if invert:
        series = series.invert()
    return series


def _t_series_arg(text: str, variables: tuple, precision: int) -> TruncSeries:
    """Series in t whose coefficients are polynomials in `variables`."""
    ring = poly_ring(variables)
    poly = parse_poly(text, variables + ("t",))
    buckets: list[dict] = [dict() for _ in range(precision + 1)]
    for exps, c in poly:
        degree = exps[-1]
        if degree <= precision:
            key = exps[:-1]
            buckets[degree][key] = buckets[degree].get(key, 0) + c
    coeffs = [ring.from_terms(b) for b in buckets]
    return TruncSeries.make(ring, coeffs, precision)


def _variety_arg(text: str):
    builder = CATALOG.get(text)
    if builder is not None:
        return builder()
    return load_variety(text)


def _field_args(args, variety=None) -> tuple[int, int]:
    q = getattr(args, "q", None)
    if q is not None:
        return field_params_from_q(q)
    if variety is not None and variety.p:
        return variety.p, variety.k
    raise ValueError(
        "no finite field given; pass --q or a variety that declares p, k"
    )


def _measure_arg(args, variety=None) -> Measure:
    name = args.measure
    if name == "counting":
        p, k = _field_args(args, variety)
        return counting_measure(p, k, getattr(args, "threads", 1))
    if name == "euler":
        return euler_measure()
    if name == "poincare":
        return poincare_measure()
    raise ValueError(f"unknown measure {name!r}")


def _value_atom(measure: Measure, name: str, text: str) -> SymbolicAtom:
    """Symbolic atom carrying one explicit measure value."""
    if measure.name == "euler":
        return euler_atom(name, int(text))
    if measure.name == "poincare":
        return SymbolicAtom.make(name, {"poincare": parse_poly(text, ("u",))})
    raise ValueError(f"--*-value is not accepted by the {measure.name} measure")


def _class_arg(args, measure: Measure, flag: str, name: str):
    """Resolve --<flag> (a variety) or --<flag>-value (a measure value)."""
    attr = flag.replace("-", "_")
    variety_text = getattr(args, attr, None)
    value_text = getattr(args, attr + "_value", None)
    if measure.policy == "census":
        if variety_text is None:
            raise ValueError(f"--{flag} is required for the counting measure")
        return _variety_arg(variety_text)
    if value_text is not None:
        return _value_atom(measure, name, value_text)
    raise ValueError(
        f"--{flag}-value is required for the {measure.name} measure"
    )


def _check_prec(n: int) -> int:
    if n < 1:
        raise ValueError("precision must be at least 1")
    return n


def _emit(args, text: str, data: dict) -> None:
    if args.json:
        print(json.dumps(data))
    else:
        print(text)


def _emit_series(args, series: TruncSeries) -> int:
    _emit(args, series.render(), series.render_json())
    return 0


def _emit_rat(args, rat: RatWitt) -> int:
    _emit(args, rat.render(), rat.render_json())
    return 0


def _emit_not_found(args, dmax: int) -> int:
    _emit(args, f"NOT FOUND (dmax {dmax})", {"found": False, "dmax": dmax})
    return 1


def _emit_verdict(args, verdict) -> int:
    _emit(args, verdict.render(), verdict.render_json())
    return 0 if verdict.holds else 1


# ---------------------------------------------------------------- witt


def _cmd_witt_add(args) -> int:
    n = _check_prec(args.prec)
    a = _series_arg(args.a, n, args.inv_a)
    b = _series_arg(args.b, n, args.inv_b)
    return _emit_series(args, witt_add(a, b))


def _cmd_witt_mul(args) -> int:
    n = _check_prec(args.prec)
    a = _series_arg(args.a, n, args.inv_a)
    b = _series_arg(args.b, n, args.inv_b)
    return _emit_series(args, witt_mul(a, b))


def _cmd_witt_neg(args) -> int:
    n = _check_prec(args.prec)
    a = _series_arg(args.a, n, args.inv_a)
    return _emit_series(args, a.invert())


def _cmd_witt_teichmuller(args) -> int:
    n = _check_prec(args.prec)
    return _emit_series(args, teichmuller(ZZ, args.a, n))


def _cmd_witt_ghost(args) -> int:
    n = _check_prec(args.prec)
    a = _series_arg(args.a, n, args.inv_a)
    parts = [ZZ.render(p) for p in ghost(a)]
    _emit(args, "(" + ", ".join(parts) + ")", {"ghost": parts})
    return 0


def _cmd_witt_iota(args) -> int:
    n = _check_prec(args.prec)
    a = _series_arg(args.a, n, args.inv_a)
    return _emit_series(args, lambda_involution(a))


# ----------------------------------------------------------------- rat


def _cmd_rat_mul(args) -> int:
    a = rat_make(ZZ, _poly_coeffs(args.a_num), _poly_coeffs(args.a_den))
    b = rat_make(ZZ, _poly_coeffs(args.b_num), _poly_coeffs(args.b_den))
    return _emit_rat(args, rat_mul(a, b))


def _cmd_rat_rationalize(args) -> int:
    coeffs = tuple(int(part) for part in args.coeffs.split(","))
    if not coeffs:
        raise ValueError("--coeffs must list at least one coefficient")
    series = TruncSeries.make(ZZ, coeffs, len(coeffs) - 1)
    rat = rationalize(series, args.dmax)
    if rat is None:
        return _emit_not_found(args, args.dmax)
    return _emit_rat(args, rat)


# ---------------------------------------------------------------- zeta


def _zeta_output(args, zeta) -> int:
    if args.rationalize:
        rat = rationalize(zeta.series, args.dmax)
        if rat is None:
            return _emit_not_found(args, args.dmax)
        return _emit_rat(args, rat)
    _emit(args, zeta.render(), zeta.render_json())
    return 0


def _cmd_zeta_weil(args) -> int:
    n = _check_prec(args.prec)
    variety = _variety_arg(args.variety)
    p, k = _field_args(args, variety)
    zeta = weil_zeta(variety, p**k, n, args.threads)
    return _zeta_output(args, zeta)


def _cmd_zeta_kapranov(args) -> int:
    n = _check_prec(args.prec)
    if args.measure == "counting":
        variety = _variety_arg(args.variety) if args.variety else None
        if variety is None:
            raise ValueError("--variety is required for the counting measure")
        measure = _measure_arg(args, variety)
        zeta = kapranov_zeta(measure, variety, n)
    else:
        measure = _measure_arg(args)
        atom = _class_arg(args, measure, "variety", "X")
        zeta = kapranov_zeta(measure, atom, n)
    return _zeta_output(args, zeta)


# --------------------------------------------------------------- check


def _cmd_check_expo(args) -> int:
    n = _check_prec(args.prec)
    if args.measure == "counting":
        x = _variety_arg(args.x) if args.x else None
        if x is None:
            raise ValueError("--x is required for the counting measure")
        measure = _measure_arg(args, x)
        y = _variety_arg(args.y) if args.y else None
        if y is None:
            raise ValueError("--y is required for the counting measure")
    else:
        measure = _measure_arg(args)
        x = _class_arg(args, measure, "x", "X")
        y = _class_arg(args, measure, "y", "Y")
    return _emit_verdict(args, check_exponentiation(measure, x, y, n))


def _totaro_style_args(args):
    n = _check_prec(args.prec)
    if args.measure == "counting":
        x = _variety_arg(args.variety) if args.variety else None
        if x is None:
            raise ValueError("--variety is required for the counting measure")
        measure = _measure_arg(args, x)
    else:
        measure = _measure_arg(args)
        x = _class_arg(args, measure, "variety", "X")
    return measure, x, n


def _cmd_check_totaro(args) -> int:
    measure, x, n = _totaro_style_args(args)
    if args.trace:
        report = totaro_proof_trace(measure, x, args.n, n)
        _emit(args, report.render(), report.render_json())
        return 0 if report.holds else 1
    return _emit_verdict(args, totaro_check(measure, x, args.n, n))


def _cmd_check_bundle(args) -> int:
    measure, x, n = _totaro_style_args(args)
    verdict = bundle_zeta_check(measure, x, args.n, n, args.kind)
    return _emit_verdict(args, verdict)


def _cmd_check_gident(args) -> int:
    n = _check_prec(args.prec)
    g = _t_series_arg(args.g, _GIDENT_VARS, n)
    s = parse_poly(args.s, _GIDENT_VARS)
    p_series = _t_series_arg(args.poly, _GIDENT_VARS, n)
    return _emit_verdict(
        args, g_witt_identity_check(g, s, p_series.coeffs, n)
    )


def _cmd_check_lambda_axioms(args) -> int:
    n = _check_prec(args.prec)
    rng = random.Random(args.seed)
    structure = BINOMIAL_Z if args.structure == "binomial" else PLETHYSTIC_ZU

    def draw():
        if structure is BINOMIAL_Z:
            return rng.randint(-6, 6)
        return ZU.from_terms(
            {(d,): rng.randint(-2, 2) for d in range(4)}
        )

    for trial in range(args.trials):
        verdict = check_lambda_additivity(structure, draw(), draw(), n)
        if not verdict.holds:
            _emit(
                args,
                f"trial {trial}: {verdict.render()}",
                {"trial": trial, **verdict.render_json()},
            )
            return 1
    _emit(
        args,
        f"HOLDS (precision {n})",
        {"holds": True, "precision": n, "trials": args.trials},
    )
    return 0


# --------------------------------------------------------------- count


def _cmd_count_points(args) -> int:
    variety = _variety_arg(args.variety)
    p, k = _field_args(args, variety)
    value = count_points(variety, args.m, p, k, args.threads)
    _emit(args, str(value), {"value": str(value)})
    return 0


def _counts_output(args, values) -> int:
    parts = [str(v) for v in values]
    _emit(args, ", ".join(parts), {"counts": parts})
    return 0


def _cmd_count_census(args) -> int:
    variety = _variety_arg(args.variety)
    p, k = _field_args(args, variety)
    census = closed_point_census(variety, args.degree, p, k, args.threads)
    return _counts_output(args, census)


def _cmd_count_sym(args) -> int:
    variety = _variety_arg(args.variety)
    p, k = _field_args(args, variety)
    counts = sym_product_counts(variety, args.degree, p, k, args.threads)
    return _counts_output(args, counts)


# ------------------------------------------------------------- parser


def _add_common(p, prec=True, dmax=False, threads=False):
    if prec:
        p.add_argument(
            "--prec", type=int, default=16,
            help="series precision N; coefficients up to t^N (default 16)",
        )
    if dmax:
        p.add_argument(
            "--dmax", type=int, default=6,
            help="degree bound for rational reconstruction (default 6)",
        )
    if threads:
        p.add_argument(
            "--threads", type=int, default=1,
            help="worker threads for censuses; never changes output",
        )
    p.add_argument(
        "--json", action="store_true", help="emit JSON instead of text"
    )


def _add_series_a(p, with_b=False):
    p.add_argument("--a", required=True, help="polynomial in t, e.g. '1-2*t'")
    p.add_argument(
        "--inv-a", action="store_true", help="use the series inverse of --a"
    )
    if with_b:
        p.add_argument("--b", required=True, help="polynomial in t")
        p.add_argument(
            "--inv-b", action="store_true",
            help="use the series inverse of --b",
        )


def _add_variety(p, flag="--variety", required=True):
    p.add_argument(
        flag, required=required,
        help="catalog name (pt a1 a2 gm p1 p2 e5), JSON file path, "
        "or inline JSON",
    )


def _add_field(p):
    p.add_argument(
        "--q", type=int,
        help="finite field size, a prime power; defaults to the "
        "variety's declared field",
    )


def _add_measure(p):
    p.add_argument(
        "--measure", default="counting",
        choices=("counting", "euler", "poincare"),
        help="motivic measure (default counting)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittzeta",
        description="Big Witt ring arithmetic, zeta series of motivic "
        "measures, and exact identity checks.",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    witt = groups.add_parser("witt", help="Witt ring arithmetic over Z")
    witt_sub = witt.add_subparsers(dest="action", required=True)
    p = witt_sub.add_parser("add", help="Witt sum (series product)")
    _add_series_a(p, with_b=True)
    _add_common(p)
    p.set_defaults(func=_cmd_witt_add)
    p = witt_sub.add_parser("mul", help="Witt product (ghost coordinates)")
    _add_series_a(p, with_b=True)
    _add_common(p)
    p.set_defaults(func=_cmd_witt_mul)
    p = witt_sub.add_parser("neg", help="Witt negation (series inverse)")
    _add_series_a(p)
    _add_common(p)
    p.set_defaults(func=_cmd_witt_neg)
    p = witt_sub.add_parser(
        "teichmuller", help="the class [a] = (1 - a*t)^(-1)"
    )
    p.add_argument("--a", type=int, required=True, help="integer a")
    _add_common(p)
    p.set_defaults(func=_cmd_witt_teichmuller)
    p = witt_sub.add_parser("ghost", help="power-sum coordinates p_1..p_N")
    _add_series_a(p)
    _add_common(p)
    p.set_defaults(func=_cmd_witt_ghost)
    p = witt_sub.add_parser("iota", help="the involution g(t) -> g(-t)^(-1)")
    _add_series_a(p)
    _add_common(p)
    p.set_defaults(func=_cmd_witt_iota)

    rat = groups.add_parser("rat", help="rational Witt vectors")
    rat_sub = rat.add_subparsers(dest="action", required=True)
    p = rat_sub.add_parser(
        "mul", help="Witt product of rational forms via resultants"
    )
    p.add_argument("--a-num", required=True, help="numerator of a, in t")
    p.add_argument("--a-den", default="1", help="denominator of a (default 1)")
    p.add_argument("--b-num", required=True, help="numerator of b, in t")
    p.add_argument("--b-den", default="1", help="denominator of b (default 1)")
    _add_common(p, prec=False)
    p.set_defaults(func=_cmd_rat_mul)
    p = rat_sub.add_parser(
        "rationalize", help="recover p/q from series coefficients"
    )
    p.add_argument(
        "--coeffs", required=True,
        help="comma-separated integer coefficients c_0,c_1,... with c_0=1",
    )
    _add_common(p, prec=False, dmax=True)
    p.set_defaults(func=_cmd_rat_rationalize)

    zeta = groups.add_parser("zeta", help="zeta series of measures")
    zeta_sub = zeta.add_subparsers(dest="action", required=True)
    p = zeta_sub.add_parser("weil", help="counting-measure zeta over F_q")
    _add_variety(p)
    _add_field(p)
    p.add_argument(
        "--rationalize", action="store_true",
        help="report the rational form instead of the series",
    )
    _add_common(p, dmax=True, threads=True)
    p.set_defaults(func=_cmd_zeta_weil)
    p = zeta_sub.add_parser("kapranov", help="zeta series of a chosen measure")
    _add_measure(p)
    _add_variety(p, required=False)
    p.add_argument(
        "--variety-value",
        help="measure value of the class, for euler/poincare "
        "(an integer, or a polynomial in u)",
    )
    _add_field(p)
    p.add_argument(
        "--rationalize", action="store_true",
        help="report the rational form instead of the series",
    )
    _add_common(p, dmax=True, threads=True)
    p.set_defaults(func=_cmd_zeta_kapranov)

    check = groups.add_parser("check", help="identity checkers")
    check_sub = check.add_subparsers(dest="action", required=True)
    p = check_sub.add_parser(
        "expo", help="zeta(X x Y) = zeta(X) * zeta(Y) in the Witt ring"
    )
    _add_measure(p)
    _add_variety(p, flag="--x", required=False)
    _add_variety(p, flag="--y", required=False)
    p.add_argument("--x-value", help="measure value of X (sigma measures)")
    p.add_argument("--y-value", help="measure value of Y (sigma measures)")
    _add_field(p)
    _add_common(p, threads=True)
    p.set_defaults(func=_cmd_check_expo)
    p = check_sub.add_parser(
        "totaro", help="zeta(X x A^n; t) = zeta(X; mu(L)^n t)"
    )
    _add_measure(p)
    _add_variety(p, required=False)
    p.add_argument("--variety-value", help="measure value of X (sigma measures)")
    _add_field(p)
    p.add_argument("--n", type=int, default=1, help="affine factor dimension")
    p.add_argument(
        "--trace", action="store_true",
        help="verify the five-link Witt-algebra proof chain",
    )
    _add_common(p, threads=True)
    p.set_defaults(func=_cmd_check_totaro)
    p = check_sub.add_parser(
        "bundle", help="trivial fiber/projective bundle zeta formulas"
    )
    _add_measure(p)
    _add_variety(p, required=False)
    p.add_argument("--variety-value", help="measure value of X (sigma measures)")
    _add_field(p)
    p.add_argument("--n", type=int, default=1, help="fiber dimension")
    p.add_argument(
        "--kind", default="fiber", choices=("fiber", "projective"),
        help="bundle type (default fiber)",
    )
    _add_common(p, threads=True)
    p.set_defaults(func=_cmd_check_bundle)
    p = check_sub.add_parser(
        "gident",
        help="g * (P(t)(1-st)^(-1)) = g(st) +_W (g * P(t)) "
        "over Z[a,b,s]",
    )
    p.add_argument(
        "--g", required=True,
        help="series in t with coefficients in a, b, s; constant term 1",
    )
    p.add_argument("--s", required=True, help="twist value, polynomial in a, b, s")
    p.add_argument(
        "--poly", default="1",
        help="polynomial P(t) with P(0)=1 (default 1)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_check_gident)
    p = check_sub.add_parser(
        "lambda-axioms",
        help="lambda_t(a+b) = lambda_t(a) lambda_t(b) on random inputs",
    )
    p.add_argument(
        "--structure", default="binomial",
        choices=("binomial", "plethystic"),
        help="sigma structure on Z or Z[u] (default binomial)",
    )
    p.add_argument("--trials", type=int, default=100, help="random trials")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    _add_common(p)
    p.set_defaults(func=_cmd_check_lambda_axioms)

    count = groups.add_parser("count", help="point counting over F_q")
    count_sub = count.add_subparsers(dest="action", required=True)
    p = count_sub.add_parser("points", help="rational points over F_(q^m)")
    _add_variety(p)
    _add_field(p)
    p.add_argument("--m", type=int, default=1, help="extension degree")
    _add_common(p, prec=False, threads=True)
    p.set_defaults(func=_cmd_count_points)
    p = count_sub.add_parser(
        "census", help="closed points of degrees 1..D"
    )
    _add_variety(p)
    _add_field(p)
    p.add_argument("--degree", type=int, default=8, help="largest degree D")
    _add_common(p, prec=False, threads=True)
    p.set_defaults(func=_cmd_count_census)
    p = count_sub.add_parser(
        "sym", help="points of symmetric powers Sym^0..Sym^D"
    )
    _add_variety(p)
    _add_field(p)
    p.add_argument("--degree", type=int, default=8, help="largest power D")
    _add_common(p, prec=False, threads=True)
    p.set_defaults(func=_cmd_count_sym)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WittzetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
