"""Command-line entry point: ``sylvsum <command> [flags]``.

Exit status 0 on success, 1 when verification finds a counterexample, 2 on
bad input.  Lists are comma separated; write ``--A=-1,2`` when the first
entry is negative.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .field import PrimeField, lift, rationals, scalar_format, scalar_parse
from .poly import Poly, render, to_json_obj
from .schur import Partition, cofactor_schur_det_eval, schur_eval
from .subres import (
    bezout_cofactors_det,
    cofactors_exchange_form,
    cofactors_from_roots,
    resultant,
    sres,
)
from .sylvester import check_distinct, syl_double
from .syminterp import node_masks, sym_eval, sym_interpolate
from .verify import (
    SuiteConfig,
    _Cache,
    _expected_with_forms,
    _signs,
    Instance,
    run_suite,
)


class InputError(Exception):
    pass


def _scalars(text: str, field) -> tuple:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(field(scalar_parse(v)) for v in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None


def _field(args):
    if args.prime is None:
        return rationals
    try:
        return PrimeField(args.prime)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _roots(args, field, need_b=True):
    A = _scalars(args.A, field)
    B = _scalars(args.B, field)
    if A is None or (need_b and B is None):
        raise InputError("--A and --B root lists are required")
    check_distinct(A, "roots of A")
    if B is not None:
        check_distinct(B, "roots of B")
    return A, B


def _polys(args, field) -> tuple[Poly, Poly]:
    """f and g from --f/--g ascending coefficients, or built from --A/--B."""
    if args.f is not None or args.g is not None:
        if args.f is None or args.g is None:
            raise InputError("give both --f and --g")
        f, g = Poly(_scalars(args.f, field)), Poly(_scalars(args.g, field))
        if f.is_zero() or g.is_zero():
            raise InputError("f and g must be nonzero")
        return f, g
    A, B = _roots(args, field)
    return Instance(0, A, B).f, Instance(0, A, B).g


def _emit_poly(args, p: Poly, label: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(to_json_obj(p)))
    else:
        print(f"{label} = {render(p)}" if label else render(p))


def _need(value, flag):
    if value is None:
        raise InputError(f"{flag} is required")
    return value


def cmd_sres(args) -> int:
    field = _field(args)
    f, g = _polys(args, field)
    d = _need(args.d, "--d")
    try:
        out = sres(f, g, d)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit_poly(args, out)
    return 0


def cmd_res(args) -> int:
    field = _field(args)
    f, g = _polys(args, field)
    try:
        value = resultant(f, g)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(json.dumps({"res": scalar_format(value)}) if args.format == "json" else scalar_format(value))
    return 0


def cmd_sylsum(args) -> int:
    field = _field(args)
    A, B = _roots(args, field)
    try:
        out = syl_double(A, B, _need(args.p, "--p"), _need(args.q, "--q"))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit_poly(args, out)
    return 0


def cmd_cofactors(args) -> int:
    field = _field(args)
    f, g = _polys(args, field)
    k = _need(args.k, "--k")
    try:
        forms = {"det": bezout_cofactors_det(f, g, k)}
        if args.A is not None and args.B is not None:
            A, B = _roots(args, field)
            forms["roots"] = cofactors_from_roots(A, B, k)
            forms["exchange"] = cofactors_exchange_form(A, B, k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    agree = all(v == forms["det"] for v in forms.values())
    if args.format == "json":
        obj = {name: {"F": to_json_obj(F), "G": to_json_obj(G)} for name, (F, G) in forms.items()}
        obj["agree"] = agree
        print(json.dumps(obj))
    else:
        for name, (F, G) in forms.items():
            print(f"{name}: F{k} = {render(F)}; G{k} = {render(G)}")
        if len(forms) > 1:
            print("agree" if agree else "DISAGREE")
    return 0 if agree else 1


def cmd_schur(args) -> int:
    field = _field(args)
    try:
        if args.parts is not None:
            lam = Partition(tuple(int(v) for v in args.parts.split(",")))
            X = _need(_scalars(args.X, field), "--X")
            value = schur_eval(lam, X)
            print(json.dumps({"value": scalar_format(value)}) if args.format == "json" else scalar_format(value))
            return 0
        A, B = _roots(args, field)
        k = _need(args.k, "--k")
        t = field(scalar_parse(_need(args.t, "--t")))
        inst = Instance(0, A, B)
        Fv = cofactor_schur_det_eval(A, inst.g, k, t, "F")
        Gv = cofactor_schur_det_eval(B, inst.f, k, t, "G")
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        print(json.dumps({"F": scalar_format(Fv), "G": scalar_format(Gv)}))
    else:
        print(f"F{k}({scalar_format(t)}) = {scalar_format(Fv)}")
        print(f"G{k}({scalar_format(t)}) = {scalar_format(Gv)}")
    return 0


def cmd_interp(args) -> int:
    field = _field(args)
    B = _need(_scalars(args.B, field), "--B")
    d = _need(args.d, "--d")
    values = _need(_scalars(args.values, field), "--values")
    try:
        masks = node_masks(len(B), d)
        if len(values) != len(masks):
            raise InputError(f"need {len(masks)} values (one per node subset), got {len(values)}")
        h = sym_interpolate(B, d, dict(zip(masks, values)))
        at = _scalars(args.at, field)
        value = sym_eval(h, at) if at is not None else None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        obj = h.to_json_obj()
        if value is not None:
            obj["value"] = scalar_format(value)
        print(json.dumps(obj))
    else:
        for mask, c in h.coeffs.items():
            Bp = [scalar_format(b) for i, b in enumerate(B) if mask >> i & 1]
            print(f"c[{','.join(Bp)}] = {scalar_format(c)}")
        if value is not None:
            print(f"h({args.at}) = {scalar_format(value)}")
    return 0


def cmd_show_theorem1(args) -> int:
    field = _field(args)
    A, B = _roots(args, field)
    inst = Instance(args.seed or 0, A, B)
    m, n = inst.m, inst.n
    cache = _Cache(inst) if m <= n else _Cache(inst.swapped())
    rows = []
    failed = False
    for p in range(m + 1):
        for q in range(n + 1):
            d, k, sigma, c, e = _signs(m, n, p, q)
            branch, forms = _expected_with_forms(inst, p, q, cache)
            computed = syl_double(A, B, p, q)
            ok = computed == forms[0] and all(F == forms[0] for F in forms)
            failed |= not ok
            rows.append((p, q, d, k, branch, computed, ok))
    if args.format == "json":
        print(json.dumps([
            {"p": p, "q": q, "d": d, "k": k, "branch": b, "computed": to_json_obj(P), "pass": ok}
            for p, q, d, k, b, P, ok in rows
        ]))
    else:
        for p, q, d, k, b, P, ok in rows:
            print(f"p={p} q={q} d={d} k={k} {b:<12} {'ok  ' if ok else 'FAIL'} {render(P)}")
    return 1 if failed else 0


def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        max_m=args.max_m,
        max_n=args.max_n,
        seeds=args.seeds,
        range_=args.range,
        m_le_n=not args.all_shapes,
        full=args.full,
        prime=args.prime,
    )
    if cfg.max_m < 1 or cfg.max_n < 1 or cfg.seeds < 1:
        raise InputError("--max-m, --max-n and --seeds must be positive")
    if args.prime is not None:
        _field(args)
    result = run_suite(cfg, workers=args.jobs)
    if args.format == "json":
        print(json.dumps(result.to_json_obj()))
    else:
        print(f"theorem reports: {len(result.reports)}, other checks: {len(result.checks)}, failures: {len(result.failures)}")
        for bad in result.failures:
            print(f"FAIL {json.dumps(bad.to_json_obj())}")
    return 0 if result.ok else 1


COMMANDS = {
    "sres": cmd_sres,
    "res": cmd_res,
    "sylsum": cmd_sylsum,
    "cofactors": cmd_cofactors,
    "schur": cmd_schur,
    "interp": cmd_interp,
    "verify": cmd_verify,
    "show-theorem1": cmd_show_theorem1,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sylvsum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--prime", type=int, default=None, help="work in GF(p), p a prime above 2^30")
        return p

    def roots(p):
        p.add_argument("--A", help="roots of f, e.g. 1,2")
        p.add_argument("--B", help="roots of g")
        return p

    def coeffs(p):
        p.add_argument("--f", help="coefficients of f, ascending powers")
        p.add_argument("--g", help="coefficients of g, ascending powers")
        return p

    p = coeffs(roots(common(sub.add_parser("sres", help="subresultant Sres_d(f, g)"))))
    p.add_argument("--d", type=int)
    coeffs(roots(common(sub.add_parser("res", help="resultant of f and g"))))
    p = roots(common(sub.add_parser("sylsum", help="double sum Syl_{p,q}(A, B)")))
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p = coeffs(roots(common(sub.add_parser("cofactors", help="Bezout cofactors F_k, G_k"))))
    p.add_argument("--k", type=int)
    p = roots(common(sub.add_parser("schur", help="Schur polynomial, or the Schur forms of F_k, G_k at t")))
    p.add_argument("--lambda", dest="parts", help="partition, e.g. 2,1")
    p.add_argument("--X", help="evaluation point for s_lambda")
    p.add_argument("--k", type=int)
    p.add_argument("--t")
    p = common(sub.add_parser("interp", help="symmetric Lagrange interpolation on nodes B"))
    p.add_argument("--B")
    p.add_argument("--d", type=int)
    p.add_argument("--values", help="one value per node subset B\\B', increasing bitmask order")
    p.add_argument("--at", help="optional evaluation point")
    p = common(sub.add_parser("verify", help="run the identity suite"))
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--range", type=int, default=20)
    p.add_argument("--full", action="store_true", help="also run every identity check, not only the double-sum table")
    p.add_argument("--all-shapes", action="store_true", help="include m > n instances")
    p.add_argument("--jobs", type=int, default=1)
    p = roots(common(sub.add_parser("show-theorem1", help="branch table for one instance")))
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
