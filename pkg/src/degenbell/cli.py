"""Command line interface.

Subcommands: table (triangle and family rows), verify (identity
certificates as JSON Lines), normal-order (expression to canonical
form), apply (expression acting on the truncated exponential series).

Exit codes: 0 success, 1 at least one verification failed, 2 usage or
expression errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Iterator, List, Optional

from .diffrep import vacuum_coherent
from .expr import (
    ExprError,
    eval_source,
    format_lambda_poly,
    format_nf,
    format_rational,
    format_xpoly,
    lambda_poly_csv,
)
from .polynomials import FAMILY_KINDS, bell_degenerate, dowling, dowling_r, make_family
from .rings import LAM, LambdaPoly
from .spivey import (
    IDENTITY_NAMES,
    VerificationCertificate,
    make_certificate,
    run_identity,
)
from .triangles import (
    TABLE_KINDS,
    make_table,
    stirling2_degenerate,
    whitney_degenerate,
    whitney_r_degenerate,
)
from .weyl import NormalForm, degenerate_power

_OPERATOR_IDENTITIES = (
    "eq10", "eq34", "eq35", "thm22", "thm22b", "thm23", "thm24", "fock-dowling",
)


class _UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenbell",
        description="Exact degenerate Bell/Dowling algebra and boson normal ordering.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", parents=[common],
                             help="print triangle entries or polynomial family members")
    p_table.add_argument("--family", required=True, choices=TABLE_KINDS + FAMILY_KINDS)
    p_table.add_argument("--n-max", required=True, type=int, dest="n_max",
                         help="largest row index")
    p_table.add_argument("--m", type=int, default=1,
                         help="base multiplier for whitney/dowling families (default 1)")
    p_table.add_argument("--r", type=_rational, default=Fraction(1),
                         help="base shift for the r- families, a rational like 5/2 (default 1)")
    p_table.add_argument("--subst-lambda", type=_rational, dest="subst_lambda",
                         help="substitute a rational for L before printing (default: symbolic)")
    p_table.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="check identities and emit certificates as JSON Lines")
    p_verify.add_argument("--identity", required=True,
                          choices=IDENTITY_NAMES + _OPERATOR_IDENTITIES)
    p_verify.add_argument("--n", type=int, help="single value of the index n")
    p_verify.add_argument("--m", type=int,
                          help="index m for Bell-type and operator identities; base multiplier "
                               "for Dowling-type (default 2 where a base is needed)")
    p_verify.add_argument("--l", type=int, help="single value of the index l")
    p_verify.add_argument("--k", type=int, help="single value of the index k")
    p_verify.add_argument("--r", type=_rational,
                          help="base shift, a rational like 5/2 (default 1 where needed)")
    p_verify.add_argument("--n-max", type=int, dest="n_max", help="sweep n from 0 to this")
    p_verify.add_argument("--m-max", type=int, dest="m_max", help="sweep m from 0 to this")
    p_verify.add_argument("--l-max", type=int, dest="l_max", help="sweep l from 0 to this")
    p_verify.add_argument("--k-max", type=int, dest="k_max", help="sweep k from 0 to this")
    p_verify.add_argument("--sum-max", type=int, dest="sum_max",
                          help="triangular sweep: all index pairs with sum at most this")
    p_verify.add_argument("--degree", type=int, default=12,
                          help="series degree bound for the representation checks (default 12)")
    p_verify.add_argument("--format", choices=("json",), default="json")

    p_no = sub.add_parser("normal-order", parents=[common], help="normal-order a boson expression")
    p_no.add_argument("--expr", required=True)
    p_no.add_argument("--format", choices=("text", "json"), default="text")

    p_apply = sub.add_parser("apply", parents=[common],
                             help="apply an expression to the truncated exponential series")
    p_apply.add_argument("--expr", required=True)
    p_apply.add_argument("--degree", required=True, type=int,
                         help="series degree bound N; coefficients above the valid range are dropped")
    p_apply.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _subst_entry(c: LambdaPoly, value: Optional[Fraction]) -> LambdaPoly:
    if value is None:
        return c
    return LambdaPoly.const(c.subst(value))


def _cmd_table(args, out) -> int:
    if args.n_max < 0:
        raise _UsageError("--n-max must be nonnegative")
    if args.m < 1:
        raise _UsageError("--m must be a positive integer")
    if args.r < 0:
        raise _UsageError("--r must be nonnegative")
    if args.family in TABLE_KINDS:
        table = make_table(args.family, m=args.m, r=args.r)
        for n in range(args.n_max + 1):
            row = [_subst_entry(c, args.subst_lambda) for c in table.row(n)]
            if args.format == "text":
                cells = " | ".join(format_lambda_poly(c) for c in row)
                print(f"n={n}: {cells}", file=out)
            elif args.format == "csv":
                for k, c in enumerate(row):
                    print(f"{n},{k},{lambda_poly_csv(c)}", file=out)
            else:
                for k, c in enumerate(row):
                    obj = {"n": n, "k": k, "coeff": [format_rational(q) for q in c.coeffs]}
                    print(json.dumps(obj, sort_keys=True), file=out)
        return 0
    family = make_family(args.family, m=args.m, r=args.r)
    for n in range(args.n_max + 1):
        member = family.member(n)
        if args.subst_lambda is not None:
            member = member.subst_lambda(args.subst_lambda)
        if args.format == "text":
            print(format_xpoly(member), file=out)
        elif args.format == "csv":
            cells = ",".join(lambda_poly_csv(c) for c in member.coeffs)
            print(f"{n},{cells}", file=out)
        else:
            obj = {"n": n, "coeffs": [[format_rational(q) for q in c.coeffs] for c in member.coeffs]}
            print(json.dumps(obj, sort_keys=True), file=out)
    return 0


def _need(args, name: str) -> int:
    v = getattr(args, name)
    if v is None:
        raise _UsageError(f"--{name} (or a sweep range) is required for this identity")
    if v < 0:
        raise _UsageError(f"--{name} must be nonnegative")
    return v


def _pairs(args, first: str, second: str) -> Iterator:
    """Index pairs: triangular under --sum-max, rectangular under the
    per-index maxes (an absent max falls back to that index's single
    value, or 0), else the single point."""
    if args.sum_max is not None:
        if args.sum_max < 0:
            raise _UsageError("--sum-max must be nonnegative")
        for a in range(args.sum_max + 1):
            for b in range(args.sum_max - a + 1):
                yield a, b
        return
    fmax = getattr(args, f"{first.replace('-', '_')}_max", None)
    smax = getattr(args, f"{second.replace('-', '_')}_max", None)
    if fmax is not None or smax is not None:
        fhi = fmax if fmax is not None else (getattr(args, first) or 0)
        shi = smax if smax is not None else (getattr(args, second) or 0)
        for a in range(fhi + 1):
            for b in range(shi + 1):
                yield a, b
        return
    yield _need(args, first), _need(args, second)


def _single_range(args, name: str) -> Iterator[int]:
    vmax = getattr(args, f"{name}_max", None)
    if vmax is not None:
        if vmax < 0:
            raise _UsageError(f"--{name}-max must be nonnegative")
        yield from range(vmax + 1)
        return
    yield _need(args, name)


def _base_m(args) -> int:
    m = args.m if args.m is not None else 2
    if m < 1:
        raise _UsageError("--m must be a positive integer")
    return m


def _series_slice(series, through: int) -> tuple:
    return tuple(series.coeffs[: through + 1])


def _spivey_certs(args) -> Iterator[VerificationCertificate]:
    identity = args.identity
    if identity in ("spivey-classical", "spivey-deg-bell"):
        for n, m in _pairs(args, "n", "m"):
            yield run_identity(identity, n=n, m=m)
        return
    m = _base_m(args)
    r = args.r if args.r is not None else Fraction(1)
    for n, l in _pairs(args, "n", "l"):
        if identity == "spivey-deg-r-dowling":
            yield run_identity(identity, m=m, r=r, n=n, l=l)
        else:
            yield run_identity(identity, m=m, n=n, l=l)


def _operator_certs(args) -> Iterator[VerificationCertificate]:
    identity = args.identity
    num = NormalForm.number()
    if identity == "eq10":
        for n in _single_range(args, "n"):
            lhs = degenerate_power(num, n)
            rhs = NormalForm.zero()
            for k in range(n + 1):
                rhs = rhs + NormalForm.monomial(k, k, stirling2_degenerate(n, k))
            yield make_certificate(identity, {"n": n}, lhs, rhs)
        return
    if identity in ("eq34", "eq35"):
        m = _base_m(args)
        r = (args.r if args.r is not None else Fraction(1)) if identity == "eq35" else None
        shift = Fraction(1) if r is None else r
        for n in _single_range(args, "n"):
            lhs = degenerate_power(num * m + shift, n)
            rhs = NormalForm.zero()
            for k in range(n + 1):
                if r is None:
                    w = whitney_degenerate(m, n, k)
                else:
                    w = whitney_r_degenerate(m, r, n, k)
                rhs = rhs + NormalForm.monomial(k, k, w * (m ** k))
            params = {"m": m, "n": n}
            if r is not None:
                params["r"] = int(r) if r.denominator == 1 else r
            yield make_certificate(identity, params, lhs, rhs)
        return
    if identity == "thm23":
        for m, n in _pairs(args, "m", "n"):
            for k in _single_range(args, "k"):
                adk = NormalForm.creation() ** k
                lhs = degenerate_power(num - LAM * m, n) * adk
                rhs = adk * degenerate_power(num + (LambdaPoly.const(k) - LAM * m), n)
                yield make_certificate(identity, {"m": m, "n": n, "k": k}, lhs, rhs)
                comp_lhs = (num * m) * adk
                comp_rhs = adk * (num * m + m * k)
                yield make_certificate("thm23-companion", {"m": m, "k": k}, comp_lhs, comp_rhs)
        return
    if identity == "thm24":
        for n, m in _pairs(args, "n", "m"):
            lhs = degenerate_power(num, n + m)
            rhs = NormalForm.zero()
            for j in range(m + 1):
                s2 = stirling2_degenerate(m, j)
                if s2.is_zero():
                    continue
                adj = NormalForm.creation() ** j
                aj = NormalForm.annihilation() ** j
                mid = degenerate_power(num + (LambdaPoly.const(j) - LAM * m), n)
                rhs = rhs + adj * mid * aj * s2
            yield make_certificate(identity, {"n": n, "m": m}, lhs, rhs)
        return
    bound = args.degree
    if bound < 0:
        raise _UsageError("--degree must be nonnegative")
    e = vacuum_coherent(bound)
    if identity == "thm22":
        for k in _single_range(args, "k"):
            if k > bound:
                raise _UsageError("--k cannot exceed --degree")
            hit = e.apply(NormalForm.monomial(0, k))
            through = bound - k
            yield make_certificate(
                identity, {"k": k, "degree": bound},
                _series_slice(hit, through), _series_slice(e, through),
            )
        return
    if identity == "thm22b":
        for n in _single_range(args, "n"):
            lhs = e.apply(degenerate_power(num, n))
            rhs = e.times_xpoly(bell_degenerate(n))
            through = min(lhs.valid_up_to, rhs.valid_up_to)
            if through < 0:
                raise _UsageError("--degree too small for this n")
            yield make_certificate(
                identity, {"n": n, "degree": bound},
                _series_slice(lhs, through), _series_slice(rhs, through),
            )
        return
    # fock-dowling
    m = _base_m(args)
    r = args.r
    for l in _single_range(args, "l"):
        shift = Fraction(1) if r is None else r
        lhs = e.apply(degenerate_power(num * m + shift, l))
        fam = dowling(m, l) if r is None else dowling_r(m, r, l)
        rhs = e.times_xpoly(fam.scale_x(m))
        through = min(lhs.valid_up_to, rhs.valid_up_to)
        if through < 0:
            raise _UsageError("--degree too small for this l")
        params = {"m": m, "l": l, "degree": bound}
        if r is not None:
            params["r"] = int(r) if r.denominator == 1 else r
        yield make_certificate(
            "fock-dowling", params,
            _series_slice(lhs, through), _series_slice(rhs, through),
        )


def _cmd_verify(args, out) -> int:
    if args.identity in IDENTITY_NAMES:
        certs = _spivey_certs(args)
    else:
        certs = _operator_certs(args)
    passed = failed = 0
    for cert in certs:
        print(json.dumps(cert.to_json_dict(), sort_keys=True), file=out)
        if cert.passed:
            passed += 1
        else:
            failed += 1
    print(json.dumps({"failed": failed, "passed": passed, "total": passed + failed},
                     sort_keys=True), file=out)
    return 0 if failed == 0 else 1


def _cmd_normal_order(args, out) -> int:
    nf = eval_source(args.expr)
    print(format_nf(nf, args.format), file=out)
    return 0


def _cmd_apply(args, out) -> int:
    if args.degree < 0:
        raise _UsageError("--degree must be nonnegative")
    nf = eval_source(args.expr)
    series = vacuum_coherent(args.degree).apply(nf)
    if args.format == "json":
        obj = {
            "degree_bound": series.degree_bound,
            "valid_up_to": series.valid_up_to,
            "coeffs": [[format_rational(q) for q in c.coeffs] for c in series.coeffs],
        }
        print(json.dumps(obj, sort_keys=True), file=out)
        return 0
    print(f"valid_up_to: {series.valid_up_to}", file=out)
    cells = ", ".join(format_lambda_poly(series.coeff(l))
                      for l in range(series.valid_up_to + 1))
    print(cells, file=out)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "table": _cmd_table,
        "verify": _cmd_verify,
        "normal-order": _cmd_normal_order,
        "apply": _cmd_apply,
    }
    try:
        if getattr(args, "output", None):
            with open(args.output, "w", encoding="utf-8") as out:
                return handlers[args.command](args, out)
        return handlers[args.command](args, sys.stdout)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    except (_UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
