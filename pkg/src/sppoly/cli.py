"""Command-line front end.

Subcommands: build, classify, factor, roots, enumerate, cyclotomic, verify.
Records go to stdout (human blocks by default, one JSON object per line
with --format json), diagnostics to stderr. Exit codes: 0 success, 1 domain
error (not in any family, invalid parameters, failed verification), 2
malformed polynomial text or usage.

Polynomial arguments are plain text like "x^4+2x^3+3x^2+2x+1"; use "-" to
read from stdin, and put "--" before arguments that start with a minus sign.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cyclotomic import cyclotomic, divisors, totient
from .errors import ParseError, SppolyError
from .polynomial import Polynomial, all_one, x_power_minus_one
from .roots import roots_of, stability_verdict
from .staircase import (
    SpDescriptor,
    build_sp,
    classify_sp,
    factor_sp,
    sp_count,
    verify,
)
from .textio import format_factors, format_polynomial, format_scalar, parse_polynomial
from .variants import (
    AspDescriptor,
    GspDescriptor,
    MspDescriptor,
    build_asp,
    build_gsp,
    build_msp,
    classify_asp,
    classify_gsp,
    classify_msp,
    factor_asp,
    factor_gsp,
    factor_msp,
    normalize_asp_factors,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2

FAMILIES = ("sp", "asp", "msp", "gsp")

RESIDUAL_LIMIT = 1e-9
MODULUS_SLACK = 1e-12


# -- records -----------------------------------------------------------------


def make_record(input_text, family=None, params=None, factors=None, roots=None,
                stability=None, verified=None):
    return {
        "input": input_text,
        "family": family,
        "params": params,
        "factors": factors,
        "roots": roots,
        "stability": stability,
        "verified": verified,
    }


def emit(record, fmt, first=False):
    if fmt == "json":
        print(json.dumps(record))
        return
    if not first:
        print()
    print(f"polynomial: {record['input']}")
    if record["family"] is not None:
        print(f"family: {record['family']}")
    if record["params"] is not None:
        print("params: " + " ".join(f"{k}={v}" for k, v in record["params"].items()))
    if record["factors"] is not None:
        print(f"factors: {record['factors']}")
    for r in record["roots"] or ():
        print(
            f"root: order={r['order']} residue={r['residue']} "
            f"multiplicity={r['multiplicity']} re={r['re']!r} im={r['im']!r} "
            f"residual={r['residual']!r}"
        )
    if record["stability"] is not None:
        s = record["stability"]
        print(f"stability: {s['verdict']} (max_modulus={s['max_modulus']})")
    if record["verified"] is not None:
        print(f"verified: {'true' if record['verified'] else 'false'}")


def roots_payload(rs):
    return [
        {
            "order": e.order,
            "residue": e.residue,
            "multiplicity": e.multiplicity,
            "re": v.real,
            "im": v.imag,
            "residual": residual,
        }
        for e, v, residual in zip(rs.entries, rs.values, rs.residuals)
    ]


def stability_payload(rs):
    m = rs.max_modulus()
    return {"verdict": stability_verdict(m), "max_modulus": format_scalar(m)}


def family_params(family, desc):
    if family in ("sp", "asp"):
        return {"n": desc.n, "h": desc.h}
    if family == "msp":
        return {"base_n": desc.base_n, "d": desc.d, "h": desc.h}
    return {"n": desc.n, "h": desc.h, "alpha": format_scalar(desc.alpha)}


# -- input helpers -------------------------------------------------------------


def read_poly_text(raw: str) -> str:
    return sys.stdin.read() if raw == "-" else raw


def parse_input(raw: str, max_degree: int) -> Polynomial:
    p = parse_polynomial(read_poly_text(raw))
    guard_degree(p.degree, max_degree)
    return p


def guard_degree(degree, max_degree: int) -> None:
    if isinstance(degree, int) and degree > max_degree:
        raise SppolyError(
            f"degree {degree} exceeds the --max-degree guard ({max_degree})"
        )


def classify_any(p: Polynomial):
    """Cascade sp -> asp -> msp -> gsp; first match wins."""
    sp = classify_sp(p)
    if sp is not None:
        return "sp", sp
    asp = classify_asp(p)
    if asp is not None:
        return "asp", asp
    msp = classify_msp(p)
    if msp is not None:
        return "msp", msp
    gsp = classify_gsp(p)
    if gsp is not None:
        return "gsp", gsp
    return None, None


def build_family(family, desc):
    return {"sp": build_sp, "asp": build_asp, "msp": build_msp, "gsp": build_gsp}[family](desc)


def factor_family(family, desc, normalize_asp=False):
    if family == "sp":
        return factor_sp(desc)
    if family == "asp":
        return factor_asp(desc, normalize=normalize_asp)
    if family == "msp":
        return factor_msp(desc)
    return factor_gsp(desc)


def descriptor_from_args(family, args, parser):
    def need(name):
        value = getattr(args, name.replace("-", "_"), None)
        if value is None:
            parser.error(f"family '{family}' requires --{name}")
        return value

    if family == "sp":
        return SpDescriptor(need("n"), need("h"))
    if family == "asp":
        return AspDescriptor(need("n"), need("h"))
    if family == "msp":
        return MspDescriptor(need("base-n"), need("d"), need("h"))
    return GspDescriptor(need("n"), need("h"), need("alpha"))


# -- subcommand handlers -------------------------------------------------------


def cmd_build(args, parser) -> int:
    desc = descriptor_from_args(args.family, args, parser)
    p = build_family(args.family, desc)
    guard_degree(p.degree, args.max_degree)
    record = make_record(format_polynomial(p), args.family, family_params(args.family, desc))
    emit(record, args.format, first=True)
    return EXIT_OK


def cmd_classify(args, parser) -> int:
    p = parse_input(args.poly, args.max_degree)
    family, desc = classify_any(p)
    if family is None:
        record = make_record(format_polynomial(p), "not-in-family")
    else:
        record = make_record(format_polynomial(p), family, family_params(family, desc))
    emit(record, args.format, first=True)
    return EXIT_OK


def _resolve_factor_target(args, parser):
    """factor/roots accept either a family name plus parameter flags or polynomial text."""
    if args.target in FAMILIES:
        desc = descriptor_from_args(args.target, args, parser)
        p = build_family(args.target, desc)
        guard_degree(p.degree, args.max_degree)
        return p, args.target, desc
    p = parse_input(args.target, args.max_degree)
    family, desc = classify_any(p)
    return p, family, desc


def cmd_factor(args, parser) -> int:
    p, family, desc = _resolve_factor_target(args, parser)
    if family is None:
        emit(make_record(format_polynomial(p), "not-in-family"), args.format, first=True)
        print("error: polynomial is not in the staircase families", file=sys.stderr)
        return EXIT_DOMAIN
    f = factor_family(family, desc, args.normalize_asp)
    verified = verify(p, f)
    record = make_record(
        format_polynomial(p), family, family_params(family, desc),
        factors=format_factors(f), verified=verified,
    )
    emit(record, args.format, first=True)
    return EXIT_OK if verified else EXIT_DOMAIN


def cmd_roots(args, parser) -> int:
    p, family, desc = _resolve_factor_target(args, parser)
    if family is None:
        emit(make_record(format_polynomial(p), "not-in-family"), args.format, first=True)
        print("error: polynomial is not in the staircase families", file=sys.stderr)
        return EXIT_DOMAIN
    f = factor_family(family, desc, args.normalize_asp)
    verified = verify(p, f)
    rs = roots_of(f, source=p)
    record = make_record(
        format_polynomial(p), family, family_params(family, desc),
        factors=format_factors(f), roots=roots_payload(rs),
        stability=stability_payload(rs), verified=verified,
    )
    emit(record, args.format, first=True)
    return EXIT_OK if verified else EXIT_DOMAIN


def cmd_enumerate(args, parser) -> int:
    n = args.n
    if n < 1:
        print("error: --n must be a positive integer", file=sys.stderr)
        return EXIT_DOMAIN
    guard_degree(n, args.max_degree)
    for h in range(1, sp_count(n) + 1):
        desc = SpDescriptor(n, h)
        record = make_record(format_polynomial(build_sp(desc)), "sp", family_params("sp", desc))
        emit(record, args.format, first=(h == 1))
    return EXIT_OK


def cmd_cyclotomic(args, parser) -> int:
    n = args.n
    if n < 1:
        print("error: index must be a positive integer", file=sys.stderr)
        return EXIT_DOMAIN
    guard_degree(totient(n), args.max_degree)
    record = make_record(format_polynomial(cyclotomic(n)), params={"n": n})
    emit(record, args.format, first=True)
    return EXIT_OK


# -- verification sweeps -------------------------------------------------------


def _sp_cases(limit):
    for n in range(1, limit + 1):
        for h in range(1, sp_count(n) + 1):
            yield SpDescriptor(n, h)


def sweep_cyclotomic_product(limit):
    failures = 0
    for n in range(1, limit + 1):
        product = Polynomial((1,))
        for d in divisors(n):
            product = product * cyclotomic(d)
        if product != x_power_minus_one(n):
            failures += 1
    return limit, failures


def sweep_staircase_factorization(limit):
    cases = failures = 0
    for desc in _sp_cases(limit):
        cases += 1
        if not verify(build_sp(desc), factor_sp(desc)):
            failures += 1
    return cases, failures


def sweep_all_one_product(limit):
    cases = failures = 0
    for desc in _sp_cases(limit):
        cases += 1
        l, m = desc.h - 1, desc.n - desc.h + 1
        if all_one(l) * all_one(m) != build_sp(desc):
            failures += 1
    return cases, failures


def sweep_cyclotomic_properties(limit):
    from .cyclotomic import check_property_1, check_property_2, check_property_3

    cases = failures = 0
    for m in range(3, limit + 1, 2):
        cases += 1
        if not check_property_1(m):
            failures += 1
    for p in (2, 3, 5, 7):
        for m in range(1, limit // p + 1):
            cases += 1
            ok = check_property_2(m, p) if m % p == 0 else check_property_3(m, p)
            if not ok:
                failures += 1
    return cases, failures


def sweep_variant_round_trips(asp_limit, msp_limit, gsp_limit):
    cases = failures = 0
    for desc in _sp_cases(asp_limit):
        cases += 1
        a = AspDescriptor(desc.n, desc.h)
        p = build_asp(a)
        if classify_asp(p) != a or not verify(p, factor_asp(a)):
            failures += 1
    for base in range(1, msp_limit + 1):
        for d in (2, 3, 5):
            for h in range(1, sp_count(base) + 1):
                cases += 1
                m = MspDescriptor(base, d, h)
                p = build_msp(m)
                if classify_msp(p) != m or not verify(p, factor_msp(m)):
                    failures += 1
    for n in range(1, gsp_limit + 1):
        for alpha in (Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 7)):
            for h in range(1, sp_count(n) + 1):
                cases += 1
                g = GspDescriptor(n, h, alpha)
                p = build_gsp(g)
                if classify_gsp(p) != g or not verify(p, factor_gsp(g)):
                    failures += 1
    return cases, failures


def sweep_root_enumeration(sp_limit, asp_limit, msp_limit, gsp_limit):
    """Residuals < 1e-9, multiplicity sums, and exact unit moduli where due."""
    cases = failures = 0

    def check(p, f, on_unit_circle):
        nonlocal cases, failures
        if not isinstance(p.degree, int) or p.degree > 200:
            return
        cases += 1
        rs = roots_of(f, source=p)
        ok = rs.total_multiplicity() == p.degree and rs.max_residual() < RESIDUAL_LIMIT
        if on_unit_circle:
            ok = ok and all(e.modulus() == 1 for e in rs)
            ok = ok and all(abs(abs(v) - 1) < MODULUS_SLACK for v in rs.values)
            ok = ok and stability_verdict(rs.max_modulus()) == "marginal"
        if not rs.is_conjugate_closed():
            ok = False
        if not ok:
            failures += 1

    for desc in _sp_cases(sp_limit):
        check(build_sp(desc), factor_sp(desc), True)
    for desc in _sp_cases(asp_limit):
        a = AspDescriptor(desc.n, desc.h)
        check(build_asp(a), factor_asp(a), True)
    for base in range(1, msp_limit + 1):
        for d in (2, 3, 5):
            for h in range(1, sp_count(base) + 1):
                m = MspDescriptor(base, d, h)
                check(build_msp(m), factor_msp(m), True)
    for n in range(1, gsp_limit + 1):
        for alpha in (Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 7)):
            for h in range(1, sp_count(n) + 1):
                g = GspDescriptor(n, h, alpha)
                check(build_gsp(g), factor_gsp(g), False)
    return cases, failures


def sweep_minus_one_root(limit):
    cases = failures = 0
    for desc in _sp_cases(limit):
        cases += 1
        value = build_sp(desc).evaluate(-1)
        expected_zero = desc.h % 2 == 0 or (desc.n + 2 - desc.h) % 2 == 0
        if (value == 0) != expected_zero:
            failures += 1
    return cases, failures


def cmd_verify(args, parser) -> int:
    cap = args.max_n

    def bound(default):
        return default if cap is None else min(default, cap)

    sweeps = [
        ("cyclotomic-product", lambda: sweep_cyclotomic_product(bound(300))),
        ("staircase-factorization", lambda: sweep_staircase_factorization(bound(200))),
        ("all-one-product", lambda: sweep_all_one_product(bound(100))),
        ("cyclotomic-properties", lambda: sweep_cyclotomic_properties(bound(200))),
        (
            "variant-round-trips",
            lambda: sweep_variant_round_trips(bound(100), bound(60), bound(60)),
        ),
        (
            "root-enumeration",
            lambda: sweep_root_enumeration(bound(200), bound(100), bound(60), bound(60)),
        ),
        ("minus-one-root-rule", lambda: sweep_minus_one_root(bound(100))),
    ]
    any_failed = False
    for name, run in sweeps:
        cases, failures = run()
        ok = failures == 0
        any_failed = any_failed or not ok
        if args.format == "json":
            print(json.dumps({"sweep": name, "cases": cases, "failures": failures, "ok": ok}))
        else:
            status = "ok" if ok else "FAILED"
            print(f"{name}: {cases - failures}/{cases} {status}")
    return EXIT_DOMAIN if any_failed else EXIT_OK


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human",
                        help="output format (default: human)")
    common.add_argument("--max-degree", type=int, default=1000,
                        help="refuse inputs above this degree (default: 1000)")
    common.add_argument("--normalize-asp", action="store_true",
                        help="rewrite odd negated-argument factors to identity-argument form")

    parser = argparse.ArgumentParser(
        prog="sppoly",
        description="Construct, classify, and factor staircase palindromic polynomials "
                    "into cyclotomic polynomials; enumerate their roots of unity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", parents=[common], help="construct a family member")
    fam = p_build.add_subparsers(dest="family", required=True)
    for name in FAMILIES:
        fp = fam.add_parser(name, parents=[common])
        if name == "msp":
            fp.add_argument("--base-n", type=int, required=True)
            fp.add_argument("--d", type=int, required=True)
        else:
            fp.add_argument("--n", type=int, required=True)
        fp.add_argument("--h", type=int, required=True)
        if name == "gsp":
            fp.add_argument("--alpha", type=Fraction, required=True)
        fp.set_defaults(handler=cmd_build)

    p_classify = sub.add_parser("classify", parents=[common], help="identify the family of a polynomial")
    p_classify.add_argument("poly", help="polynomial text, or - for stdin")
    p_classify.set_defaults(handler=cmd_classify)

    for cmd, handler in (("factor", cmd_factor), ("roots", cmd_roots)):
        sp = sub.add_parser(cmd, parents=[common],
                            help=f"{cmd} a polynomial (by text) or a family member (by parameters)")
        sp.add_argument("target", help="polynomial text, - for stdin, or a family name (sp|asp|msp|gsp)")
        sp.add_argument("--n", type=int)
        sp.add_argument("--h", type=int)
        sp.add_argument("--base-n", type=int)
        sp.add_argument("--d", type=int)
        sp.add_argument("--alpha", type=Fraction)
        sp.set_defaults(handler=handler)

    p_enum = sub.add_parser("enumerate", parents=[common], help="list every SP polynomial of one degree")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.set_defaults(handler=cmd_enumerate)

    p_cyc = sub.add_parser("cyclotomic", parents=[common], help="print one cyclotomic polynomial")
    p_cyc.add_argument("n", type=int)
    p_cyc.set_defaults(handler=cmd_cyclotomic)

    p_verify = sub.add_parser("verify", parents=[common], help="run the exact verification sweeps")
    p_verify.add_argument("--max-n", type=int, default=None,
                          help="cap every sweep bound (default: full bounds)")
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SppolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
