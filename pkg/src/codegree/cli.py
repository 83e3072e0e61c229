"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a check reports a failure
(or a tie on a strict claim), 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from codegree import catalog, chartab, verifier
from codegree.catalog import CatalogError, Family
from codegree.criterion import constant_a, sharpness_scan
from codegree.cyclotomic import cyclotomic, eval_poly, render_poly
from codegree.exact import decimal_str, parse_rational, render_rational


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        value = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if value <= 0:
        raise argparse.ArgumentTypeError("k must be positive")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--k", type=_rational_arg, default=None, help="constant k as num/den or integer (default: a)")
    common.add_argument("--s", type=_positive_int, default=2, help="exponent s in k*cod <= deg^s")

    parser = argparse.ArgumentParser(prog="codegree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="re-verify an inequality family over a grid")
    v.add_argument("check", choices=[*verifier.CHECKS, "all"])
    defaults = verifier.GridConfig()
    for name in ("q_max", "n_max", "m_max", "f_max", "p_max", "t_max", "alt_max"):
        v.add_argument("--" + name.replace("_", "-"), type=_positive_int, default=getattr(defaults, name))
    v.add_argument("--allow-equalities", action="store_true", help="treat ties on strict claims as warnings")

    sub.add_parser("sharpness", parents=[common], help="scan sporadic degrees for the extremal ratio")

    g = sub.add_parser("group", parents=[common], help="order and degrees of one simple group")
    g.add_argument("family", choices=[f.value for f in Family])
    g.add_argument("--n", type=_positive_int)
    g.add_argument("--q", type=_positive_int)
    g.add_argument("--Q", type=_positive_int, dest="Q")
    g.add_argument("--m", type=_positive_int, help="Suzuki/Ree parameter: Q = 2^(2m+1) or 3^(2m+1)")
    g.add_argument("--name", help="sporadic group name, e.g. ON or Fi22")

    t = sub.add_parser("table", help="character-table checks")
    tsub = t.add_subparsers(dest="table_command", required=True)
    tc = tsub.add_parser("check", parents=[common], help="codegree spectrum and criterion for a table file")
    tc.add_argument("file")

    c = sub.add_parser("cyclotomic", parents=[common], help="print a cyclotomic polynomial")
    c.add_argument("n", type=_positive_int)
    c.add_argument("--at", type=int, default=None, help="evaluate at this integer")
    return parser


def _header(k: Fraction) -> list[str]:
    a = constant_a()
    return [f"k = {render_rational(k)} (~{decimal_str(k)})", f"a = {render_rational(a)} (~{decimal_str(a)})"]


def _emit(out, payload: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _case_line(kind: str, case: dict) -> str:
    params = ", ".join(f"{k}={v}" for k, v in case["params"].items())
    return f"  {kind}: {case['claim']} [{params}]: {case['lhs']} vs {case['rhs']}"


def cmd_verify(args, out) -> int:
    k = args.k if args.k is not None else constant_a()
    cfg = verifier.GridConfig(
        q_max=args.q_max,
        n_max=args.n_max,
        m_max=args.m_max,
        f_max=args.f_max,
        p_max=args.p_max,
        t_max=args.t_max,
        alt_max=args.alt_max,
        k=k,
    )
    names = list(verifier.CHECKS) if args.check == "all" else [args.check]
    reports = [verifier.CHECKS[name](cfg) for name in names]
    ok = all(r.ok(args.allow_equalities) for r in reports)
    lines = _header(k)
    for r in reports:
        status = "PASS" if r.ok(args.allow_equalities) else "FAIL"
        lines.append(
            f"{status} {r.check_name}: {r.cases_checked} cases, {r.strict_passes} strict, "
            f"{len(r.equalities)} equal, {len(r.failures)} failed"
        )
        for e in r.equalities:
            kind = "equality" if e["strict_claimed"] else "tie (non-strict claim)"
            if e["strict_claimed"] and args.allow_equalities:
                kind = "equality (allowed)"
            lines.append(_case_line(kind, e))
        for f in r.failures:
            lines.append(_case_line("failure", f))
        lines.extend(f"  note: {n}" for n in r.notes)
    payload = {
        "k": render_rational(k),
        "a": render_rational(constant_a()),
        "ok": ok,
        "reports": [r.to_dict() for r in reports],
    }
    _emit(out, payload, lines, args.json)
    return 0 if ok else 1


def cmd_sharpness(args, out) -> int:
    rep = sharpness_scan()
    a = constant_a()
    lines = _header(args.k if args.k is not None else a)
    for row in sorted(rep.rows, key=lambda r: r.name):
        mark = "  <- max" if row.name in rep.argmax else ""
        lines.append(f"  {row.name}: {row.degree}^3 / |S| = {render_rational(row.ratio)} (~{decimal_str(row.ratio)}){mark}")
    lines.append(f"maximum = {render_rational(rep.maximum)} at {', '.join(rep.argmax)}; equals a: {rep.max_equals_a}")
    lines.append(f"Fi22 (excluded): {render_rational(rep.fi22_ratio)} (~{decimal_str(rep.fi22_ratio)}) > a: {rep.fi22_exceeds_a}")
    lines.append("PASS" if rep.ok else "FAIL")
    payload = {
        "a": render_rational(a),
        "rows": [
            {"name": r.name, "degree": r.degree, "order": str(r.order), "ratio": render_rational(r.ratio)}
            for r in sorted(rep.rows, key=lambda r: r.name)
        ],
        "maximum": render_rational(rep.maximum),
        "argmax": rep.argmax,
        "max_equals_a": rep.max_equals_a,
        "unique": len(rep.argmax) == 1,
        "fi22_ratio": render_rational(rep.fi22_ratio),
        "fi22_exceeds_a": rep.fi22_exceeds_a,
        "ok": rep.ok,
    }
    _emit(out, payload, lines, args.json)
    return 0 if rep.ok else 1


def _descriptor(args) -> catalog.GroupDescriptor:
    fam = Family(args.family)
    if fam is Family.SPORADIC:
        if not args.name:
            raise UsageError("Sporadic needs --name")
        return catalog.sporadic(args.name)
    if fam is Family.TITS:
        return catalog.sporadic("Tits")
    Q = args.Q
    if args.m is not None:
        base = {Family.SUZUKI: 2, Family.REE_F4: 2, Family.REE_G2: 3}.get(fam)
        if base is None:
            raise UsageError(f"--m only applies to Suzuki and Ree families, not {fam.value}")
        Q = base ** (2 * args.m + 1)
    return catalog.GroupDescriptor(fam, n=args.n, q=args.q, Q=Q)


def cmd_group(args, out) -> int:
    d = _descriptor(args)
    order = catalog.order(d)
    info: dict = {"group": d.label, "order": str(order), "order_value": str(order.value)}
    if d.family.is_lie:
        info["steinberg_degree"] = catalog.steinberg_degree(d)
        if d.family in catalog.TABLE1_FAMILIES and not (d.family is Family.A and d.n == 1):
            info["theta1_degree"] = catalog.theta1_degree(d)
    if d.family is Family.ALT:
        info["theta_degree"] = catalog.alternating_theta(d.n)
    if d.family in (Family.SPORADIC, Family.TITS):
        row = catalog.sporadic_row(d.sporadic_name or "Tits")
        info["degree"] = row.min_ext_degree
        info["char_label"] = row.char_label
        info["out"] = row.out_exact
    try:
        info["out_bound"] = catalog.out_bound(d)
    except CatalogError:
        pass
    lines = [f"{key}: {value}" for key, value in info.items()]
    _emit(out, info, lines, args.json)
    return 0


def cmd_table_check(args, out) -> int:
    k = args.k if args.k is not None else constant_a()
    try:
        table = chartab.load_table(args.file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    spectrum = chartab.codegree_spectrum(table)
    verdict = chartab.theorem_a_check(table, k, args.s)
    lines = _header(k) + [f"table {table.name} (order {table.order}), s = {args.s}"]
    for e in spectrum:
        lines.append(f"  {e.label}: degree {e.degree}, codegree {e.codegree}")
    for v in verdict.report.violations:
        lines.append(
            f"  violation: {v.entry.label} degree {v.entry.degree}: k*cod = {render_rational(v.lhs)} > {v.rhs} = degree^{args.s}"
        )
    for e in verdict.report.equalities:
        lines.append(f"  equality: {e.label} degree {e.degree}")
    lines.append(f"hypothesis holds: {verdict.hypothesis_holds}")
    lines.append(f"solvable: {verdict.solvable}")
    lines.append(f"consistent with theorem: {verdict.consistent_with_theorem}")
    payload = {
        "table": table.name,
        "order": table.order,
        "k": render_rational(k),
        "s": args.s,
        "spectrum": [{"label": e.label, "degree": e.degree, "codegree": e.codegree} for e in spectrum],
        "holds": verdict.hypothesis_holds,
        "violations": [
            {"label": v.entry.label, "degree": v.entry.degree, "lhs": render_rational(v.lhs), "rhs": v.rhs}
            for v in verdict.report.violations
        ],
        "equalities": [e.label for e in verdict.report.equalities],
        "solvable": verdict.solvable,
        "consistent_with_theorem": verdict.consistent_with_theorem,
    }
    _emit(out, payload, lines, args.json)
    return 0 if verdict.hypothesis_holds and verdict.consistent_with_theorem else 1


def cmd_cyclotomic(args, out) -> int:
    poly = cyclotomic(args.n)
    payload: dict = {"n": args.n, "polynomial": render_poly(poly), "coefficients": list(poly.coeffs)}
    lines = [f"Phi_{args.n}(x) = {render_poly(poly)}"]
    if args.at is not None:
        value = eval_poly(poly, args.at)
        payload["at"] = args.at
        payload["value"] = value
        lines.append(f"Phi_{args.n}({args.at}) = {value}")
    _emit(out, payload, lines, args.json)
    return 0


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 2 if exc.code else 0
    handlers = {
        "verify": cmd_verify,
        "sharpness": cmd_sharpness,
        "group": cmd_group,
        "table": cmd_table_check,
        "cyclotomic": cmd_cyclotomic,
    }
    try:
        return handlers[args.command](args, out)
    except (UsageError, CatalogError, chartab.TableError, ValueError) as exc:
        err.write(f"codegree: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
