"""Command-line front end.

Exit codes: 0 for any computed answer (UNSOLVABLE, NO and UNKNOWN included),
1 for invalid input, 2 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__, chern, dvr, g2, golden, lie_oracle, triple
from .exactnum import INFINITY, factorial_form, format_rational, parse_rational
from .gradedring import apply_map, reduce_mod


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class Report:
    """Collects output so that text and JSON renderings stay in sync."""

    def __init__(self, args):
        self.as_json = args.json
        self.factorial = args.factorial_form
        self.lines: List[str] = []
        self.data = None

    def q(self, x) -> str:
        return factorial_form(x) if self.factorial else format_rational(x)

    def tensor(self, t: triple.TripleTensor) -> str:
        if t.is_zero():
            return "0"
        out = []
        for k, c in sorted(t.coeffs.items(), key=lambda kv: (t.degree_of(kv[0]), kv[0])):
            body = f"{self.q(abs(c))}*" + "(x)".join(triple.BASIS[i] for i in k)
            out.append(("-" if c < 0 else "+") + " " + body if out else ("-" if c < 0 else "") + body)
        return " ".join(out)

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def emit(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, indent=2, sort_keys=True))
        else:
            print("\n".join(self.lines))


def _valuation(v):
    return "inf" if v == INFINITY else v


def cmd_girard(args, r: Report) -> int:
    s = chern.girard_power_sum(args.i)
    r.say(f"s{args.i} = {s}")
    r.data = {"i": args.i, "power_sum": s.to_json()}
    return 0


def cmd_newton_check(args, r: Report) -> int:
    rows = []
    for n in range(1, args.max_degree // 2 + 1):
        res = chern.newton_residual(n)
        rows.append({"n": n, "residual_zero": res.is_zero()})
        r.say(f"n={n:>2}  residual {'0' if res.is_zero() else res}")
    r.data = {"max_degree": args.max_degree, "entries": rows}
    return 0


def cmd_e_pullback(args, r: Report) -> int:
    x = chern.e_pullback_c(args.n)
    if args.reduced:
        x = reduce_mod(x, chern.ec_congruence_filter())
    mode = "reduced" if args.reduced else "raw"
    r.say(f"E*c{args.n} {'==' if args.reduced else '='} {x}")
    r.data = {"n": args.n, "mode": mode, "value": x.to_json()}
    return 0


def cmd_lemma_ec(args, r: Report) -> int:
    entries = []
    for n, x in chern.lemma_ec_table():
        r.say(f"E*c{n:<2} == {x}")
        entries.append({"n": n, "value": x.to_json()})
    r.data = {"entries": entries}
    return 0


def cmd_jz(args, r: Report) -> int:
    x = g2.jz(args.n)
    red = reduce_mod(x, g2.y_quartic_filter())
    z = f"z{g2.Z_INDICES[args.n]}"
    r.say(f"j*{z} = {x}")
    r.say(f"j*{z} == {red}  mod (y4,y12)^4")
    r.data = {"n": args.n, "z": z, "exact": x.to_json(), "reduced": red.to_json()}
    return 0


def cmd_transgression(args, r: Report) -> int:
    d = args.degree
    tau = g2.transgression_basis(d)
    cls = g2.transgression_class(d)
    total, new = g2.kernel_dimensions(d)
    in_kernel = apply_map(g2.j_star(), tau).is_zero()
    r.say(f"tau{d} = {tau}")
    r.say(f"class  {cls}")
    r.say(f"j*(tau{d}) = 0: {in_kernel}")
    r.say(f"kernel dimension {total}, new {new}")
    r.data = {
        "degree": d,
        "representative": tau.to_json(),
        "class": cls.to_json(),
        "in_kernel": in_kernel,
        "kernel_dimension": total,
        "new_dimension": new,
    }
    return 0


def cmd_mu(args, r: Report) -> int:
    idx = args.index
    d = idx + 1
    pulled = triple.mu_tilde_pullback(g2.transgression_basis(d)).tri_positive()
    coeff = triple.mu_star(idx)
    r.say(f"mu~*(tau{d}) = {r.tensor(pulled)}")
    r.say(f"mu*(a{idx}) = {r.q(coeff)} b{idx}")
    r.data = {"index": idx, "pullback": pulled.to_json(), "coeff": format_rational(coeff)}
    return 0


def cmd_ch_table(args, r: Report) -> int:
    entries = []
    for w, m, t in triple.ch_table():
        label = "(x)".join(w)
        r.say(f"{m - 1}! ch{m}({label}) = {r.tensor(t)}")
        entries.append({"generator": w, "m": m, **t.to_json()})
    r.data = {"entries": entries}
    return 0


def _matrix_lines(r: Report, a, t, columns: Sequence[str]) -> None:
    cells = [[r.q(x) for x in row] + [r.q(ti)] for row, ti in zip(a, t)]
    widths = [max(len(c[j]) for c in cells + [list(columns) + ["target"]]) for j in range(len(columns) + 1)]
    r.say("  ".join(h.rjust(w) for h, w in zip(list(columns) + ["target"], widths)))
    for c in cells:
        r.say("  ".join(x.rjust(w) for x, w in zip(c, widths)))


def _matrix_json(a, t, columns) -> dict:
    return {
        "columns": list(columns),
        "matrix": [[format_rational(x) for x in row] for row in a],
        "target": [format_rational(x) for x in t],
    }


def cmd_phi_matrix(args, r: Report) -> int:
    if args.unsymmetrized:
        a, t = triple.full_phi_matrix()
        cols = triple.KGEN_ORDER
    else:
        a, t = triple.phi_matrix()
        cols = triple.SYMMETRIC_COLUMNS
    _matrix_lines(r, a, t, cols)
    r.data = _matrix_json(a, t, cols)
    return 0


def _certificate_lines(r: Report, cert: dvr.DVRCertificate) -> None:
    r.say(f"verdict: {cert.verdict.value} over Z_({cert.prime})")
    r.say("invariant factor valuations: " + ", ".join(str(v) for v in cert.invariant_valuations))
    if cert.witness is not None:
        r.say("witness x = (" + ", ".join(r.q(x) for x in cert.witness) + ")")
    if cert.dual is not None:
        r.say("dual witness u = (" + ", ".join(r.q(x) for x in cert.dual) + ")")
        r.say(f"nu_{cert.prime}(u.t) = {cert.dual_valuation}")


def cmd_theorem_d(args, r: Report) -> int:
    system = dvr.theorem_d_system(args.negate)
    cert = dvr.theorem_d_verdict(args.negate)
    forced = dvr.forced_valuation(system, 3)
    survey = dvr.target_sign_survey()
    _matrix_lines(r, system.matrix, system.target, ("a", "b", "c", "d"))
    r.say()
    _certificate_lines(r, cert)
    r.say("certificate re-verified: True")
    r.say()
    r.say("solutions with a, b, c in Z_(5):")
    if forced.sup_valuation is None:
        r.say("  none")
    else:
        r.say("  (a,b,c,d) = (" + ", ".join(r.q(x) for x in forced.particular) + ")")
        r.say("            + t*(" + ", ".join(r.q(x) for x in forced.direction) + ")")
        r.say(f"  sup nu_5(d) = {_valuation(forced.sup_valuation)}")
    r.say()
    r.say("target sign survey:")
    for row in survey:
        forced_d = "none" if row["forced_d_valuation"] is None else row["forced_d_valuation"]
        r.say(f"  ({', '.join(row['target'])}): {row['verdict']}, sup nu_5(d) = {forced_d}")
    r.data = {
        "system": _matrix_json(system.matrix, system.target, ("a", "b", "c", "d")),
        "certificate": cert.to_json(),
        "certificate_verified": True,
        "forced_d": forced.to_json(),
        "sign_survey": survey,
    }
    return 0


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _rationals(values) -> list:
    def conv(x):
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise UsageError(f"not a rational: {x!r}")
        return parse_rational(x) if isinstance(x, str) else x

    return [conv(x) for x in values]


def cmd_solve(args, r: Report) -> int:
    m = _read_json(args.matrix)
    t = _read_json(args.target)
    if isinstance(m, dict):
        m = m.get("matrix")
    if isinstance(t, dict):
        t = t.get("target")
    if not isinstance(m, list) or not all(isinstance(row, list) for row in m) or not isinstance(t, list):
        raise UsageError("matrix must be a list of rows and target a list")
    system = dvr.DVRSystem.build([_rationals(row) for row in m], _rationals(t), args.prime)
    cert = dvr.solve_checked(system)
    _certificate_lines(r, cert)
    r.data = cert.to_json()
    return 0


def cmd_oracle(args, r: Report) -> int:
    verdicts: Dict[str, lie_oracle.Verdict] = {}
    if args.gauge_n is not None:
        verdicts["gauge"] = lie_oracle.gauge_verdict(args.group, args.prime, args.gauge_n, args.k)
    elif args.cat_b is not None:
        verdicts["gauge_cat_b"] = lie_oracle.gauge_catB(args.group, args.prime, args.cat_b, args.k)
    elif args.sphere_i is not None:
        verdicts["gauge_sphere"] = lie_oracle.gauge_sphere(args.group, args.prime, args.sphere_i, args.k)
    elif args.sugawara:
        verdicts["sugawara"] = lie_oracle.sugawara_local(args.group, args.prime, args.k)
    else:
        verdicts["williams"] = lie_oracle.williams_verdict(
            args.group, args.prime, args.k, assume_monotone=args.assume_williams_monotone
        )
    ((kind, v),) = verdicts.items()
    r.say(f"{kind}: {v.answer.value}" + (f" ({v.cited})" if v.cited else ""))
    r.data = v.to_json()
    return 0


def _common(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else False
    p.add_argument("--json", action="store_true", default=default, help="emit JSON")
    p.add_argument("--factorial-form", action="store_true", default=default, help="render large scalars as N!/5!^j")


def build_parser() -> argparse.ArgumentParser:
    parser = Parser(prog="g2commute", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--self-test", action="store_true", help="check the engine against the shipped golden data")
    _common(parser, suppress=False)
    common = Parser(add_help=False)
    _common(common, suppress=True)
    sub = parser.add_subparsers(dest="command", parser_class=Parser)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("girard", cmd_girard, "power sum s_i in Chern classes")
    p.add_argument("--i", type=int, required=True)
    p = add("newton-check", cmd_newton_check, "Newton identity residuals")
    p.add_argument("--max-degree", type=int, default=36)
    p = add("e-pullback", cmd_e_pullback, "E* c_n")
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--raw", action="store_true")
    mode.add_argument("--reduced", action="store_true")
    add("lemma-ec", cmd_lemma_ec, "E* c_n modulo the congruence ideal, n = 2..18")
    p = add("jz", cmd_jz, "j* z_{8n-4}")
    p.add_argument("--n", type=int, required=True)
    p = add("transgression", cmd_transgression, "kernel element of j* in degree 20, 28 or 36")
    p.add_argument("--degree", type=int, required=True)
    p = add("mu", cmd_mu, "mu* on a19, a27, a35")
    p.add_argument("--index", type=int, required=True, choices=triple.ROW_INDICES)
    add("ch-table", cmd_ch_table, "scaled Chern character components")
    p = add("phi-matrix", cmd_phi_matrix, "the Chern character linear system")
    p.add_argument("--unsymmetrized", action="store_true")
    p = add("theorem-d", cmd_theorem_d, "Z_(5) solvability certificate for the Chern character system")
    p.add_argument("--negate", action="store_true", help="negate the target")
    p = add("solve", cmd_solve, "solvability of A x = t over Z_(p)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--prime", type=int, required=True)
    p = add("oracle", cmd_oracle, "higher homotopy commutativity criteria")
    p.add_argument("--group", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--gauge-n", type=int)
    which.add_argument("--cat-b", type=int)
    which.add_argument("--sphere-i", type=int)
    which.add_argument("--sugawara", action="store_true")
    p.add_argument("--assume-williams-monotone", action="store_true")
    return parser


def run_self_test(as_json: bool) -> int:
    checks = golden.self_test()
    failed = [c for c in checks if not c.ok]
    if as_json:
        print(json.dumps([{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks], indent=2))
    else:
        for c in checks:
            print(c.line())
        print(f"{len(checks) - len(failed)}/{len(checks)} golden checks passed")
    return 2 if failed else 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.self_test:
        return run_self_test(args.json)
    if args.command is None:
        parser.error("a subcommand is required")
    report = Report(args)
    try:
        code = args.func(args, report)
    except (dvr.CertificateError, g2.KernelError, triple.SymmetryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
