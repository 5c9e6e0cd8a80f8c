"""Command-line front end.

    gradmod validate  SPEC
    gradmod invariant SPEC --lambda 1,0,2
    gradmod sweep     SPEC --bound 3
    gradmod classify  SPEC --lambda 1,0 --shift 0,1
    gradmod check     SPEC [--max-dim 1024]

Exit codes: 0 success, 1 unreadable or malformed input, 2 an invalid spec
or an oracle disagreement.
"""
import argparse
import sys

from .abelian import format_qz
from .classify import count_graded_simples, graded_simple_label, orbit_representatives
from .gradings import (AInner, AOuter, BSpec, CSpec, DInner, DOuter, check_weight, normalize_B,
                       validate)
from .invariants import (brauer_invariant, fundamental, gamma_hat_0_D_outer, gamma_hat_B,
                         gamma_hat_plus_D, reference_characters)
from .io import SpecParseError, dumps, loads_document
from .oracle.realize import (DEFAULT_MAX_DIM, OracleSkipped, b_oracle, d_inner_oracle,
                             d_outer_oracle, form_congruence_check, natural_factor, wedge_factor)

SWEEP_CAP = 12


class UsageError(Exception):
    pass


def _ints(text, what):
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers") from None


def _factor_json(f):
    return [[format_qz(x) for x in row] for row in f.matrix]


def _elements(S):
    return [list(x) for x in S.sorted_elements()]


# -- reports ------------------------------------------------------------------

def invariant_report(spec, lam):
    rep = brauer_invariant(spec, lam)
    cls = rep.brauer
    return {
        "lambda": list(rep.lam),
        "orbit": [list(w) for w in rep.orbit],
        "H_lambda": _elements(rep.H_lambda),
        "quotient": list(rep.quotient_group.orders),
        "support": [list(b) for b in cls.support.basis],
        "beta": [[format_qz(x) for x in row] for row in cls.beta.matrix],
        "schur_index": rep.schur_index,
        "admits_grading": rep.admits_grading,
    }


def sweep_report(spec, bound):
    rows = []
    for lam in orbit_representatives(spec, bound):
        rep = brauer_invariant(spec, lam)
        rows.append({
            "orbit": [list(w) for w in rep.orbit],
            "H_lambda": _elements(rep.H_lambda),
            "schur_index": rep.schur_index,
            "admits_grading": rep.admits_grading,
        })
    count, _ = count_graded_simples(spec, bound)
    return {"bound": bound, "rows": rows, "graded_simple_count": count}


def label_report(spec, lam, shift):
    lab = graded_simple_label(spec, lam, shift)
    return {
        "representative": list(lab.representative),
        "orbit": [list(w) for w in lab.orbit],
        "shift": list(lab.shift),
        "G_lambda": [list(x) for x in lab.G_lambda],
        "label": str(lab),
    }


def _compare(name, got, want, detail=None):
    entry = {"name": name, "status": "pass" if got == want else "fail"}
    if got != want:
        entry["expected"] = _factor_json(want)
        entry["observed"] = _factor_json(got)
    if detail:
        entry["detail"] = detail
    return entry


def _orientation_entry(spec, res):
    """Which half-spin factor the formula and the oracle assign to omega_{r-1}, omega_r."""
    plus, minus = gamma_hat_plus_D(spec)

    def name(f, pair):
        p, m = pair
        return "gamma_plus" if f == p else ("gamma_minus" if f == m else "other")

    formula = (minus, plus) if spec.orientation == "+" else (plus, minus)
    oracle = (res.minus, res.plus)
    entry = {"name": "half-spin assignment", "status": "info",
             "formula": [name(formula[0], (plus, minus)), name(formula[1], (plus, minus))],
             "oracle": [name(oracle[0], (plus, minus)), name(oracle[1], (plus, minus))]}
    if not res.oriented:
        entry["detail"] = "orientation not fixed by the oracle (reference commutator is scalar)"
    elif formula != oracle:
        entry["detail"] = f"orientation flag '{spec.orientation}' swaps the half-spin factors"
    return entry


def check_report(spec, max_dim=DEFAULT_MAX_DIM):
    checks = []

    def skipped(name, exc):
        checks.append({"name": name, "status": "skip", "detail": str(exc)})

    if isinstance(spec, (AInner, CSpec)):
        checks.append(_compare("natural module commutation factor", natural_factor(spec), spec.cls.factor))
        for i in range(1, spec.rank + 1):
            want = brauer_invariant(spec, fundamental(spec, i)).brauer.factor
            checks.append(_compare(f"exterior power {i}", wedge_factor(spec, i), want))
    if isinstance(spec, (AOuter, BSpec, DInner, DOuter)):
        ok = form_congruence_check(spec)
        checks.append({"name": "form congruence", "status": "pass" if ok else "fail"})
    if isinstance(spec, BSpec):
        want = brauer_invariant(spec, fundamental(spec, spec.rank)).brauer.factor
        try:
            got = b_oracle(spec, max_dim)
        except OracleSkipped as exc:
            skipped("spin commutation factor", exc)
        else:
            checks.append(_compare("spin commutation factor", got, want))
            checks.append(_compare("closed form gamma", got, gamma_hat_B(normalize_B(spec))))
    if isinstance(spec, DInner):
        try:
            res = d_inner_oracle(spec, max_dim, reference_characters(spec))
        except OracleSkipped as exc:
            skipped("half-spin pair", exc)
        else:
            plus, minus = gamma_hat_plus_D(spec)
            ok = res.unordered() == frozenset([plus, minus])
            entry = {"name": "half-spin pair", "status": "pass" if ok else "fail"}
            if not ok:
                entry["expected"] = [_factor_json(plus), _factor_json(minus)]
                entry["observed"] = [_factor_json(res.plus), _factor_json(res.minus)]
            checks.append(entry)
            checks.append(_orientation_entry(spec, res))
    if isinstance(spec, DOuter):
        r = spec.rank
        try:
            res = d_outer_oracle(spec, max_dim)
        except OracleSkipped as exc:
            skipped("cross factor on S+ (x) S-", exc)
        else:
            lam = tuple([0] * (r - 2) + [1, 1])
            want = brauer_invariant(spec, lam).brauer.factor
            checks.append(_compare("cross factor on S+ (x) S-", res.cross, want))
            checks.append(_compare("gamma_0 on the inertia characters", res.gamma0,
                                   gamma_hat_0_D_outer(spec)))
    ok = all(c["status"] != "fail" for c in checks)
    return {"checks": checks, "ok": ok}


# -- text rendering -----------------------------------------------------------

def _fmt_elems(xs):
    return "{" + ", ".join("(" + ",".join(str(c) for c in x) + ")" for x in xs) + "}"


def render_text(command, report):
    lines = []
    if report.get("valid") is False:
        command = "validate"
    if command == "validate":
        if report["valid"]:
            lines.append("valid")
        else:
            lines.append("invalid")
            lines += [f"  - {v}" for v in report["violations"]]
    elif command == "invariant":
        lines.append(f"lambda = {tuple(report['lambda'])}")
        lines.append(f"orbit = {[tuple(w) for w in report['orbit']]}")
        lines.append(f"H_lambda = {_fmt_elems(report['H_lambda'])}")
        lines.append(f"quotient = Z{report['quotient']}")
        lines.append(f"support basis = {_fmt_elems(report['support'])}")
        lines.append(f"beta = {report['beta']}")
        lines.append(f"schur_index = {report['schur_index']}")
        lines.append(f"admits_grading = {str(report['admits_grading']).lower()}")
    elif command == "sweep":
        lines.append(f"{'orbit':<32} {'H_lambda':<24} {'index':>5}  admits")
        for row in report["rows"]:
            orb = " ".join("(" + ",".join(map(str, w)) + ")" for w in row["orbit"])
            lines.append(f"{orb:<32} {_fmt_elems(row['H_lambda']):<24} {row['schur_index']:>5}  "
                         f"{str(row['admits_grading']).lower()}")
        lines.append(f"graded-simple modules with weight sum <= {report['bound']}: "
                     f"{report['graded_simple_count']}")
    elif command == "classify":
        lines.append(report["label"])
        lines.append(f"orbit = {[tuple(w) for w in report['orbit']]}")
        lines.append(f"G_lambda = {_fmt_elems(report['G_lambda'])}")
    elif command == "check":
        for c in report["checks"]:
            line = f"{c['status'].upper():<5} {c['name']}"
            if "formula" in c:
                line += f": formula {c['formula']} oracle {c['oracle']}"
            if "detail" in c:
                line += f" ({c['detail']})"
            lines.append(line)
            if "expected" in c:
                lines.append(f"      expected {c['expected']}")
                lines.append(f"      observed {c['observed']}")
        lines.append("all checks agree" if report["ok"] else "DISAGREEMENT")
    return "\n".join(lines) + "\n"


# -- driver -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="gradmod", description="Brauer invariants of simple modules "
                                "over graded classical Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("spec", help="path to a JSON grading spec")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        return sp

    add("validate", "check the spec's defining relations")
    sp = add("invariant", "Brauer invariant of one simple module")
    sp.add_argument("--lambda", dest="lam", help="highest weight m1,...,mr")
    sp = add("sweep", "table of invariants for all weights up to a bound")
    sp.add_argument("--bound", type=int)
    sp = add("classify", "canonical label of a graded-simple module")
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--shift", help="group element g1,...,gk")
    sp = add("check", "run the brute-force oracles against the formulas")
    sp.add_argument("--max-dim", type=int, default=None,
                    help=f"largest Clifford algebra dimension to build (default {DEFAULT_MAX_DIM})")
    return p


def _run(args, spec, doc):
    problems = validate(spec)
    if args.command == "validate":
        return {"command": "validate", "valid": not problems, "violations": problems}, (2 if problems else 0)
    if problems:
        return {"command": args.command, "valid": False, "violations": problems}, 2
    if args.command == "invariant":
        raw = args.lam if args.lam is not None else doc.get("lambda")
        if raw is None:
            raise UsageError("--lambda is required")
        lam = _ints(raw, "--lambda") if isinstance(raw, str) else tuple(raw)
        try:
            lam = check_weight(spec, lam)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return {"command": "invariant", **invariant_report(spec, lam)}, 0
    if args.command == "sweep":
        bound = args.bound if args.bound is not None else doc.get("bound")
        if bound is None:
            raise UsageError("--bound is required")
        if not 0 <= bound <= SWEEP_CAP:
            raise UsageError(f"bound must lie in [0, {SWEEP_CAP}]")
        return {"command": "sweep", **sweep_report(spec, bound)}, 0
    if args.command == "classify":
        raw = args.lam if args.lam is not None else doc.get("lambda")
        if raw is None:
            raise UsageError("--lambda is required")
        lam = _ints(raw, "--lambda") if isinstance(raw, str) else tuple(raw)
        shift_raw = args.shift if args.shift is not None else doc.get("shift")
        shift = (_ints(shift_raw, "--shift") if isinstance(shift_raw, str) else tuple(shift_raw)) \
            if shift_raw is not None else spec.group.zero
        try:
            lam = check_weight(spec, lam)
            shift = spec.group.elem(shift)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return {"command": "classify", **label_report(spec, lam, shift)}, 0
    if args.command == "check":
        cap = args.max_dim if args.max_dim is not None else doc.get("max_dim", DEFAULT_MAX_DIM)
        report = check_report(spec, cap)
        return {"command": "check", **report}, (0 if report["ok"] else 2)
    raise UsageError(f"unknown command {args.command}")


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        with open(args.spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        stderr.write(f"error: cannot read {args.spec}: {exc.strerror}\n")
        return 1
    try:
        spec, doc = loads_document(text)
        report, code = _run(args, spec, doc)
    except SpecParseError as exc:
        stderr.write(f"error: {args.spec}: {exc}\n")
        return 1
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    out = dumps(report) if args.format == "json" else render_text(args.command, report)
    stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
