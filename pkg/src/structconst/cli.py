"""Command-line front end.

    python -m structconst mul --basis schur --mu 2,1 --nu 2,1
    python -m structconst straighten --basis hl --alpha=-1,6 --format json
    python -m structconst mul --basis uc --mu 2,1 --eta 3,1 --tau 1 --nu 1
    python -m structconst corpus

Exit codes: 0 ok, 1 mismatch or failed corpus case, 2 usage error,
3 internal assertion (fuel, budget or divisibility failure).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .checks import oracle_check
from .exact_algebra import Inconsistent, NonzeroRemainder, NotPolynomial, TPoly, ZERO
from .hall_littlewood import FuelExhausted, mul_hl, p_structure_constant, pieri_hl, straighten_hl
from .operator_engine import BudgetExceeded
from .partitions import canonical
from .schur import mul_schur, pieri_schur, straighten_schur
from .universal_characters import mul_uc

BASES = ("schur", "hl", "uc")
COMMANDS = ("straighten", "mul", "pieri", "coeff", "oracle-check", "corpus", "selftest")
INTERNAL_ERRORS = (FuelExhausted, BudgetExceeded, NonzeroRemainder, NotPolynomial, Inconsistent,
                   AssertionError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        raise UsageError(message or f"exit {status}")


def parse_vector(text: str) -> tuple:
    if text == "":
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def parse_partition(text: str) -> tuple:
    vec = parse_vector(text)
    try:
        return canonical(vec)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a weakly decreasing partition")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="structconst", description="Structure constants via raising operators.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, basis=True):
        if basis:
            p.add_argument("--basis", choices=BASES, default="schur")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--t-eval", type=int, default=None, dest="t_eval")

    p = sub.add_parser("straighten")
    common(p)
    p.add_argument("--alpha", type=parse_vector, required=True)

    for name in ("mul", "coeff"):
        p = sub.add_parser(name)
        common(p)
        p.add_argument("--mu", type=parse_partition, default=())
        p.add_argument("--nu", type=parse_partition, default=None)
        p.add_argument("--eta", type=parse_partition, default=())
        p.add_argument("--tau", type=parse_partition, default=())
        p.add_argument("--nu2", type=parse_partition, default=None)
        if name == "coeff":
            p.add_argument("--la", type=parse_partition, required=True)
            p.add_argument("--mu2", type=parse_partition, default=())
            p.add_argument("--p-basis", action="store_true", dest="p_basis")

    p = sub.add_parser("pieri")
    common(p)
    p.add_argument("--mu", type=parse_partition, default=())
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("oracle-check")
    common(p)
    p.add_argument("--bound", type=int, default=4)

    p = sub.add_parser("corpus")
    p.add_argument("--corpus", default=None, metavar="PATH")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("selftest")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


# --- serialization -------------------------------------------------------

def _coeff_list(coeff, t_eval):
    if isinstance(coeff, TPoly):
        if t_eval is not None:
            value = coeff(t_eval)
            return [value] if value else []
        return coeff.to_list()
    return [coeff] if coeff else []


def serialize_sum(basis: str, terms: dict, t_eval=None) -> dict:
    rows = []
    for key in sorted(terms, reverse=True):
        coeff = _coeff_list(terms[key], t_eval)
        if not coeff:
            continue
        if basis == "uc":
            jkey = {"la": list(key[0]), "mu": list(key[1])}
        else:
            jkey = list(key)
        rows.append({"key": jkey, "coeff": coeff})
    return {"basis": basis, "terms": rows}


def _fmt_coeff(coeff: list) -> str:
    return str(TPoly(coeff))


def _fmt_key(basis: str, key) -> str:
    if basis == "uc":
        la, mu = key["la"], key["mu"]
        return "S[(" + ",".join(map(str, la)) + "),(" + ",".join(map(str, mu)) + ")]"
    letter = "Q" if basis == "hl" else "S"
    return f"{letter}(" + ",".join(map(str, key)) + ")"


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True)
    lines = []
    basis = payload["basis"]
    for row in payload["terms"]:
        lines.append(f"{_fmt_key(basis, row['key'])}  {_fmt_coeff(row['coeff'])}")
    return "\n".join(lines) if lines else "0"


# --- commands ------------------------------------------------------------

def _uc_operands(args):
    nu = args.nu2 if args.nu2 is not None else (args.nu or ())
    return (args.mu, args.eta), (args.tau, nu)


def _product(args) -> dict:
    if args.basis == "uc":
        a, b = _uc_operands(args)
        return mul_uc(a, b)
    if args.nu is None:
        raise UsageError("argument --nu: required for this basis")
    if args.basis == "schur":
        return mul_schur(args.mu, args.nu)
    return mul_hl(args.mu, args.nu)


def _cmd_straighten(args):
    if args.basis == "schur":
        res = straighten_schur(args.alpha)
        terms = {} if res is None else {res[1]: res[0]}
    elif args.basis == "hl":
        terms = straighten_hl(args.alpha)
    else:
        raise UsageError("argument --basis: straighten supports schur and hl")
    return 0, render(serialize_sum(args.basis, terms, args.t_eval), args.format)


def _cmd_mul(args):
    return 0, render(serialize_sum(args.basis, _product(args), args.t_eval), args.format)


def _cmd_pieri(args):
    if args.r < 1:
        raise UsageError("argument --r: must be a positive integer")
    if args.basis == "schur":
        terms = pieri_schur(args.mu, args.r)
    elif args.basis == "hl":
        terms = pieri_hl(args.mu, args.r)
    else:
        raise UsageError("argument --basis: pieri supports schur and hl")
    return 0, render(serialize_sum(args.basis, terms, args.t_eval), args.format)


def _cmd_coeff(args):
    if args.basis == "uc":
        key = (args.la, args.mu2)
        value = _product(args).get(key, 0)
    elif args.p_basis:
        if args.basis != "hl":
            raise UsageError("argument --p-basis: only valid with --basis hl")
        if args.nu is None:
            raise UsageError("argument --nu: required for this basis")
        key = args.la
        value = p_structure_constant(args.mu, args.nu, args.la)
    else:
        key = args.la
        value = _product(args).get(key, ZERO if args.basis == "hl" else 0)
    payload = serialize_sum(args.basis, {key: value}, args.t_eval)
    if not payload["terms"]:
        jkey = {"la": list(key[0]), "mu": list(key[1])} if args.basis == "uc" else list(key)
        payload["terms"] = [{"key": jkey, "coeff": []}]
    return 0, render(payload, args.format)


def _cmd_oracle_check(args):
    try:
        report = oracle_check(args.basis, args.bound)
    except ValueError as exc:
        raise UsageError(f"argument --bound: {exc}")
    payload = {
        "basis": args.basis,
        "bound": args.bound,
        "cases": report.cases,
        "mismatches": [m.describe() for m in report.mismatches],
        "ok": report.ok,
    }
    if args.format == "json":
        text = json.dumps(payload, sort_keys=True)
    else:
        status = "pass" if report.ok else "FAIL"
        text = f"oracle-check {args.basis} bound={args.bound}: {status} ({report.cases} cases)"
        if report.mismatches:
            text += "\nminimal failing instance: " + report.mismatches[0].describe()
    return (0 if report.ok else 1), text


def default_corpus_path():
    return resources.files("structconst") / "data" / "worked_examples.jsonl"


def run_corpus(path=None) -> tuple[int, str]:
    """Run every case of a line-delimited JSON corpus; return (exit_code, report)."""
    path = default_corpus_path() if path is None else path
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [line for line in fh.read().splitlines() if line.strip()]
    except OSError as exc:
        return 2, f"cannot read corpus: {exc}"
    cases = []
    for lineno, line in enumerate(lines, start=1):
        try:
            case = json.loads(line)
            cases.append((case.get("name", f"case{lineno}"), list(case["argv"]), case["expected"]))
        except (ValueError, KeyError, TypeError) as exc:
            return 2, f"malformed corpus line {lineno}: {exc}"

    failures = []
    for index, (name, argv, expected) in enumerate(cases):
        code, out = run_command(argv + ["--format", "json"])
        if code != 0:
            failures.append(f"[{index}] {name}: exit {code}: {out}")
            continue
        diff = _first_diff(json.loads(out), expected)
        if diff:
            failures.append(f"[{index}] {name}: {diff}")
    passed = len(cases) - len(failures)
    report = [f"{passed}/{len(cases)} cases passed"] + failures
    return (0 if not failures else 1), "\n".join(report)


def _first_diff(got: dict, expected: dict) -> str | None:
    if got.get("basis") != expected.get("basis"):
        return f"basis {got.get('basis')!r} != {expected.get('basis')!r}"

    def table(payload):
        return {json.dumps(row["key"], sort_keys=True): row["coeff"] for row in payload.get("terms", [])}

    g, e = table(got), table(expected)
    for key in sorted(set(g) | set(e)):
        if g.get(key) != e.get(key):
            return f"key {key}: got {g.get(key)}, expected {e.get(key)}"
    return None


def _cmd_corpus(args):
    return run_corpus(args.corpus)


def _cmd_selftest(args):
    code, text = run_corpus(None)
    lines = [f"corpus: {text.splitlines()[0]}"]
    worst = code
    for basis in BASES:
        report = oracle_check(basis, 4)
        lines.append(f"oracle-check {basis} bound=4: {'pass' if report.ok else 'FAIL'}")
        if not report.ok:
            worst = max(worst, 1)
    return worst, "\n".join(lines)


HANDLERS = {
    "straighten": _cmd_straighten,
    "mul": _cmd_mul,
    "pieri": _cmd_pieri,
    "coeff": _cmd_coeff,
    "oracle-check": _cmd_oracle_check,
    "corpus": _cmd_corpus,
    "selftest": _cmd_selftest,
}


def run_command(argv) -> tuple[int, str]:
    """Parse ``argv`` and execute it; return (exit_code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            raise UsageError("a command is required: " + ", ".join(COMMANDS))
        return HANDLERS[args.command](args)
    except UsageError as exc:
        return 2, f"usage error: {exc}"
    except INTERNAL_ERRORS as exc:
        return 3, f"internal assertion failed: {type(exc).__name__}: {exc}"


def main(argv=None) -> int:
    code, out = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code in (0, 1) else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
