"""Command-line front end: config parsing, subcommand dispatch,
deterministic reports and canonical certificate emission.

Subcommands: digits, convergents, witness, measure, validate.
Configuration comes from an optional JSON file (--config) overridden by
flags; flags always win.  All output is UTF-8 with LF line endings.

Certificate schema (canonical JSON, fixed key order):
  schema_version, tool,
  config{g1, g2, a1, beta, budget_bits, op, d, d_eff, n_from, n_to},
  n0, n0_error,
  threshold_checks[{n, passed}],
  records[{n, error, notice, convergent{p, q}, gap_bound, gap{lo, hi},
           bound_dominates, roth{d_eff, passed, tie, margin, depth},
           exponent{lo, hi}, forms{q_denominator_form, p_denominator_form}}],
  verdict
Integers are decimal strings; rationals are {num, den} string pairs.

Exit codes: 0 success, 2 configuration error, 3 budget or precision
error, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import __version__
from .certjson import dumps, interval, intstr, rat
from .errors import (
    ExponentBudgetExceeded,
    InsufficientDepth,
    InternalError,
    InvalidConfigError,
    NonIntegralExponent,
    NotFound,
    PrecisionUnattainable,
    TieEncountered,
)
from .measure import AlgebraicTarget, approximation_measure, find_n1
from .schedule import GrowthWindow, PowerSchedule, validate_growth
from .series import LacunarySeries
from .witness import (
    CompositeNumber,
    IndexRecord,
    Op,
    WitnessCertificate,
    certify,
    composite_convergent,
    composite_digits,
)

SCHEMA_VERSION = "1"


@dataclass
class RunConfig:
    g1: int = 3
    g2: int = 2
    a1: int = 2
    beta: Fraction = Fraction(1)
    op: Op = Op.SUM
    d: Fraction = Fraction(3)
    n_from: int = 1
    n_to: int = 4
    budget_bits: int = 20
    digits: int = 10
    alpha: Fraction = Fraction(3, 2)
    k: Fraction = Fraction(2)
    height: int = 1
    out: Optional[str] = None


def _parse_int(field: str, value) -> int:
    if isinstance(value, bool):
        raise InvalidConfigError(field, f"expected an integer, got {value!r}")
    try:
        return int(str(value), 10)
    except ValueError as exc:
        raise InvalidConfigError(field, f"expected an integer, got {value!r}") from exc


def _parse_rational(field: str, value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidConfigError(field, f"expected an exact rational like \"5/2\", got {value!r}")
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidConfigError(field, f"not a rational: {value!r}") from exc


def _parse_op(field: str, value) -> Op:
    try:
        return Op(str(value))
    except ValueError as exc:
        names = ", ".join(o.value for o in Op)
        raise InvalidConfigError(field, f"must be one of {names}, got {value!r}") from exc


def _parse_str(field: str, value) -> str:
    return str(value)


_FIELD_PARSERS = {
    "g1": _parse_int,
    "g2": _parse_int,
    "a1": _parse_int,
    "beta": _parse_rational,
    "op": _parse_op,
    "d": _parse_rational,
    "n_from": _parse_int,
    "n_to": _parse_int,
    "budget_bits": _parse_int,
    "digits": _parse_int,
    "alpha": _parse_rational,
    "k": _parse_rational,
    "height": _parse_int,
    "out": _parse_str,
}


def _apply(cfg: RunConfig, key: str, value) -> None:
    if key not in _FIELD_PARSERS:
        raise InvalidConfigError(key, "unknown configuration field")
    setattr(cfg, key, _FIELD_PARSERS[key](key, value))


def _validate(cfg: RunConfig) -> None:
    if cfg.g2 < 2:
        raise InvalidConfigError("g2", f"must be an integer >= 2, got {cfg.g2}")
    if cfg.g1 <= cfg.g2:
        raise InvalidConfigError("g1", f"must exceed g2, got g1={cfg.g1} g2={cfg.g2}")
    if cfg.n_from < 1:
        raise InvalidConfigError("n_from", f"must be >= 1, got {cfg.n_from}")
    if cfg.n_to < 0:
        raise InvalidConfigError("n_to", f"must be >= 0, got {cfg.n_to}")
    if cfg.digits < 1:
        raise InvalidConfigError("digits", f"must be >= 1, got {cfg.digits}")
    if cfg.height < 1:
        raise InvalidConfigError("height", f"must be >= 1, got {cfg.height}")


def load_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    path = getattr(args, "config", None)
    if path:
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidConfigError("config", f"cannot read {path}: {exc}") from exc
        if not isinstance(raw, dict):
            raise InvalidConfigError("config", "top level must be a JSON object")
        for key, value in raw.items():
            _apply(cfg, key, value)
    for key in _FIELD_PARSERS:
        value = getattr(args, key, None)
        if value is not None:
            _apply(cfg, key, value)
    _validate(cfg)
    return cfg


def _build_composite(cfg: RunConfig) -> CompositeNumber:
    sched = PowerSchedule(cfg.a1, cfg.beta, cfg.budget_bits)
    return CompositeNumber(cfg.op, LacunarySeries(cfg.g1, sched),
                           LacunarySeries(cfg.g2, sched))


def cmd_digits(cfg: RunConfig) -> str:
    comp = _build_composite(cfg)
    lines = [
        f"theta1(g={cfg.g1}) = {comp.s1.decimal_digits(cfg.digits)}",
        f"theta2(g={cfg.g2}) = {comp.s2.decimal_digits(cfg.digits)}",
        f"{cfg.op.value} = {composite_digits(comp, cfg.digits)}",
    ]
    return "\n".join(lines) + "\n"


def cmd_convergents(cfg: RunConfig) -> str:
    comp = _build_composite(cfg)
    lines = []
    for n in range(cfg.n_from, cfg.n_to + 1):
        c1 = comp.s1.partial_sum(n)
        c2 = comp.s2.partial_sum(n)
        cc = composite_convergent(comp, n)
        lines.append(f"n={n} theta1={c1.p}/{c1.q} theta2={c2.p}/{c2.q} "
                     f"{cfg.op.value}={cc.p}/{cc.q}")
    return "\n".join(lines) + "\n" if lines else ""


def cmd_witness(cfg: RunConfig) -> str:
    comp = _build_composite(cfg)
    cert = certify(comp, cfg.d, (cfg.n_from, cfg.n_to))
    return dumps(certificate_document(cert))


def certificate_document(cert: WitnessCertificate) -> dict:
    """The canonical dict form of a certificate; key order is the schema."""
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": f"lacunary {__version__}",
        "config": {
            "g1": intstr(cert.g1),
            "g2": intstr(cert.g2),
            "a1": intstr(cert.a1),
            "beta": rat(cert.beta),
            "budget_bits": intstr(cert.budget_bits),
            "op": cert.op.value,
            "d": rat(cert.d),
            "d_eff": rat(cert.d_eff),
            "n_from": intstr(cert.n_from),
            "n_to": intstr(cert.n_to),
        },
        "n0": None if cert.n0 is None else intstr(cert.n0),
        "n0_error": cert.n0_error,
        "threshold_checks": [{"n": intstr(t.n), "passed": t.passed}
                             for t in cert.threshold_checks],
        "records": [_record_entry(r) for r in cert.records],
        "verdict": cert.verdict,
    }


def _record_entry(r: IndexRecord) -> dict:
    return {
        "n": intstr(r.n),
        "error": r.error,
        "notice": r.notice,
        "convergent": None if r.convergent is None
        else {"p": str(r.convergent.p), "q": str(r.convergent.q)},
        "gap_bound": None if r.gap_bound is None else rat(r.gap_bound),
        "gap": None if r.gap is None else interval(r.gap),
        "bound_dominates": r.bound_dominates,
        "roth": None if r.roth is None else {
            "d_eff": rat(r.roth.d_eff),
            "passed": r.roth.passed,
            "tie": r.roth.tie,
            "margin": r.roth.margin,
            "depth": intstr(r.roth.depth),
        },
        "exponent": None if r.exponent_interval is None else interval(r.exponent_interval),
        "forms": None if r.forms is None else {
            "q_denominator_form": r.forms.q_denominator_form,
            "p_denominator_form": r.forms.p_denominator_form,
        },
    }


def cmd_measure(cfg: RunConfig) -> str:
    if cfg.d.denominator != 1 or cfg.d < 2:
        raise InvalidConfigError("d", f"degree must be an integer >= 2 here, got {cfg.d}")
    comp = _build_composite(cfg)
    target = AlgebraicTarget(int(cfg.d), cfg.height)
    lines = list(approximation_measure(target).derivation)
    n_max = max(cfg.n_to, 1)
    try:
        res = find_n1(comp, target, n_max)
        lines.append(f"n1 = {res.n1}")
        for ev in res.evidence:
            right = "-" if ev.right is None else ev.right.value
            lines.append(f"evidence n={ev.n}: left={ev.left.value} right={right}")
        lines.append(f"dominance = {'certified' if res.dominance_certified else 'not certified'}")
        lines.append(f"exponent step = {'ok' if res.exponent_step_ok else 'short'}")
    except TieEncountered as exc:
        lines.append(f"warning: tie at n={exc.n} ({exc.side} comparison): "
                     f"strict bracketing impossible")
    except NotFound as exc:
        lines.append(f"warning: no bracketing index: {exc}")
    return "\n".join(lines) + "\n"


def cmd_validate(cfg: RunConfig) -> str:
    sched = PowerSchedule(cfg.a1, cfg.beta, cfg.budget_bits)
    window = GrowthWindow(cfg.alpha, cfg.k)
    report = validate_growth(sched, window, cfg.n_to)
    if not report:
        return "vacuous pass (no indices checked)\n"
    lines = []
    for chk in report:
        lines.append(f"n={chk.n}: lower={'pass' if chk.lower_ok else 'FAIL'} "
                     f"upper={'pass' if chk.upper_ok else 'FAIL'} "
                     f"overall={'pass' if chk.ok else 'FAIL'}")
    good = sum(1 for chk in report if chk.ok)
    lines.append(f"summary: {good}/{len(report)} indices inside the window")
    return "\n".join(lines) + "\n"


_COMMANDS = {
    "digits": cmd_digits,
    "convergents": cmd_convergents,
    "witness": cmd_witness,
    "measure": cmd_measure,
    "validate": cmd_validate,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON config file; flags override it")
    common.add_argument("--g1", metavar="INT", help="first base (must exceed g2)")
    common.add_argument("--g2", metavar="INT", help="second base (>= 2)")
    common.add_argument("--a1", metavar="INT", help="first exponent (>= 2)")
    common.add_argument("--beta", metavar="U/V", help="growth exponent, a positive rational")
    common.add_argument("--op", metavar="OP", help="sum | difference | product | quotient")
    common.add_argument("--d", metavar="U/V", help="target exponent (witness) or degree (measure)")
    common.add_argument("--n-from", metavar="INT", help="first index")
    common.add_argument("--n-to", metavar="INT", help="last index")
    common.add_argument("--budget-bits", metavar="INT", help="exponent budget: a_n <= 2**bits")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="lacunary",
        description="Exact-arithmetic toolkit for sparse power series: "
                    "convergents, certified gap bounds, witness certificates "
                    "and approximation measures.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("digits", parents=[common],
                       help="certified decimal expansions of both series and the composite")
    p.add_argument("--digits", metavar="INT", help="decimal places (default 10)")
    sub.add_parser("convergents", parents=[common],
                   help="exact reduced convergents over the index range")
    sub.add_parser("witness", parents=[common],
                   help="emit the canonical JSON witness certificate")
    p = sub.add_parser("measure", parents=[common],
                       help="approximation-measure bound and bracketing evidence")
    p.add_argument("--height", metavar="INT", help="naive height H (default 1)")
    p = sub.add_parser("validate", parents=[common],
                       help="check the schedule against a growth window")
    p.add_argument("--alpha", metavar="U/V", help="window exponent alpha > 1")
    p.add_argument("--k", metavar="U/V", help="window multiplier k > 1")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        text = _COMMANDS[args.command](cfg)
    except (InvalidConfigError, NonIntegralExponent) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (ExponentBudgetExceeded, PrecisionUnattainable, InsufficientDepth) as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 3
    except (InternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    _emit(text, cfg.out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
