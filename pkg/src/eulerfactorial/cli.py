"""Command-line interface: ``eulerfactorial {eval,constants,estimate,verify}``.

Every invocation writes one JSON object (or CSV for ``verify --format csv``)
to stdout.  Exit codes: 0 ok / identity passed, 1 domain error or failed
verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any

from . import asymptotics, euler_family, identities
from .errors import ArgumentError, ConsistencyError, DomainError
from .euler_family import FamilyKind, Parameters
from .special_core import gamma, gamma_log_value

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    outputs: dict[str, Any] = field(default_factory=dict)
    status: str = "ok"
    message: str | None = None
    # grid report kept for CSV rendering; not part of the JSON record
    report: identities.VerificationReport | None = field(default=None, repr=False)

    def as_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "status": self.status,
            "message": self.message,
        }


def format_number(value: float) -> str:
    """17 significant digits, scientific notation."""
    if math.isnan(value):
        return '"nan"'
    if math.isinf(value):
        return '"inf"' if value > 0 else '"-inf"'
    return f"{value:.16e}"


def to_json(obj: Any) -> str:
    # json.dumps would print floats with repr(); this pins the float format.
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_number(obj)
    if isinstance(obj, dict):
        items = (f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _params(a: float | None, b: float | None) -> Parameters:
    if a is None or b is None:
        raise UsageError("--a and --b are required")
    try:
        return Parameters(a, b)
    except DomainError as exc:
        raise UsageError(f"parameters must be positive: {exc}") from None


def cmd_eval(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    rec = OutputRecord("eval", {"func": args.func, "x": args.x, "log": args.log})
    if args.func == "gamma":
        value = gamma_log_value(args.x)
    else:
        params = _params(args.a, args.b)
        rec.inputs.update(a=params.a, b=params.b)
        value = euler_family.continuation(FamilyKind.parse(args.func), params, args.x)
    rec.outputs = {"sign": value.sign, "log_abs": value.log_abs}
    if not args.log:
        try:
            linear = gamma(args.x) if args.func == "gamma" else value.to_float()
        except OverflowError:
            rec.outputs.update(value=None, overflow=True)
        else:
            rec.outputs.update(value=linear, overflow=False)
    return rec, EXIT_OK


def cmd_constants(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    params = _params(args.a, args.b)
    consts = asymptotics.assemble_constants(params)
    rec = OutputRecord("constants", {"a": params.a, "b": params.b})
    rec.outputs = {"A": consts.A, "B": consts.B, "C": consts.C, "k": consts.k,
                   "residuals": asymptotics.relation_residuals(params)}
    return rec, EXIT_OK


def cmd_estimate(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    params = _params(args.a, args.b)
    if args.n < 10:
        raise UsageError(f"--n must be >= 10, got {args.n}")
    est = asymptotics.estimate_constant(FamilyKind.parse(args.func), params, args.n)
    rec = OutputRecord("estimate", {"func": args.func, "a": params.a, "b": params.b, "n": args.n})
    rec.outputs = {"n_used": est.n_used, "estimate": est.estimate,
                   "closed_form": est.closed_form, "relative_error": est.relative_error}
    return rec, EXIT_OK


def _report_outputs(report: identities.VerificationReport) -> dict[str, Any]:
    out = {
        "identity_name": report.identity_name,
        "grid": list(report.grid),
        "residuals": list(report.residuals),
        "max_residual": report.max_residual,
        "mean_residual": report.mean_residual,
        "tolerance": report.tolerance,
        "passed": report.passed,
    }
    if report.labels is not None:
        out["labels"] = list(report.labels)
    return out


def report_csv(report: identities.VerificationReport) -> str:
    if report.labels is not None:
        lines = ["check,x,residual"]
        lines += [f"{lab},{format_number(x)},{format_number(r)}"
                  for lab, x, r in zip(report.labels, report.grid, report.residuals)]
    else:
        lines = ["x,residual"]
        lines += [f"{format_number(x)},{format_number(r)}"
                  for x, r in zip(report.grid, report.residuals)]
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    rec = OutputRecord("verify", {"identity": args.identity})
    if args.tolerance is not None:
        rec.inputs["tolerance"] = args.tolerance
    if args.identity == "chain":
        params = _params(args.a, args.b)
        rec.inputs.update(a=params.a, b=params.b)
        kwargs = {} if args.tolerance is None else {"tolerance": args.tolerance}
        report = identities.derivation_chain_check(params, **kwargs)
    else:
        missing = [flag for flag, v in (("--x-min", args.x_min), ("--x-max", args.x_max),
                                        ("--steps", args.steps)) if v is None]
        if missing:
            raise UsageError(f"{args.identity} needs {', '.join(missing)}")
        if args.identity == "multiplication" and args.n is None:
            raise UsageError("multiplication needs --n")
        rec.inputs.update(x_min=args.x_min, x_max=args.x_max, steps=args.steps)
        if args.n is not None:
            rec.inputs["n"] = args.n
        try:
            report = identities.verify_grid(args.identity, args.x_min, args.x_max, args.steps,
                                            tolerance=args.tolerance, n=args.n)
        except ArgumentError as exc:
            raise UsageError(str(exc)) from None
    rec.outputs = _report_outputs(report)
    rec.inputs["format"] = args.format
    rec.report = report
    if not report.passed:
        rec.status = "error"
        rec.message = (f"max residual {report.max_residual:.3e} exceeds "
                       f"tolerance {report.tolerance:.3e}")
        return rec, EXIT_FAIL
    return rec, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerfactorial",
        description="Euler's generalized factorials, their asymptotic constants "
                    "and Gamma-function identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate gamma, gammaE, delta or theta")
    p.add_argument("func", choices=["gamma", "gammaE", "delta", "theta"])
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--log", action="store_true", help="report sign and log only")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("constants", help="asymptotic constants A, B, C, k")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.set_defaults(handler=cmd_constants)

    p = sub.add_parser("estimate", help="recover a constant from the exact product")
    p.add_argument("func", choices=["gammaE", "delta", "theta"])
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_estimate)

    p = sub.add_parser("verify", help="check duplication/multiplication formulas")
    p.add_argument("identity", choices=["duplication", "multiplication", "chain"])
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--x-min", type=float)
    p.add_argument("--x-max", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(handler=cmd_verify)
    return parser


def _emit(rec: OutputRecord, fmt: str, out) -> None:
    report = rec.report
    if fmt == "csv" and report is not None:
        out.write(report_csv(report))
    else:
        out.write(to_json(rec.as_dict()) + "\n")


def _error_record(args: argparse.Namespace, exc: Exception) -> OutputRecord:
    inputs = {k: v for k, v in vars(args).items()
              if k not in ("handler", "command") and v is not None}
    return OutputRecord(args.command, inputs, status="error", message=str(exc) or type(exc).__name__)


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    fmt = getattr(args, "format", "json")
    try:
        rec, code = args.handler(args)
    except (UsageError, ArgumentError) as exc:
        rec, code = _error_record(args, exc), EXIT_USAGE
    except (DomainError, ConsistencyError, OverflowError) as exc:
        rec, code = _error_record(args, exc), EXIT_FAIL
    if rec.message:
        print(f"eulerfactorial {args.command}: {rec.message}", file=stderr)
    if rec.status == "error" and rec.report is None:
        fmt = "json"
    _emit(rec, fmt, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
