"""Command-line front end.

Subcommands::

    twistreg classify OPERATOR.json [--theta T] [--tol-zero E] [--tol-lambda E]
    twistreg specfun phi|theta|airy ...
    twistreg solve OPERATOR.json --c1 RE,IM --c2 RE,IM --grid A:B:STEP [--out FILE]
    twistreg verify [--suite NAME] [--seed N] [--jobs K]

Operator documents may also be named ``builtin:NAME`` for the documents
shipped in ``twistreg/data``.  Exit codes: 0 success, 1 input error,
2 anomaly (no verdict), 3 failed internal check.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Sequence

import jsonschema
import numpy as np

from . import classify
from .errors import AmbiguityError, AnomalyError, SectorError, TwistRegError
from .operators.solutions import eval_solution, leading_form, solution_basis
from .operators.symbols import CoeffTable, DeltaCase, TwistedFrame
from .specfun import airy, airy_asym, phi, phi_asym, phi_route, theta, theta_asym
from .specfun.confluent import ASYM_ORDER, DEFAULT_EPS, SWITCH_RADIUS

EXIT_OK, EXIT_INPUT, EXIT_ANOMALY, EXIT_CHECK = 0, 1, 2, 3

COEFF_KEYS = ("a20", "a11", "a02", "a10", "a01", "a00")
FRAME_KEYS = ("alpha", "beta", "gamma", "delta")
OPTION_KEYS = ("theta", "tol_zero", "tol_lambda")


class InputProblem(Exception):
    """Raised for anything wrong with what the user handed us."""


class JsonFloat(float):
    """A float that remembers how it was spelled in the input."""

    text: str

    def __new__(cls, text: str):
        obj = super().__new__(cls, text)
        obj.text = text
        return obj


def _encode(obj: Any, indent: int, level: int = 0) -> str:
    # json.dumps re-spells floats (1e-9 -> 1e-09); keep the input spelling instead
    if isinstance(obj, JsonFloat):
        return obj.text
    pad, inner = " " * indent * level, " " * indent * (level + 1)
    if isinstance(obj, dict) and obj:
        items = [f"{inner}{json.dumps(k)}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and obj:
        return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
    return json.dumps(obj)


def _schema() -> dict:
    text = resources.files("twistreg").joinpath("schemas/operator.schema.json").read_text()
    return json.loads(text)


@dataclass
class OperatorDocument:
    kind: str
    # raw JSON numbers are kept so that re-emitting reproduces the input
    coefficients: dict[str, list]
    frame: dict[str, Any] | None = None
    options: dict[str, Any] = field(default_factory=dict)

    @property
    def table(self) -> CoeffTable:
        return CoeffTable(*(complex(*self.coefficients[k]) for k in COEFF_KEYS))

    @property
    def frame_obj(self) -> TwistedFrame | None:
        if self.frame is None:
            return None
        return TwistedFrame(*(float(self.frame[k]) for k in FRAME_KEYS))

    key_order: tuple[str, ...] = ("kind", "coefficients", "frame", "options")

    def to_dict(self) -> dict:
        # dicts keep the order they were read in, so this re-emits the input layout
        parts = {"kind": self.kind, "coefficients": self.coefficients,
                 "frame": self.frame, "options": self.options or None}
        return {k: parts[k] for k in self.key_order if parts.get(k) is not None}


def parse_document(data: Any) -> OperatorDocument:
    try:
        jsonschema.validate(data, _schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InputProblem(f"schema violation at {where}: {exc.message}") from None
    doc = OperatorDocument(data["kind"], dict(data["coefficients"]), data.get("frame"),
                           dict(data.get("options", {})), tuple(data))
    if doc.frame_obj is not None:
        try:
            doc.frame_obj.validate()
        except TwistRegError as exc:
            raise InputProblem(f"invalid frame: {exc}") from None
    return doc


def read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        try:
            return resources.files("twistreg").joinpath(f"data/{name}.json").read_text()
        except FileNotFoundError:
            raise InputProblem(f"no bundled operator named {name!r}") from None
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputProblem(f"cannot read {source}: {exc.strerror}") from None


def load_document(source: str) -> OperatorDocument:
    try:
        data = json.loads(read_text(source), parse_float=JsonFloat)
    except json.JSONDecodeError as exc:
        raise InputProblem(f"malformed JSON: {exc}") from None
    return parse_document(data)


def dump_document(doc: OperatorDocument) -> str:
    return _encode(doc.to_dict(), 2)


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def parse_grid(text: str) -> np.ndarray:
    try:
        a, b, step = (float(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B:STEP, got {text!r}") from None
    if step <= 0 or b < a:
        raise argparse.ArgumentTypeError("need STEP > 0 and B >= A")
    n = int(math.floor((b - a) / step + 1e-9)) + 1
    return a + step * np.arange(n)


def _cx(z: complex | None):
    return None if z is None else [complex(z).real, complex(z).imag]


def _emit(obj: Any) -> None:
    print(json.dumps(obj, indent=2))


# ---------------------------------------------------------------- commands


def _tolerances(args, doc: OperatorDocument) -> dict:
    opts = doc.options
    return {
        "tol_zero": args.tol_zero if args.tol_zero is not None else opts.get("tol_zero", classify.ZERO_TOL),
        "tol_lambda": args.tol_lambda if args.tol_lambda is not None else opts.get("tol_lambda", classify.LAMBDA_TOL),
    }


def cmd_classify(args) -> int:
    doc = load_document(args.operator)
    theta_opt = args.theta if args.theta is not None else doc.options.get("theta")
    tol = _tolerances(args, doc)
    try:
        if doc.kind == "twisted":
            verdict = classify.classify_twisted(doc.table, doc.frame_obj, theta_opt, **tol)
        else:
            verdict = classify.classify_table(doc.table, theta_opt, **tol)
    except AnomalyError as exc:
        _emit({"error": "anomaly", "message": str(exc), "warnings": exc.warnings})
        return EXIT_ANOMALY
    out = verdict.to_dict()
    if doc.kind == "source":
        # the twisted flag is still meaningful: it is what any twist of this source gets
        out["kind"] = "source"
    _emit(out)
    return EXIT_OK


def cmd_specfun(args) -> int:
    z = args.z
    if args.func == "airy":
        if args.asym is not None:
            res = airy_asym(args.which, z, args.regime, args.eps)
            _emit({"value": _cx(res.value), "route": "asymptotic", "est_remainder": res.est_remainder})
        else:
            ai, dai, bi, dbi = airy(z)
            v, dv = (ai, dai) if args.which == "ai" else (bi, dbi)
            _emit({"value": _cx(v), "derivative": _cx(dv), "route": "series", "est_remainder": None})
        return EXIT_OK
    if args.asym is not None:
        if args.func == "phi":
            res = phi_asym(args.p, args.q, z, args.asym, args.eps)
        else:
            res = theta_asym(args.p, z, args.asym, args.eps)
        if not res.sector_ok:
            raise SectorError(f"z = {z} lies outside the sector |Arg z| <= pi/2 - {args.eps}")
        _emit({"value": _cx(res.value), "route": "asymptotic", "est_remainder": res.est_remainder,
               "terms": res.terms_used, "degenerate": res.degenerate})
        return EXIT_OK
    if args.func == "phi":
        route = phi_route(args.p, args.q, z, args.eps)
        value = phi(args.p, args.q, z, args.eps)
        rem = phi_asym(args.p, args.q, z, ASYM_ORDER, args.eps).est_remainder if route == "asymptotic" else None
    else:
        value = theta(args.p, z, args.eps)
        route, rem = "series", None
        if abs(z) > SWITCH_RADIUS:
            a = theta_asym(args.p, z, ASYM_ORDER, args.eps)
            if a.sector_ok and a.est_remainder <= 1e-14 * abs(a.value):
                route, rem = "asymptotic", a.est_remainder
    _emit({"value": _cx(value), "route": route, "est_remainder": rem})
    return EXIT_OK


def _fmt(v: float) -> str:
    return repr(float(v))


def cmd_solve(args) -> int:
    doc = load_document(args.operator)
    theta_opt = doc.options.get("theta")
    if doc.kind == "twisted":
        doc.frame_obj.validate()
    table = doc.table
    if theta_opt is None and table.a20 == 0:
        raise InputProblem("a20 = 0: give options.theta to solve the shifted operator")
    _, b = classify.shifted_symbol(table, 0.0 if theta_opt is None else theta_opt)
    basis = solution_basis(b)
    c1, c2 = args.c1, args.c2
    zero = c1 == 0 and c2 == 0
    forms = {}
    if not zero:
        for end in (1, -1):
            try:
                forms[end] = leading_form(basis, c1, c2, end)
            except AmbiguityError as exc:
                print(f"warning: no envelope at end {end:+d}: {exc}", file=sys.stderr)
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["x", "re_u", "im_u", "abs_u", "envelope"])
        for x in args.grid:
            x = float(x)
            try:
                u = eval_solution(basis, c1, c2, x)
                cells = [_fmt(u.real), _fmt(u.imag), _fmt(abs(u))]
            except (OverflowError, ArithmeticError):
                cells = ["NA", "NA", "NA"]
            if zero:
                env = _fmt(0.0)
            else:
                lead = forms.get(1 if x > 0 else -1)
                env = "NA"
                fractional = basis.case is DeltaCase.D1_NONZERO or not (lead and lead.exact)
                if lead is not None and not (x == 0 and fractional):
                    try:
                        env = _fmt(lead.scale(x))
                    except (OverflowError, ArithmeticError, ValueError, TwistRegError):
                        env = "NA"
            w.writerow([_fmt(x), *cells, env])
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify.suites import run_suite

    reports = run_suite(args.suite, args.seed, args.jobs)
    for r in reports:
        print(json.dumps(r.to_dict(), default=str))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    from .verify.suites import DEFAULT_SEED, SUITES

    ap = argparse.ArgumentParser(prog="twistreg", description="Global regularity of second-order twisted operators.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify an operator document")
    c.add_argument("operator", help="path, '-' for stdin, or builtin:NAME")
    c.add_argument("--theta", type=float, default=None, help="shear to apply instead of the automatic choice")
    c.add_argument("--tol-zero", type=float, default=None)
    c.add_argument("--tol-lambda", type=float, default=None)
    c.set_defaults(run=cmd_classify)

    s = sub.add_parser("specfun", help="evaluate Phi, Theta or the Airy functions")
    s.add_argument("func", choices=("phi", "theta", "airy"))
    s.add_argument("--p", type=parse_complex, default=0j)
    s.add_argument("--q", type=parse_complex, default=1 + 0j)
    s.add_argument("--z", type=parse_complex, required=True, help="RE,IM (use --z=-1,0 for negatives)")
    s.add_argument("--which", choices=("ai", "bi"), default="ai")
    s.add_argument("--regime", choices=("right", "left"), default="right")
    s.add_argument("--asym", type=int, nargs="?", const=ASYM_ORDER, default=None,
                   help="use the large-|z| expansion with N terms")
    s.add_argument("--eps", type=float, default=DEFAULT_EPS)
    s.set_defaults(run=cmd_specfun)

    v = sub.add_parser("solve", help="tabulate c1 u1 + c2 u2 and its predicted envelope as CSV")
    v.add_argument("operator")
    v.add_argument("--c1", type=parse_complex, default=1 + 0j)
    v.add_argument("--c2", type=parse_complex, default=0j)
    v.add_argument("--grid", type=parse_grid, default=parse_grid("-8:8:0.5"))
    v.add_argument("--out", default=None)
    v.set_defaults(run=cmd_solve)

    r = sub.add_parser("verify", help="run numerical verification suites")
    r.add_argument("--suite", default="default", choices=sorted(SUITES) + ["default"])
    r.add_argument("--seed", type=int, default=DEFAULT_SEED)
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(run=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except InputProblem as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TwistRegError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
