"""Command-line interface.

Exit codes: 0 success, 1 invalid parameters, 2 verification failure.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from typing import Sequence

from . import models, nf
from .errors import DpfibError, InvalidArgument
from .verdicts import classify
from .verify import VerifyBox, verify_all

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2

DEFAULTS = {
    "format": "text",
    "budget": 100_000,
    "seed": 0,
    "n": 1,
    "box": None,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dpfib", description="Rigidity of del Pezzo fibrations of degree 1 and 2 over P^1.")
    p.add_argument("--config", help="key=value file with defaults (format, budget, seed, n, box)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=("json", "text"), default=None)

    c = sub.add_parser("classify", help="verdict for one model")
    c.add_argument("--degree", type=int, choices=(1, 2), required=True)
    c.add_argument("--params", type=_int_list, required=True,
                   help="epsilon,n1,n2,n3 (degree 1) or a,n1,n2 (degree 2)")
    fmt(c)

    e = sub.add_parser("enumerate", help="list valid models")
    e.add_argument("--degree", type=int, choices=(1, 2), required=True)
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--sum", type=int, help="degree 2: value of 2a+b (1 or 2)")
    g.add_argument("--max", type=int,
                   help="degree 1: max n3; degree 2: box |a| <= MAX, n2 <= MAX")
    e.add_argument("--classify", action="store_true", help="attach verdicts")
    fmt(e)

    v = sub.add_parser("verify", help="run the self-verification suite")
    v.add_argument("--box", default=None,
                   help="comma-separated key=value overrides, e.g. dp1_n3=20,dp2_a=5")
    fmt(v)

    f = sub.add_parser("feasibility", help="certificate and witness search for one inequality case")
    f.add_argument("--case", choices=sorted(nf.CASES), required=True)
    for name in ("beta", "n1", "n2", "A", "mp"):
        f.add_argument(f"--{name}", type=int, default=None)
    f.add_argument("--n", type=int, default=None, help="system degree n (default 1)")
    f.add_argument("--budget", type=int, default=None)
    f.add_argument("--seed", type=int, default=None)
    fmt(f)
    return p


def _load_config(path: str | None) -> dict:
    out = dict(DEFAULTS)
    if not path:
        return out
    cp = configparser.ConfigParser()
    try:
        with open(path) as fh:
            cp.read_string("[dpfib]\n" + fh.read())
    except OSError as exc:
        raise InvalidArgument(f"cannot read config {path}: {exc}") from None
    for key, value in cp["dpfib"].items():
        if key not in DEFAULTS:
            raise InvalidArgument(f"unknown config key {key!r}; known: {sorted(DEFAULTS)}")
        out[key] = int(value) if key in ("budget", "seed", "n") else value
    return out


def _fill(args, config: dict) -> None:
    for key, value in config.items():
        if getattr(args, key, value) is None:
            setattr(args, key, value)


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _model_row(m, verdict=None) -> str:
    if m.degree == 1:
        head = f"({m.epsilon}; {m.n1},{m.n2},{m.n3})  {m.case_tag.value}"
    else:
        head = f"({m.a}; {m.n1},{m.n2})  2a+b={m.sum2ab}  beta={m.beta}"
    if verdict is None:
        return head
    tail = f"  {verdict.status.value} [{verdict.justification}]"
    if verdict.witness is not None:
        tail += f" {verdict.witness.value}"
    return head + tail


def cmd_classify(args, out) -> int:
    model = models.build_model(args.degree, args.params)
    verdict = classify(model)
    if args.format == "json":
        _emit({"model": model.to_json(), "verdict": verdict.to_json()}, out)
    else:
        out.write(_model_row(model, verdict) + "\n")
        if verdict.witness is not None:
            out.write(f"  {verdict.witness.description}\n")
        for note in verdict.notes:
            out.write(f"  note: {note}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    if args.sum is not None:
        if args.degree != 2:
            raise InvalidArgument("--sum applies to degree 2 only")
        bound = args.sum
    elif args.degree == 1:
        bound = args.max
    else:
        if args.max < 0:
            raise InvalidArgument("--max must be non-negative")
        bound = models.Dp2Box(args.max, args.max)
    rows = models.enumerate_models(args.degree, bound)
    for m in rows:
        verdict = classify(m) if args.classify else None
        if args.format == "json":
            rec = {"model": m.to_json(), "params": list(m.params)}
            if verdict is not None:
                rec["verdict"] = verdict.to_json()
            _emit(rec, out)
        else:
            out.write(_model_row(m, verdict) + "\n")
    if args.format == "text":
        out.write(f"{len(rows)} models\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    report = verify_all(VerifyBox.parse(args.box))
    if args.format == "json":
        _emit(report.to_json(), out)
    else:
        for check in report.checks:
            out.write(check.line() + "\n")
        out.write("OK\n" if report.ok else "FAILED\n")
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_feasibility(args, out) -> int:
    spec = nf.CASES[args.case]
    params = {}
    for name in spec.params:
        value = getattr(args, name)
        if value is None:
            raise InvalidArgument(f"case {args.case} needs --{name}")
        params[name] = value
    system = nf.nf_system(args.case, args.n, **params)
    cert = nf.reduce_to_quadratic(args.case, dict(params, n=args.n))
    result = nf.feasibility_search(system, budget=args.budget, seed=args.seed)
    rec = {
        "case": args.case,
        "coefficient": cert.coefficient_text,
        "infeasible": cert.infeasible,
        "witness": result.to_json()["witness"],
        "seed": args.seed,
        "samples": result.samples,
    }
    if args.format == "json":
        _emit(rec, out)
    else:
        out.write(f"case {args.case} {params} n={args.n}\n")
        out.write(f"coefficient {cert.coefficient_text} = {cert.value}"
                  f" -> {'infeasible' if cert.infeasible else 'not excluded'}\n")
        if result.witness is None:
            out.write(f"no witness in {result.samples} samples (seed {args.seed})\n")
        else:
            w = ", ".join(f"{k}={v}" for k, v in rec["witness"].items())
            out.write(f"witness after {result.samples} samples (seed {args.seed}): {w}\n")
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "feasibility": cmd_feasibility,
}


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    # let "--params -4,2,8" through; argparse would read -4,2,8 as an option
    out, it = [], iter(argv)
    for tok in it:
        if tok in ("--params", "--beta", "--n1", "--n2", "--A", "--mp", "--sum", "--max"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_negative_values(argv))
    try:
        _fill(args, _load_config(args.config))
        return COMMANDS[args.command](args, out)
    except DpfibError as exc:
        sys.stderr.write(f"dpfib: {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
