"""Batch command-line interface: one JSON document per invocation.

Commands read a symbol pair (and optional conjugation) from a JSON input
file or stdin, compute, and write one JSON report to the output path or
stdout. Logs go to stderr. Exit codes: 0 success, 1 malformed input JSON,
2 precondition violation, 3 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .conjugations import CAlphaBeta, JBetaLambda
from .diffop import SymbolPair, adjoint_symbols, truncated_matrix
from .errors import NumericError, PreconditionError
from .serialize import (
    classification_to_json,
    complex_pair,
    conjugation_from_json,
    conjugation_to_json,
    finite_float,
    matrix_to_json,
    spectrum_to_json,
    symbols_from_json,
    symbols_to_json,
)
from .spectrum import formula_spectrum, zeros_in_disk
from .symmetry import classify, classify_c_selfadjoint, classify_j_selfadjoint, residual
from .conjugations import conjugated_symbols

COMMANDS = ("classify", "adjoint", "conjugate", "spectrum", "verify", "matrix")

# deterministic verification grids
VERIFY_BETAS = [complex(math.cos(math.pi * k / 4.0), math.sin(math.pi * k / 4.0)) for k in range(8)]
VERIFY_LAMBDAS = [
    (0.15 + 0.05 * k) * complex(math.cos(2.0 * math.pi * k / 6.0), math.sin(2.0 * math.pi * k / 6.0))
    for k in range(6)
]


@dataclass
class JobSpec:
    command: str
    symbols: SymbolPair
    conjugation: object | None = None
    n: int = 128
    kmax: int = 16
    output: str = "-"


def _parse_complex_flag(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"expected RE or RE,IM, got {text!r}")


def _resolve_conjugation(args, data: dict):
    if args.lam is not None:
        beta = args.beta if args.beta is not None else 1.0
        return JBetaLambda(beta=beta, lam=args.lam)
    if args.beta is not None or args.alpha is not None:
        return CAlphaBeta(
            alpha=args.alpha if args.alpha is not None else 1.0,
            beta=args.beta if args.beta is not None else 1.0,
        )
    if "conjugation" in data:
        return conjugation_from_json(data["conjugation"])
    return None


def run_job(job: JobSpec) -> dict:
    """Execute one command; raises package errors for the caller to map."""
    if job.n < 8:
        raise PreconditionError(f"truncation N must be at least 8, got {job.n}")
    if job.command == "classify":
        beta = 1.0 + 0j
        lam = None
        if isinstance(job.conjugation, CAlphaBeta):
            beta = job.conjugation.beta
        if isinstance(job.conjugation, JBetaLambda):
            lam = job.conjugation.lam
        report = classify(
            job.symbols,
            beta=beta,
            lam=lam,
            conj=job.conjugation,
            truncation_degree=job.n if job.conjugation is not None else None,
        )
        return classification_to_json(report)
    if job.command == "adjoint":
        adj = adjoint_symbols(job.symbols)
        return {"adjoint": symbols_to_json(adj)}
    if job.command == "conjugate":
        if job.conjugation is None:
            raise PreconditionError("conjugate requires a conjugation (flags or input JSON)")
        pushed = conjugated_symbols(job.conjugation, job.symbols)
        return {
            "conjugation": conjugation_to_json(job.conjugation),
            "conjugated": symbols_to_json(pushed),
        }
    if job.command == "spectrum":
        results = []
        for root, mult in zeros_in_disk(job.symbols.psi1):
            if mult == 1:
                res = formula_spectrum(job.symbols, root, kmax=job.kmax, truncation=job.n)
                results.append(spectrum_to_json(res, multiplicity=mult))
            else:
                results.append(
                    {
                        "zero": complex_pair(root),
                        "multiplicity": mult,
                        "skipped": "zero is not simple",
                    }
                )
        return {"results": results}
    if job.command == "verify":
        table = []
        for beta in VERIFY_BETAS:
            conj = CAlphaBeta(alpha=1.0, beta=beta)
            verdict = classify_c_selfadjoint(job.symbols, beta)
            table.append(
                {
                    "conjugation": conjugation_to_json(conj),
                    "classifier": verdict.ok,
                    "residual": finite_float(residual(job.symbols, conj, job.n)),
                }
            )
        for lam in VERIFY_LAMBDAS:
            conj = JBetaLambda(beta=1.0, lam=lam)
            verdict = classify_j_selfadjoint(job.symbols, lam)
            table.append(
                {
                    "conjugation": conjugation_to_json(conj),
                    "classifier": verdict.ok,
                    "residual": finite_float(residual(job.symbols, conj, job.n)),
                }
            )
        return {"table": table}
    if job.command == "matrix":
        return matrix_to_json(truncated_matrix(job.symbols, job.n))
    raise PreconditionError(f"unknown command {job.command!r}")


def _write_output(doc: dict, output: str) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hardy-symm",
        description="First-order differential operators on the Hardy space: "
        "classification, adjoints, conjugations, point spectra.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", default="-", help="JSON input file, or - for stdin")
    parser.add_argument("--n", type=int, default=128, help="truncation degree (default 128)")
    parser.add_argument("--kmax", type=int, default=16, help="largest candidate index (default 16)")
    parser.add_argument("--alpha", type=_parse_complex_flag, default=None, metavar="RE,IM")
    parser.add_argument("--beta", type=_parse_complex_flag, default=None, metavar="RE,IM")
    parser.add_argument("--lambda", dest="lam", type=_parse_complex_flag, default=None, metavar="RE,IM")
    parser.add_argument("--output", default="-", help="report file, or - for stdout")
    args = parser.parse_args(argv)

    try:
        if args.input == "-":
            raw = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as handle:
                raw = handle.read()
        data = json.loads(raw)
    except (OSError, json.JSONDecodeError) as err:
        print(f"hardy-symm: cannot read input: {err}", file=sys.stderr)
        return 1

    try:
        symbols = symbols_from_json(data)
        conjugation = _resolve_conjugation(args, data)
        job = JobSpec(
            command=args.command,
            symbols=symbols,
            conjugation=conjugation,
            n=args.n,
            kmax=args.kmax,
            output=args.output,
        )
        report = run_job(job)
    except (PreconditionError, ValueError) as err:
        _write_output({"error": {"kind": type(err).__name__, "message": str(err)}}, args.output)
        print(f"hardy-symm: {err}", file=sys.stderr)
        return 2
    except NumericError as err:
        _write_output({"error": {"kind": type(err).__name__, "message": str(err)}}, args.output)
        print(f"hardy-symm: {err}", file=sys.stderr)
        return 3

    _write_output(report, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
