"""JSON encoding shared by the CLI: complex scalars as [re, im] pairs,
polynomials as ascending coefficient lists, reports as plain dicts.

Infinite residuals serialize as the string "inf" to keep the output strict
JSON (json.dumps would otherwise emit the non-standard Infinity token).
"""

from __future__ import annotations

import math

import numpy as np

from .conjugations import CAlphaBeta, JBetaLambda
from .diffop import OperatorMatrix, SymbolPair
from .poly import Poly, parse_poly
from .spectrum import SpectrumResult
from .symmetry import ClassificationReport, Verdict


def complex_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def pair_complex(pair) -> complex:
    if isinstance(pair, (int, float)):
        return complex(pair)
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValueError(f"expected a [re, im] pair, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def poly_to_json(p: Poly) -> list[list[float]]:
    return [complex_pair(a) for a in p.coeffs]


def poly_from_json(data) -> Poly:
    if isinstance(data, str):
        return parse_poly(data)
    return Poly.from_coeffs([pair_complex(item) for item in data])


def symbols_to_json(symbols: SymbolPair) -> dict:
    return {"psi0": poly_to_json(symbols.psi0), "psi1": poly_to_json(symbols.psi1)}


def symbols_from_json(data: dict) -> SymbolPair:
    if "psi0" not in data or "psi1" not in data:
        raise ValueError("input must provide 'psi0' and 'psi1'")
    return SymbolPair(poly_from_json(data["psi0"]), poly_from_json(data["psi1"]))


def conjugation_to_json(conj) -> dict:
    if isinstance(conj, CAlphaBeta):
        return {"kind": "C", "alpha": complex_pair(conj.alpha), "beta": complex_pair(conj.beta)}
    if isinstance(conj, JBetaLambda):
        return {"kind": "J", "beta": complex_pair(conj.beta), "lambda": complex_pair(conj.lam)}
    raise TypeError(f"unsupported conjugation type {type(conj)!r}")


def conjugation_from_json(data: dict):
    kind = data.get("kind")
    if kind == "C":
        return CAlphaBeta(
            alpha=pair_complex(data.get("alpha", 1.0)),
            beta=pair_complex(data.get("beta", 1.0)),
        )
    if kind == "J":
        return JBetaLambda(
            beta=pair_complex(data.get("beta", 1.0)),
            lam=pair_complex(data["lambda"]),
        )
    raise ValueError(f"conjugation kind must be 'C' or 'J', got {kind!r}")


def finite_float(value: float):
    if value is None:
        return None
    if math.isinf(value):
        return "inf"
    return float(value)


def verdict_to_json(verdict: Verdict) -> dict:
    witness = {
        key: complex_pair(complex(value)) for key, value in sorted(verdict.witness.items())
    }
    return {"ok": verdict.ok, "witness": witness, "reason": verdict.reason}


def classification_to_json(report: ClassificationReport) -> dict:
    out: dict = {"hermitian": verdict_to_json(report.hermitian)}
    if report.c_selfadjoint is not None:
        out["c_selfadjoint"] = verdict_to_json(report.c_selfadjoint)
        out["c_beta"] = complex_pair(report.c_beta)
    if report.j_selfadjoint is not None:
        out["j_selfadjoint"] = verdict_to_json(report.j_selfadjoint)
        out["j_lambda"] = complex_pair(report.j_lambda)
    out["numeric_residual"] = finite_float(report.numeric_residual)
    return out


def spectrum_to_json(result: SpectrumResult, multiplicity: int = 1) -> dict:
    return {
        "zero": complex_pair(result.zero),
        "multiplicity": multiplicity,
        "candidates": [complex_pair(v) for v in result.eigenvalues],
        "adjoint": [complex_pair(v) for v in result.adjoint_eigenvalues],
        "numeric": [complex_pair(v) for v in result.numeric_eigenvalues],
        "pairing_max_distance": result.pairing_max_distance,
    }


def matrix_to_json(matrix: OperatorMatrix) -> dict:
    entries = np.asarray(matrix.entries)
    return {
        "dim": matrix.dim,
        "basis": matrix.basis,
        "entries": [[complex_pair(entries[i, j]) for j in range(matrix.dim)] for i in range(matrix.dim)],
        "spill_count": matrix.spill_count,
        "spill_max": matrix.spill_max,
    }
