"""Symbol classifiers for hermitian and conjugation-selfadjoint operators,
plus a numeric residual that cross-checks the symbolic verdicts.

The three coefficient patterns (all with deg psi0 <= 1, deg psi1 <= 2,
psi0 = a + b u, psi1 = d + c u + b u^2):

* hermitian:                  d = conj(b),   a and c real
* diagonal-family selfadjoint (queried beta): d = b * beta, a and c free
* Moebius-family selfadjoint (queried lambda): d = -lambda*b/conj(lambda)
                                               - lambda*c, a and c free

Every hermitian pair is also diagonal-family selfadjoint with alpha = 1 and
beta = conj(b)/b (beta = 1 when b = 0); the converse fails, e.g.
(i u, i + i u^2).

The numeric residual compares the conjugated operator against the adjoint on
finite sections: exactly via conjugated symbols whenever the pushforward is
polynomial, otherwise through the anti-linear matrix sandwich M conj(A)
conj(M). Symbolic matching uses 1e-12; sandwich comparisons inherit the
Moebius-family truncation budget (1e-8 at N = 128, |lambda| <= 0.5).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .conjugations import (
    AntiLinearMatrix,
    CAlphaBeta,
    JBetaLambda,
    c_matrix,
    conjugated_symbols,
    j_matrix,
)
from .diffop import SymbolPair, truncated_matrix
from .errors import NotHermitian, NotPolynomial
from .hardy import KernelSpec, kernel_coefficients

MATCH_TOL = 1e-12


@dataclass(frozen=True)
class Verdict:
    """Outcome of one coefficient-pattern test."""

    ok: bool
    witness: dict = field(default_factory=dict)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _degrees_ok(symbols: SymbolPair) -> bool:
    return symbols.psi0.degree <= 1 and symbols.psi1.degree <= 2


def _abcd(symbols: SymbolPair) -> tuple[complex, complex, complex, complex]:
    return (
        symbols.psi0.coefficient(0),
        symbols.psi0.coefficient(1),
        symbols.psi1.coefficient(1),
        symbols.psi1.coefficient(0),
    )


def classify_hermitian(symbols: SymbolPair, tol: float = MATCH_TOL) -> Verdict:
    """psi0 = a + b u, psi1 = conj(b) + c u + b u^2 with a, c real."""
    if not _degrees_ok(symbols):
        return Verdict(False, reason="degrees exceed (1, 2)")
    a, b, c, d = _abcd(symbols)
    b2 = symbols.psi1.coefficient(2)
    if abs(a.imag) > tol:
        return Verdict(False, reason="constant term of psi0 is not real")
    if abs(c.imag) > tol:
        return Verdict(False, reason="linear term of psi1 is not real")
    if abs(d - np.conj(b)) > tol:
        return Verdict(False, reason="constant term of psi1 differs from conj(b)")
    if abs(b2 - b) > tol:
        return Verdict(False, reason="quadratic term of psi1 differs from b")
    return Verdict(True, witness={"a": a.real, "b": b, "c": c.real})


def classify_c_selfadjoint(symbols: SymbolPair, beta: complex, tol: float = MATCH_TOL) -> Verdict:
    """psi0 = a + b u, psi1 = b*beta + c u + b u^2; independent of alpha."""
    beta = complex(beta)
    if abs(abs(beta) - 1.0) > tol:
        raise ValueError(f"beta must be unimodular, got |beta| = {abs(beta)}")
    if not _degrees_ok(symbols):
        return Verdict(False, reason="degrees exceed (1, 2)")
    a, b, c, d = _abcd(symbols)
    b2 = symbols.psi1.coefficient(2)
    if abs(b2 - b) > tol:
        return Verdict(False, reason="quadratic term of psi1 differs from b")
    if abs(d - b * beta) > tol:
        return Verdict(False, reason="constant term of psi1 differs from b*beta")
    return Verdict(True, witness={"a": a, "b": b, "c": c})


def classify_j_selfadjoint(symbols: SymbolPair, lam: complex, tol: float = MATCH_TOL) -> Verdict:
    """psi0 = a + b u, psi1 = d + c u + b u^2 with d = -lam*b/conj(lam) - lam*c."""
    lam = complex(lam)
    if not 0.0 < abs(lam) < 1.0:
        raise ValueError(f"lambda must lie in the punctured unit disk, got |lambda| = {abs(lam)}")
    if not _degrees_ok(symbols):
        return Verdict(False, reason="degrees exceed (1, 2)")
    a, b, c, d = _abcd(symbols)
    b2 = symbols.psi1.coefficient(2)
    if abs(b2 - b) > tol:
        return Verdict(False, reason="quadratic term of psi1 differs from b")
    required = -lam * b / np.conj(lam) - lam * c
    if abs(d - required) > tol:
        return Verdict(False, reason="constant term of psi1 violates the lambda coupling")
    return Verdict(True, witness={"a": a, "b": b, "c": c, "d": d})


def hermitian_to_conjugation(symbols: SymbolPair) -> CAlphaBeta:
    """The diagonal conjugation witnessing selfadjointness of a hermitian pair:
    alpha = 1, beta = conj(b)/b (or 1 when b vanishes)."""
    verdict = classify_hermitian(symbols)
    if not verdict:
        raise NotHermitian(verdict.reason or "symbols are not hermitian")
    b = verdict.witness["b"]
    beta = 1.0 + 0j if abs(b) <= MATCH_TOL else np.conj(b) / b
    return CAlphaBeta(alpha=1.0, beta=complex(beta))


def _test_vectors(truncation_degree: int, monomial_degree: int | None = None) -> list[np.ndarray]:
    """Kernels and their first-derivative kernels on a 10-point spiral with
    |w| <= 0.6, plus monomials up to the requested degree (default N/4)."""
    if monomial_degree is None:
        monomial_degree = truncation_degree // 4
    vecs: list[np.ndarray] = []
    for k in range(10):
        w = 0.6 * ((k + 1) / 10.0) * np.exp(2j * math.pi * k / 10.0)
        for m in (0, 1):
            vecs.append(kernel_coefficients(KernelSpec(w, m), truncation_degree).coeffs)
    for k in range(monomial_degree + 1):
        e = np.zeros(truncation_degree + 1, dtype=complex)
        e[k] = 1.0
        vecs.append(e)
    return vecs


def _conjugation_matrix(conj, truncation_degree: int) -> AntiLinearMatrix:
    if isinstance(conj, CAlphaBeta):
        return c_matrix(conj, truncation_degree)
    if isinstance(conj, JBetaLambda):
        return j_matrix(conj, truncation_degree)
    raise TypeError(f"unsupported conjugation type {type(conj)!r}")


@dataclass(frozen=True)
class ResidualPaths:
    """Residuals of C E C - E* along the exact and sandwich routes.

    ``exact`` is None — with ``exact_failed`` holding the reason — when the
    symbol pushforward is genuinely rational; the headline ``value`` is then
    +inf, while ``sandwich`` keeps the finite matrix-level discrepancy for
    diagnostics.
    """

    exact: float | None
    sandwich: float
    exact_failed: str = ""

    @property
    def value(self) -> float:
        return self.exact if self.exact is not None else math.inf


def residual_paths(symbols: SymbolPair, conj, truncation_degree: int = 64,
                   padding: int = 64) -> ResidualPaths:
    """Max norm of (C E C - E*) v over the standard test set, both routes.

    The adjoint of a finite section is its conjugate transpose (exact in the
    monomial basis). Sections are built at N + padding and only the leading
    N+1 rows are compared, so sandwich truncation leakage stays far below the
    route-agreement budget. The exact route is skipped — with the reason
    recorded — when the symbol pushforward is genuinely rational.
    """
    if truncation_degree < 32:
        raise ValueError("residual truncation must be at least 32")
    big = truncation_degree + padding
    keep = truncation_degree + 1
    a = truncated_matrix(symbols, big).entries
    adjoint = a.conj().T
    vectors = _test_vectors(big, monomial_degree=truncation_degree // 4)

    exact: float | None = None
    exact_failed = ""
    try:
        pushed = conjugated_symbols(conj, symbols)
        exact_matrix = truncated_matrix(pushed, big).entries
        exact = max(
            float(np.linalg.norm(((exact_matrix - adjoint) @ v)[:keep])) for v in vectors
        )
    except NotPolynomial as err:
        exact_failed = str(err)

    m = _conjugation_matrix(conj, big).entries
    sandwich = m @ np.conj(a) @ np.conj(m)
    sandwich_residual = max(
        float(np.linalg.norm(((sandwich - adjoint) @ v)[:keep])) for v in vectors
    )
    return ResidualPaths(exact=exact, sandwich=sandwich_residual, exact_failed=exact_failed)


def residual(symbols: SymbolPair, conj, truncation_degree: int = 64) -> float:
    """Single-number residual: the exact route when the pushforward is
    polynomial, +inf otherwise (rational pushforward means the conjugated
    operator cannot equal any first-order adjoint)."""
    return residual_paths(symbols, conj, truncation_degree).value


@dataclass(frozen=True)
class ClassificationReport:
    """Bundle of classifier verdicts for one symbol pair."""

    hermitian: Verdict
    c_selfadjoint: Verdict | None = None
    c_beta: complex | None = None
    j_selfadjoint: Verdict | None = None
    j_lambda: complex | None = None
    numeric_residual: float | None = None


def classify(symbols: SymbolPair, beta: complex | None = None, lam: complex | None = None,
             conj=None, truncation_degree: int | None = None) -> ClassificationReport:
    """Run the applicable classifiers; optionally attach a numeric residual."""
    herm = classify_hermitian(symbols)
    c_v = classify_c_selfadjoint(symbols, beta) if beta is not None else None
    j_v = classify_j_selfadjoint(symbols, lam) if lam is not None else None
    num = None
    if conj is not None and truncation_degree is not None:
        num = residual(symbols, conj, truncation_degree)
    return ClassificationReport(
        hermitian=herm,
        c_selfadjoint=c_v,
        c_beta=beta,
        j_selfadjoint=j_v,
        j_lambda=lam,
        numeric_residual=num,
    )
