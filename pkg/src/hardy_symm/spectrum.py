"""Point-spectrum computations for expressions whose top symbol has a zero
inside the disk.

At a simple zero u of psi1 the candidate eigenvalues are
``psi0(u) + k * psi1'(u)`` for non-negative integers k, with conjugates
appearing as adjoint eigenvalues; the adjoint restricted to the span of the
derivative kernels at u is upper triangular with exactly those conjugates on
the diagonal. Candidate eigenfunctions solve the first-order ODE
``psi0 g + psi1 g' = lambda g`` and behave like (z - u)^k near u; square
summability of the Taylor tail decides membership, reported as a heuristic
three-way flag.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .diffop import OperatorMatrix, SymbolPair, adjoint_on_kernel, truncated_matrix
from .eigen import companion_matrix, qr_eigenvalues
from .errors import (
    NotAZero,
    NotSimple,
    OutsideDisk,
    SeriesDivergence,
    ZeroPolynomial,
)
from .hardy import HardyElement
from .poly import Poly, divide_linear, poly_derivative, poly_derivative_at, poly_eval, poly_pow

ZERO_TOL = 1e-10
MULTIPLICITY_TOL = 1e-8
BOUNDARY_BAND = 1e-10
CLUSTER_TOL = 1e-5
OVERFLOW_GUARD = 1e100


def _root_scale(p: Poly) -> float:
    return max(1.0, max(abs(a) for a in p.coeffs))


def zeros_in_disk(psi1: Poly) -> list[tuple[complex, int]]:
    """Roots of psi1 strictly inside the disk with their multiplicities.

    Companion-matrix eigenvalues feed the shared QR engine; nearby computed
    roots (within 1e-5) are clustered, the representative is polished by
    Newton steps on the (m-1)-th derivative, and the multiplicity is settled
    by derivative-magnitude thresholds at 1e-8. Distinct roots closer than
    the cluster radius would be merged; at desk scale this is acceptable.
    """
    if psi1.is_zero:
        raise ZeroPolynomial("psi1 is the zero polynomial")
    if psi1.degree == 0:
        return []
    roots = list(qr_eigenvalues(companion_matrix(psi1)))
    scale = _root_scale(psi1)

    clusters: list[list[complex]] = []
    for r in roots:
        for cluster in clusters:
            if abs(r - cluster[0]) <= CLUSTER_TOL * max(1.0, abs(cluster[0])):
                cluster.append(r)
                break
        else:
            clusters.append([r])

    results: list[tuple[complex, int]] = []
    for cluster in clusters:
        rep = complex(np.mean(cluster))
        mult = _multiplicity(psi1, rep, scale)
        rep = _polish(psi1, rep, mult)
        mult = _multiplicity(psi1, rep, scale)
        if abs(rep) < 1.0 - BOUNDARY_BAND:
            results.append((rep, mult))
    results.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    return results


def _multiplicity(p: Poly, root: complex, scale: float) -> int:
    for j in range(1, p.degree + 1):
        if abs(poly_derivative_at(p, root, j)) > MULTIPLICITY_TOL * scale:
            return j
    return p.degree


def _polish(p: Poly, root: complex, mult: int, steps: int = 3) -> complex:
    q = p
    for _ in range(mult - 1):
        q = poly_derivative(q)
    dq = poly_derivative(q)
    r = root
    for _ in range(steps):
        denom = poly_eval(dq, r)
        if abs(denom) < 1e-14:
            break
        r = r - poly_eval(q, r) / denom
    return r


def _validate_simple_zero(symbols: SymbolPair, u: complex) -> complex:
    """Gate: |u| < 1, psi1(u) = 0 within tolerance, zero simple. Returns psi1'(u)."""
    if abs(u) >= 1.0 - BOUNDARY_BAND:
        raise OutsideDisk(f"zero must lie strictly inside the disk, |u| = {abs(u)}")
    scale = _root_scale(symbols.psi1)
    if abs(poly_eval(symbols.psi1, u)) > ZERO_TOL * scale:
        raise NotAZero(f"psi1({u}) = {poly_eval(symbols.psi1, u)} is not negligible")
    slope = poly_derivative_at(symbols.psi1, u, 1)
    if abs(slope) <= MULTIPLICITY_TOL * scale:
        raise NotSimple(f"psi1'({u}) = {slope} vanishes: zero is not simple")
    return slope


@dataclass(frozen=True)
class SpectrumResult:
    """Candidate point spectrum at one simple zero of psi1."""

    zero: complex
    eigenvalues: tuple[complex, ...]
    adjoint_eigenvalues: tuple[complex, ...]
    numeric_eigenvalues: tuple[complex, ...] = ()
    pairing_distances: tuple[float, ...] = ()

    @property
    def pairing_max_distance(self) -> float:
        return max(self.pairing_distances, default=0.0)


def formula_spectrum(symbols: SymbolPair, u: complex, kmax: int = 16,
                     truncation: int | None = None) -> SpectrumResult:
    """Closed-form candidates psi0(u) + k psi1'(u), k = 0..kmax, plus the
    conjugate adjoint list; optionally cross-checked against the finite
    section at the given truncation.

    Pairing distances match each numeric eigenvalue to the nearest candidate
    with k extended up to the section dimension, so containment can be read
    off even when kmax is small.
    """
    slope = _validate_simple_zero(symbols, u)
    base = poly_eval(symbols.psi0, u)
    eigenvalues = tuple(base + k * slope for k in range(kmax + 1))
    adjoint = tuple(np.conj(v) for v in eigenvalues)
    numeric: tuple[complex, ...] = ()
    distances: tuple[float, ...] = ()
    if truncation is not None:
        section = truncated_matrix(symbols, truncation)
        numeric = tuple(complex(v) for v in qr_eigenvalues(section.entries))
        extended = [base + k * slope for k in range(max(kmax, truncation) + 1)]
        distances = tuple(
            float(min(abs(e - c) for c in extended)) for e in numeric
        )
    return SpectrumResult(
        zero=complex(u),
        eigenvalues=eigenvalues,
        adjoint_eigenvalues=adjoint,
        numeric_eigenvalues=numeric,
        pairing_distances=distances,
    )


@dataclass(frozen=True)
class TriangularKernelMatrix:
    """Adjoint restricted to span(K_u, ..., K_u^[m]): upper triangular with
    conj(psi0(u) + j psi1'(u)) on the diagonal."""

    base_point: complex
    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=complex)
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def kernel_basis_matrix(symbols: SymbolPair, u: complex, m: int) -> TriangularKernelMatrix:
    """Column j holds the kernel-basis coefficients of the adjoint acting on
    the order-j derivative kernel at u.

    The would-be subdiagonal entries equal conj(psi1(u)); the simple-zero
    gate bounds them, and they are stored as exact zeros.
    """
    _validate_simple_zero(symbols, u)
    if m < 0:
        raise ValueError("kernel-basis order must be non-negative")
    x = np.zeros((m + 1, m + 1), dtype=complex)
    for j in range(m + 1):
        comb = adjoint_on_kernel(symbols, u, j)
        for order, coef in comb.terms:
            if order <= j:
                x[order, j] = coef
            # order == j + 1 carries conj(psi1(u)), negligible by the gate
    return TriangularKernelMatrix(base_point=complex(u), entries=x)


@dataclass(frozen=True)
class EigenfunctionResult:
    """Truncated ODE solution with its membership heuristic."""

    element: HardyElement
    eigenvalue: complex
    flag: str  # "in" | "out" | "inconclusive"
    residual: float
    tail_fraction: float


IN_THRESHOLD = 1e-10
OUT_THRESHOLD = 1e-2


def eigenfunction(symbols: SymbolPair, u: complex, k, truncation_degree: int = 128) -> EigenfunctionResult:
    """Solve psi0 g + psi1 g' = lambda g with lambda = psi0(u) + k psi1'(u).

    Writes g = (z - u)^k * h, with h solving psi1 h' = (lambda - psi0 -
    k * deflated_psi1) h, h(0) = 1, by coefficient recurrence around 0. A
    non-integer k is accepted as a trial exponent (binomial series for the
    front factor, u != 0 required); the candidate is then generally outside
    the space, which is what the tail flag detects.

    Flag thresholds on the tail-energy fraction past N/2: "in" below 1e-10,
    "out" above 1e-2, "inconclusive" between.
    """
    slope = _validate_simple_zero(symbols, u)
    lam = poly_eval(symbols.psi0, u) + k * slope
    deflated, _ = divide_linear(symbols.psi1, u)
    q = Poly.from_coeffs([lam]) - symbols.psi0 - deflated.scale(k)

    n = truncation_degree
    h = _solve_first_order_series(symbols.psi1, deflated, q, u, n)

    is_integer = isinstance(k, int) or (
        isinstance(k, float) and k.is_integer() and k >= 0
    )
    if is_integer:
        factor = poly_pow(Poly.from_coeffs([-u, 1.0]), int(k))
        front = np.zeros(n + 1, dtype=complex)
        for i, a in enumerate(factor.coeffs[: n + 1]):
            front[i] = a
    else:
        if abs(u) <= 1e-12:
            raise ValueError("non-integer exponent at u = 0 has no single-valued series")
        front = _binomial_front(u, k, n)

    g = np.convolve(front, h)[: n + 1]
    if np.max(np.abs(g)) > OVERFLOW_GUARD:
        raise SeriesDivergence("eigenfunction coefficients exceeded the overflow guard")

    total = float(np.sum(np.abs(g) ** 2))
    tail = float(np.sum(np.abs(g[n // 2 + 1 :]) ** 2))
    fraction = tail / total if total > 0 else 0.0
    if fraction <= IN_THRESHOLD:
        flag = "in"
    elif fraction >= OUT_THRESHOLD:
        flag = "out"
    else:
        flag = "inconclusive"

    residual = _ode_residual(symbols, g, lam)
    return EigenfunctionResult(
        element=HardyElement(g),
        eigenvalue=complex(lam),
        flag=flag,
        residual=residual,
        tail_fraction=fraction,
    )


def _solve_first_order_series(psi1: Poly, deflated: Poly, q: Poly, u: complex,
                              truncation_degree: int) -> np.ndarray:
    """Power-series solution of psi1 h' = q h, h(0) = 1, around the origin."""
    n = truncation_degree
    h = np.zeros(n + 1, dtype=complex)
    h[0] = 1.0
    if abs(poly_eval(psi1, 0.0)) > 1e-12:
        s = psi1.coeffs
        qq = q.coeffs
        for m in range(n):
            acc = 0j
            for i, qi in enumerate(qq):
                if i > m:
                    break
                acc += qi * h[m - i]
            for i in range(1, len(s)):
                if i > m:
                    break
                acc -= s[i] * (m + 1 - i) * h[m + 1 - i]
            h[m + 1] = acc / (s[0] * (m + 1))
            if abs(h[m + 1]) > OVERFLOW_GUARD:
                raise SeriesDivergence("series coefficients exceeded the overflow guard")
        return h
    if abs(u) > 1e-12:
        raise SeriesDivergence(
            "psi1 vanishes at the origin while the queried zero is elsewhere; "
            "no series expansion at 0"
        )
    # zero at the origin: psi1 = z * deflated, q(0) = 0 by construction
    t = deflated.coeffs
    qq = q.coeffs
    for m in range(1, n + 1):
        acc = 0j
        for i in range(1, len(qq)):
            if i > m:
                break
            acc += qq[i] * h[m - i]
        for i in range(1, len(t)):
            if i > m:
                break
            acc -= t[i] * (m - i) * h[m - i]
        denom = t[0] * m - q.coefficient(0)
        h[m] = acc / denom
        if abs(h[m]) > OVERFLOW_GUARD:
            raise SeriesDivergence("series coefficients exceeded the overflow guard")
    return h


def _binomial_front(u: complex, k, truncation_degree: int) -> np.ndarray:
    """Series of (z - u)^k = (-u)^k (1 - z/u)^k for non-integer exponent."""
    n = truncation_degree
    out = np.zeros(n + 1, dtype=complex)
    lead = cmath.exp(k * cmath.log(-u))
    term = complex(lead)
    out[0] = term
    inv_u = 1.0 / u
    for m in range(n):
        # (1 - w)^k ratio: b_{m+1} / b_m = -(k - m) / (m + 1), w = z/u
        term *= -(k - m) / (m + 1) * inv_u
        out[m + 1] = term
        if abs(term) > OVERFLOW_GUARD:
            raise SeriesDivergence("front-factor series exceeded the overflow guard")
    return out


def _ode_residual(symbols: SymbolPair, g: np.ndarray, lam: complex) -> float:
    """norm of (psi0 g + psi1 g' - lam g) on rows unaffected by truncation."""
    n = len(g) - 1
    psi0 = np.array(symbols.psi0.coeffs, dtype=complex)
    psi1 = np.array(symbols.psi1.coeffs, dtype=complex)
    dg = np.arange(1, n + 1) * g[1:]
    image = np.convolve(psi0, g)
    image2 = np.convolve(psi1, dg) if n >= 1 else np.zeros(1, dtype=complex)
    width = max(len(image), len(image2), n + 1)
    full = np.zeros(width, dtype=complex)
    full[: len(image)] += image
    full[: len(image2)] += image2
    full[: n + 1] -= lam * g
    return float(np.linalg.norm(full[:n]))


def truncated_eigenvalues(matrix) -> np.ndarray:
    """Eigenvalues of a finite section (or raw square array), ordered by
    (real, imaginary); NonConvergence carries any partial results."""
    entries = matrix.entries if isinstance(matrix, OperatorMatrix) else np.asarray(matrix)
    return qr_eigenvalues(entries)
