"""Dense complex eigenvalues: Householder Hessenberg reduction followed by
explicitly shifted QR with Wilkinson shifts and deflation.

Single-shift complex QR is adequate here (no real-arithmetic double-shift
needed); an exceptional ad-hoc shift breaks the rare limit cycle. The same
engine serves finite-section spectra and companion-matrix root finding.
"""

from __future__ import annotations

import numpy as np

from .errors import NonConvergence, ZeroPolynomial
from .poly import Poly

_EPS = float(np.finfo(float).eps)


def hessenberg(a: np.ndarray) -> np.ndarray:
    """Unitarily similar upper Hessenberg form of a square complex matrix."""
    h = np.array(a, dtype=complex)
    n = h.shape[0]
    if h.ndim != 2 or h.shape[1] != n:
        raise ValueError("matrix must be square")
    for k in range(n - 2):
        x = h[k + 1:, k].copy()
        if np.linalg.norm(x[1:]) == 0.0:
            continue
        norm_x = np.linalg.norm(x)
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x
        v[0] += phase * norm_x
        v /= np.linalg.norm(v)
        # two-sided reflector application, similarity preserved
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h


def _wilkinson_shift(h: np.ndarray, hi: int) -> complex:
    """Eigenvalue of the trailing 2x2 block closest to the corner entry."""
    a, b = h[hi - 1, hi - 1], h[hi - 1, hi]
    c, d = h[hi, hi - 1], h[hi, hi]
    tr = a + d
    disc = np.sqrt((a - d) ** 2 + 4.0 * b * c + 0j)
    mu1 = (tr + disc) / 2.0
    mu2 = (tr - disc) / 2.0
    return mu1 if abs(mu1 - d) <= abs(mu2 - d) else mu2


def _qr_step(h: np.ndarray, lo: int, hi: int, shift: complex) -> None:
    """One explicit single-shift QR sweep on the active block, in place."""
    idx = np.arange(lo, hi + 1)
    h[idx, idx] -= shift
    rotations = []
    for i in range(lo, hi):
        a, b = h[i, i], h[i + 1, i]
        d = np.hypot(abs(a), abs(b))
        if d == 0.0:
            rotations.append(None)
            continue
        rot = np.array(
            [[np.conj(a) / d, np.conj(b) / d], [-b / d, a / d]], dtype=complex
        )
        h[i : i + 2, i:] = rot @ h[i : i + 2, i:]
        rotations.append(rot)
    for i, rot in zip(range(lo, hi), rotations):
        if rot is None:
            continue
        h[: min(i + 2, hi) + 1, i : i + 2] = h[: min(i + 2, hi) + 1, i : i + 2] @ rot.conj().T
    h[idx, idx] += shift


def qr_eigenvalues(a: np.ndarray, iteration_cap: int | None = None) -> np.ndarray:
    """All eigenvalues, ordered lexicographically by (real, imaginary).

    Raises NonConvergence (with the partially deflated set attached) when the
    iteration cap — default 100 * dim — is exhausted.
    """
    h = hessenberg(a)
    n = h.shape[0]
    if iteration_cap is None:
        iteration_cap = 100 * n
    scale = np.linalg.norm(h)
    eigs: list[complex] = []
    hi = n - 1
    iterations = 0
    stalled = 0
    while hi >= 0:
        # deflate negligible subdiagonals
        for i in range(hi, 0, -1):
            s = abs(h[i - 1, i - 1]) + abs(h[i, i])
            if s == 0.0:
                s = scale if scale > 0 else 1.0
            if abs(h[i, i - 1]) <= _EPS * s:
                h[i, i - 1] = 0.0
        if hi == 0 or h[hi, hi - 1] == 0.0:
            eigs.append(complex(h[hi, hi]))
            hi -= 1
            stalled = 0
            continue
        lo = hi
        while lo > 0 and h[lo, lo - 1] != 0.0:
            lo -= 1
        if hi - lo == 1:
            # solve the 2x2 block directly
            a11, a12 = h[lo, lo], h[lo, hi]
            a21, a22 = h[hi, lo], h[hi, hi]
            tr = a11 + a22
            disc = np.sqrt((a11 - a22) ** 2 + 4.0 * a12 * a21 + 0j)
            eigs.append(complex((tr + disc) / 2.0))
            eigs.append(complex((tr - disc) / 2.0))
            hi -= 2
            stalled = 0
            continue
        if iterations >= iteration_cap:
            raise NonConvergence(
                f"QR iteration cap {iteration_cap} reached with {hi + 1} eigenvalues pending",
                partial=eigs,
            )
        if stalled > 0 and stalled % 10 == 0:
            shift = h[hi, hi] + 0.75 * abs(h[hi, hi - 1])
        else:
            shift = _wilkinson_shift(h, hi)
        _qr_step(h, lo, hi, shift)
        iterations += 1
        stalled += 1
    out = np.array(eigs, dtype=complex)
    order = np.lexsort((out.imag, out.real))
    return out[order]


def companion_matrix(p: Poly) -> np.ndarray:
    """Frobenius companion matrix whose eigenvalues are the roots of p."""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no companion matrix")
    if p.degree < 1:
        raise ValueError("companion matrix requires degree >= 1")
    d = p.degree
    lead = p.coeffs[-1]
    comp = np.zeros((d, d), dtype=complex)
    for i in range(1, d):
        comp[i, i - 1] = 1.0
    comp[:, -1] = [-p.coeffs[k] / lead for k in range(d)]
    return comp
