"""First-order differential expressions psi0*f + psi1*f' and their adjoints.

The expression acts on polynomials by exact coefficient arithmetic. Finite
sections live in the orthonormal monomial basis, where the matrix adjoint is
the conjugate transpose. Two adjoint routes are provided:

* ``adjoint_symbols`` — the closed-form adjoint for the coupled symbol family
  psi0 = a + b z, psi1 = d + c z + b z^2, which is again a first-order
  expression with symbols (conj(a) + conj(d) z, conj(b) + conj(c) z +
  conj(d) z^2).
* ``adjoint_on_kernel`` — the action of the adjoint on derivative kernels,
  valid for arbitrary polynomial symbols:

      E* K_w^[m] = conj(psi0^(m)(w)) K_w
                   + sum_{j=1..m} [C(m,j) conj(psi0^(m-j)(w))
                                   + C(m,j-1) conj(psi1^(m-j+1)(w))] K_w^[j]
                   + conj(psi1(w)) K_w^[m+1]
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import FamilyMismatch, OutsideDisk
from .hardy import HardyElement, KernelSpec, kernel_coefficients
from .poly import Poly, poly_derivative, poly_derivative_at

FAMILY_TOL = 1e-12


@dataclass(frozen=True)
class SymbolPair:
    """The pair (psi0, psi1) defining the expression f -> psi0 f + psi1 f'."""

    psi0: Poly
    psi1: Poly

    @staticmethod
    def from_coeffs(psi0, psi1) -> "SymbolPair":
        return SymbolPair(Poly.from_coeffs(psi0), Poly.from_coeffs(psi1))


@dataclass(frozen=True)
class OperatorMatrix:
    """Finite section of an operator in the monomial basis.

    ``entries[i, j]`` is the coefficient of z^i in the image of z^j. The
    spill report counts coefficients of degree > N discarded by the
    truncation and their largest modulus.
    """

    entries: np.ndarray
    spill_count: int = 0
    spill_max: float = 0.0
    basis: str = "monomial"

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("operator matrix must be square")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class KernelCombination:
    """Finite combination sum coeff_j * K_w^[order_j] at one base point."""

    base_point: complex
    terms: tuple[tuple[int, complex], ...] = field(default_factory=tuple)

    def __post_init__(self):
        orders = [o for o, _ in self.terms]
        if len(set(orders)) != len(orders) or any(o < 0 for o in orders):
            raise ValueError("term orders must be distinct and non-negative")
        object.__setattr__(self, "terms", tuple(sorted(self.terms)))


def apply(symbols: SymbolPair, f: Poly) -> Poly:
    """psi0*f + psi1*f' by exact polynomial arithmetic."""
    return symbols.psi0 * f + symbols.psi1 * poly_derivative(f)


def truncated_matrix(symbols: SymbolPair, truncation_degree: int) -> OperatorMatrix:
    """Finite section at degree N: column j holds the image of z^j, degrees
    above N discarded and reported as spill."""
    if truncation_degree < 0:
        raise ValueError("truncation degree must be non-negative")
    n = truncation_degree + 1
    entries = np.zeros((n, n), dtype=complex)
    spill_count = 0
    spill_max = 0.0
    monomial = [0j] * n
    for j in range(n):
        monomial[j] = 1.0
        image = apply(symbols, Poly.from_coeffs(monomial[: j + 1]))
        monomial[j] = 0j
        for k, a in enumerate(image.coeffs):
            if k < n:
                entries[k, j] = a
            elif a != 0:
                spill_count += 1
                spill_max = max(spill_max, abs(a))
    return OperatorMatrix(entries, spill_count=spill_count, spill_max=spill_max)


def family_parameters(symbols: SymbolPair, tol: float = FAMILY_TOL) -> tuple[complex, complex, complex, complex]:
    """Extract (a, b, c, d) from psi0 = a + b z, psi1 = d + c z + b z^2.

    Raises FamilyMismatch when the degrees exceed (1, 2) or the quadratic
    coefficient of psi1 differs from the linear coefficient of psi0.
    """
    if symbols.psi0.degree > 1 or symbols.psi1.degree > 2:
        raise FamilyMismatch(
            f"degrees ({symbols.psi0.degree}, {symbols.psi1.degree}) exceed the (1, 2) family bounds"
        )
    a = symbols.psi0.coefficient(0)
    b = symbols.psi0.coefficient(1)
    d = symbols.psi1.coefficient(0)
    c = symbols.psi1.coefficient(1)
    b1 = symbols.psi1.coefficient(2)
    if abs(b1 - b) > tol:
        raise FamilyMismatch(
            f"coupling violated: quadratic coefficient of psi1 is {b1}, linear coefficient of psi0 is {b}"
        )
    return a, b, c, d


def adjoint_symbols(symbols: SymbolPair) -> SymbolPair:
    """Closed-form adjoint symbols for the coupled family (see module doc)."""
    a, b, c, d = family_parameters(symbols)
    return SymbolPair(
        Poly.from_coeffs([np.conj(a), np.conj(d)]),
        Poly.from_coeffs([np.conj(b), np.conj(c), np.conj(d)]),
    )


def numeric_adjoint_matrix(symbols: SymbolPair, truncation_degree: int) -> OperatorMatrix:
    """Conjugate-transpose finite section, usable for any polynomial symbols.

    Labeled numeric: outside the coupled family no symbol-level adjoint
    formula is available, only the truncation's matrix adjoint.
    """
    m = truncated_matrix(symbols, truncation_degree)
    return OperatorMatrix(m.entries.conj().T, spill_count=m.spill_count, spill_max=m.spill_max)


def adjoint_on_kernel(symbols: SymbolPair, w: complex, m: int = 0) -> KernelCombination:
    """Adjoint action on the order-m derivative kernel at w (module doc).

    Valid for polynomial symbols of any degree. Terms whose coefficient is
    exactly zero are dropped, so zero symbols yield the empty combination.
    """
    if abs(w) >= 1.0:
        raise OutsideDisk(f"kernel point must satisfy |w| < 1, got |w| = {abs(w)}")
    if m < 0:
        raise ValueError("derivative order must be non-negative")
    psi0, psi1 = symbols.psi0, symbols.psi1
    terms: list[tuple[int, complex]] = []

    coef0 = np.conj(poly_derivative_at(psi0, w, m))
    if coef0 != 0:
        terms.append((0, complex(coef0)))
    for j in range(1, m + 1):
        coef = np.conj(
            math.comb(m, j) * poly_derivative_at(psi0, w, m - j)
            + math.comb(m, j - 1) * poly_derivative_at(psi1, w, m - j + 1)
        )
        if coef != 0:
            terms.append((j, complex(coef)))
    top = np.conj(psi1(w))
    if top != 0:
        terms.append((m + 1, complex(top)))
    return KernelCombination(w, tuple(terms))


def expand_combination(comb: KernelCombination, truncation_degree: int) -> HardyElement:
    """Materialize a kernel combination as a truncated coefficient vector."""
    vec = np.zeros(truncation_degree + 1, dtype=complex)
    for order, coef in comb.terms:
        if order > truncation_degree:
            continue
        vec += coef * kernel_coefficients(KernelSpec(comb.base_point, order), truncation_degree).coeffs
    return HardyElement(vec)
