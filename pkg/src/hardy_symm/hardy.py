"""Coefficient-space model of the Hardy space on the unit disk.

A function f(z) = sum a_n z^n with square-summable Taylor coefficients is
represented by its truncation to degree N. The monomials are an orthonormal
basis, so the boundary-integral inner product becomes the plain l2 sum
``<f, g> = sum a_n * conj(b_n)`` — exact for polynomials, no quadrature.

Derivative-reproducing kernels: the element with coefficients
``m! * C(n, m) * conj(z)^(n-m)`` (0 for n < m) reproduces the m-th derivative,
``<f, kernel(z, m)> = f^(m)(z)``. Binomial factors use the multiplicative
recurrence in floating point, adequate for n up to 1e4.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutsideDisk
from .poly import Poly


@dataclass(frozen=True)
class KernelSpec:
    """Evaluation point and derivative order of a reproducing kernel."""

    z: complex
    m: int = 0

    def __post_init__(self):
        if abs(self.z) >= 1.0:
            raise OutsideDisk(f"kernel point must satisfy |z| < 1, got |z| = {abs(self.z)}")
        if self.m < 0:
            raise ValueError("derivative order must be non-negative")


@dataclass(frozen=True)
class HardyElement:
    """Taylor coefficients a_0..a_N of a disk function, truncated at degree N."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d vector")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def truncation_degree(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def from_poly(p: Poly, truncation_degree: int) -> "HardyElement":
        if p.degree > truncation_degree:
            raise ValueError(
                f"polynomial degree {p.degree} exceeds truncation {truncation_degree}"
            )
        vec = np.zeros(truncation_degree + 1, dtype=complex)
        for k, a in enumerate(p.coeffs):
            vec[k] = a
        return HardyElement(vec)

    @staticmethod
    def monomial(n: int, truncation_degree: int) -> "HardyElement":
        vec = np.zeros(truncation_degree + 1, dtype=complex)
        vec[n] = 1.0
        return HardyElement(vec)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


def inner_product(f: HardyElement, g: HardyElement) -> complex:
    """l2 coefficient pairing, conjugate-linear in the second argument."""
    n = min(len(f.coeffs), len(g.coeffs))
    return complex(np.dot(f.coeffs[:n], np.conj(g.coeffs[:n])))


def kernel_coefficients(spec: KernelSpec, truncation_degree: int) -> HardyElement:
    """Truncated coefficient vector of the order-m derivative kernel at z.

    Coefficient of u^n is ``m! * C(n, m) * conj(z)^(n-m)`` for n >= m and 0
    below, from the binomial expansion of 1/(1-w)^(m+1).
    """
    z, m = spec.z, spec.m
    if truncation_degree < m:
        raise ValueError(f"truncation {truncation_degree} below derivative order {m}")
    vec = np.zeros(truncation_degree + 1, dtype=complex)
    zbar = np.conj(z)
    # factor at n = m: m! * C(m, m) = m!
    factor = 1.0
    for j in range(1, m + 1):
        factor *= j
    power = 1.0 + 0j
    for n in range(m, truncation_degree + 1):
        vec[n] = factor * power
        # C(n+1, m) / C(n, m) = (n+1) / (n+1-m)
        factor *= (n + 1) / (n + 1 - m)
        power *= zbar
    return HardyElement(vec)


def derivative_at(f: HardyElement, z: complex, m: int = 0) -> complex:
    """m-th derivative of f at z via the kernel pairing (same truncation)."""
    if abs(z) >= 1.0:
        raise OutsideDisk(f"evaluation point must satisfy |z| < 1, got |z| = {abs(z)}")
    if m > f.truncation_degree:
        return 0j
    return inner_product(f, kernel_coefficients(KernelSpec(z, m), f.truncation_degree))
