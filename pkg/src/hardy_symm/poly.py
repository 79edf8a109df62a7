"""Complex polynomials in one variable, ascending coefficient order.

All symbol manipulation in the package runs through this module. Polynomials
are canonical: trailing coefficients of modulus <= TRIM_TOL are dropped, so
``degree`` is reliable after arithmetic. The zero polynomial is stored as the
single coefficient ``(0j,)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

TRIM_TOL = 1e-13


@dataclass(frozen=True)
class Poly:
    """Immutable complex polynomial ``sum(coeffs[k] * z**k)``."""

    coeffs: tuple[complex, ...]

    @staticmethod
    def from_coeffs(coeffs) -> "Poly":
        """Build a canonical polynomial, trimming negligible trailing terms."""
        c = [complex(x) for x in coeffs]
        while len(c) > 1 and abs(c[-1]) <= TRIM_TOL:
            c.pop()
        if not c or (len(c) == 1 and abs(c[0]) <= TRIM_TOL):
            c = [0j]
        return Poly(tuple(c))

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0j,)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return -1 if self.is_zero else len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        return poly_eval(self, z)

    def coefficient(self, k: int) -> complex:
        """Coefficient of z**k (0 beyond the stored length)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0j

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.from_coeffs(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return ZERO
        out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly.from_coeffs(out)

    def scale(self, s: complex) -> "Poly":
        return Poly.from_coeffs([s * a for a in self.coeffs])

    def conj_coeffs(self) -> "Poly":
        """Polynomial with conjugated coefficients, i.e. z -> conj(p(conj(z)))."""
        return Poly.from_coeffs([a.conjugate() for a in self.coeffs])


ZERO = Poly((0j,))
ONE = Poly((1 + 0j,))


def poly_eval(p: Poly, z: complex) -> complex:
    """Horner evaluation of p at z."""
    acc = 0j
    for a in reversed(p.coeffs):
        acc = acc * z + a
    return acc


def poly_derivative(p: Poly) -> Poly:
    """Term-by-term derivative; the derivative of a constant is zero."""
    if p.degree <= 0:
        return ZERO
    return Poly.from_coeffs([k * a for k, a in enumerate(p.coeffs)][1:])


def poly_derivative_at(p: Poly, z: complex, m: int) -> complex:
    """m-th derivative of p at z by repeated Horner differentiation."""
    q = p
    for _ in range(m):
        q = poly_derivative(q)
    return poly_eval(q, z)


def poly_pow(p: Poly, n: int) -> Poly:
    out = ONE
    for _ in range(n):
        out = out * p
    return out


def divide_linear(p: Poly, root: complex) -> tuple[Poly, complex]:
    """Synthetic division of p by (z - root): returns (quotient, remainder)."""
    if p.is_zero:
        return ZERO, 0j
    q = [0j] * max(len(p.coeffs) - 1, 1)
    acc = 0j
    for k in range(len(p.coeffs) - 1, 0, -1):
        acc = acc * root + p.coeffs[k]
        q[k - 1] = acc
    rem = acc * root + p.coeffs[0]
    return Poly.from_coeffs(q), rem


_TERM_RE = re.compile(
    r"""^
    (?P<coef>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?   # optional magnitude
    (?P<imag>i)?                                      # optional imaginary unit
    (?:(?(coef)\*?|\*?)(?P<zpart>z(?:\^(?P<power>\d+))?))?  # optional z^k
    $""",
    re.VERBOSE,
)


def parse_poly(text: str) -> Poly:
    """Parse strings like ``1+2i*z^2`` into a polynomial.

    Terms are separated by top-level + and -; each term is a real or pure
    imaginary literal, optionally times z or z^k (e.g. ``2``, ``3i``, ``z``,
    ``-1.5*z^3``, ``2i*z``). Full complex coefficients arise by summing terms.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    # split into signed terms
    terms: list[tuple[int, str]] = []
    sign, start = 1, 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        start = 1
    cur = []
    for ch in s[start:]:
        if ch in "+-" and cur and cur[-1] not in "eE":
            terms.append((sign, "".join(cur)))
            sign = -1 if ch == "-" else 1
            cur = []
        else:
            cur.append(ch)
    if not cur:
        raise ValueError(f"dangling sign in polynomial string: {text!r}")
    terms.append((sign, "".join(cur)))

    coeffs: dict[int, complex] = {}
    for sgn, term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coef") is None and m.group("imag") is None and m.group("zpart") is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        mag = float(m.group("coef")) if m.group("coef") else 1.0
        value = mag * 1j if m.group("imag") else complex(mag)
        power = 0
        if m.group("zpart"):
            power = int(m.group("power")) if m.group("power") else 1
        coeffs[power] = coeffs.get(power, 0j) + sgn * value
    top = max(coeffs)
    return Poly.from_coeffs([coeffs.get(k, 0j) for k in range(top + 1)])
