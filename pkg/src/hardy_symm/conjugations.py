"""Weighted-composition conjugations on the coefficient model.

Two families:

* ``CAlphaBeta`` — f(z) -> alpha * conj(f(beta * conj(z))) with unimodular
  alpha, beta. In coefficients this is the diagonal anti-linear map
  a_n -> alpha * conj(beta)^n * conj(a_n): degree preserving, exactly
  isometric and involutive.

* ``JBetaLambda`` — f(z) -> beta * kappa(z) * conj(f(conj(phi(z)))) with
  unimodular beta and lambda in the punctured disk, where

      kappa(z) = sqrt(1 - |lambda|^2) / (1 - z * conj(lambda))
      phi(z)   = (conj(lambda) / lambda) * (lambda - z) / (1 - z * conj(lambda))

  In coefficients, conj(f(conj(phi(z)))) = sum conj(a_n) * phi(z)^n, so the
  action is a convolution against powers of the phi series. Finite sections
  carry truncation error that decays geometrically in the truncation degree;
  the calibration helper measures it.

Anti-linear maps are stored as a matrix M with action v -> M @ conj(v); the
composition of two such maps is linear with matrix M1 @ conj(M2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPolynomial
from .hardy import HardyElement
from .poly import Poly, divide_linear, poly_pow
from .diffop import SymbolPair

UNIMODULAR_TOL = 1e-12
DIVISION_TOL = 1e-10


def _check_unimodular(value: complex, name: str) -> complex:
    value = complex(value)
    if abs(abs(value) - 1.0) > UNIMODULAR_TOL:
        raise ValueError(f"{name} must be unimodular, got |{name}| = {abs(value)}")
    return value


@dataclass(frozen=True)
class CAlphaBeta:
    """Diagonal-family conjugation parameters (both unimodular)."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", _check_unimodular(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _check_unimodular(self.beta, "beta"))

    def diagonal(self, truncation_degree: int) -> np.ndarray:
        """The factors alpha * conj(beta)^n, n = 0..N."""
        out = np.empty(truncation_degree + 1, dtype=complex)
        factor = complex(self.alpha)
        bbar = np.conj(self.beta)
        for n in range(truncation_degree + 1):
            out[n] = factor
            factor *= bbar
        return out


@dataclass(frozen=True)
class JBetaLambda:
    """Moebius-family conjugation parameters: |beta| = 1, 0 < |lam| < 1."""

    beta: complex
    lam: complex

    def __post_init__(self):
        object.__setattr__(self, "beta", _check_unimodular(self.beta, "beta"))
        lam = complex(self.lam)
        if not 0.0 < abs(lam) < 1.0:
            raise ValueError(
                f"lambda must lie in the punctured unit disk, got |lambda| = {abs(lam)}"
            )
        object.__setattr__(self, "lam", lam)

    # pointwise weight and self-map, used by identity checks and tests
    def kappa(self, z: complex) -> complex:
        return np.sqrt(1.0 - abs(self.lam) ** 2) / (1.0 - z * np.conj(self.lam))

    def kappa_prime(self, z: complex) -> complex:
        return (
            np.sqrt(1.0 - abs(self.lam) ** 2)
            * np.conj(self.lam)
            / (1.0 - z * np.conj(self.lam)) ** 2
        )

    def phi(self, z: complex) -> complex:
        return (np.conj(self.lam) / self.lam) * (self.lam - z) / (1.0 - z * np.conj(self.lam))

    def phi_prime(self, z: complex) -> complex:
        return (
            -(np.conj(self.lam) / self.lam)
            * (1.0 - abs(self.lam) ** 2)
            / (1.0 - z * np.conj(self.lam)) ** 2
        )

    def kappa_series(self, truncation_degree: int) -> np.ndarray:
        """Coefficients of kappa: sqrt(1-|lam|^2) * conj(lam)^n."""
        root = np.sqrt(1.0 - abs(self.lam) ** 2)
        return root * np.conj(self.lam) ** np.arange(truncation_degree + 1)

    def phi_series(self, truncation_degree: int) -> np.ndarray:
        """Coefficients of phi: conj(lam) at degree 0, then a geometric tail."""
        lam = self.lam
        lbar = np.conj(lam)
        out = np.empty(truncation_degree + 1, dtype=complex)
        out[0] = lbar
        if truncation_degree >= 1:
            head = -(lbar / lam) * (1.0 - abs(lam) ** 2)
            out[1:] = head * lbar ** np.arange(truncation_degree)
        return out


@dataclass(frozen=True)
class AntiLinearMatrix:
    """Matrix M acting anti-linearly: v -> M @ conj(v)."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("anti-linear matrix must be square")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def apply(self, v: np.ndarray) -> np.ndarray:
        return self.entries @ np.conj(v)

    def compose(self, other: "AntiLinearMatrix") -> np.ndarray:
        """Linear matrix of self o other."""
        return self.entries @ np.conj(other.entries)


def apply_c(conj: CAlphaBeta, f: HardyElement) -> HardyElement:
    """Coefficient map a_n -> alpha * conj(beta)^n * conj(a_n)."""
    return HardyElement(conj.diagonal(f.truncation_degree) * np.conj(f.coeffs))


def c_matrix(conj: CAlphaBeta, truncation_degree: int) -> AntiLinearMatrix:
    return AntiLinearMatrix(np.diag(conj.diagonal(truncation_degree)))


def _phi_power_columns(conj: JBetaLambda, max_power: int, truncation_degree: int) -> np.ndarray:
    """Columns j = 0..max_power of truncated beta * kappa * phi^j series."""
    n = truncation_degree + 1
    phi = conj.phi_series(truncation_degree)
    kappa = conj.kappa_series(truncation_degree)
    cols = np.zeros((n, max_power + 1), dtype=complex)
    power = np.zeros(n, dtype=complex)
    power[0] = 1.0
    for j in range(max_power + 1):
        cols[:, j] = conj.beta * np.convolve(power, kappa)[:n]
        if j < max_power:
            power = np.convolve(power, phi)[:n]
    return cols


def apply_j(conj: JBetaLambda, f: HardyElement, truncation_degree: int) -> HardyElement:
    """beta * kappa(z) * sum conj(a_n) * phi(z)^n, truncated at N."""
    if truncation_degree < f.truncation_degree:
        raise ValueError("output truncation must not drop below the input's")
    cols = _phi_power_columns(conj, f.truncation_degree, truncation_degree)
    return HardyElement(cols @ np.conj(f.coeffs))


def j_matrix(conj: JBetaLambda, truncation_degree: int) -> AntiLinearMatrix:
    """Finite section of the Moebius-family conjugation (anti-linear action)."""
    return AntiLinearMatrix(_phi_power_columns(conj, truncation_degree, truncation_degree))


def conjugated_symbols_c(conj: CAlphaBeta, symbols: SymbolPair) -> SymbolPair:
    """Symbols of C E C: p_k -> conj(p_k) conj(beta)^k, psi1 additionally * beta."""
    beta = conj.beta
    bbar = np.conj(beta)

    def push(p: Poly, extra: complex) -> Poly:
        return Poly.from_coeffs(
            [extra * np.conj(a) * bbar**k for k, a in enumerate(p.coeffs)]
        )

    return SymbolPair(push(symbols.psi0, 1.0), push(symbols.psi1, beta))


def _compose_conj_phi(conj: JBetaLambda, p: Poly) -> tuple[Poly, int]:
    """conj(p(conj(phi(z)))) as numerator / (1 - z conj(lam))^deg."""
    q = p.conj_coeffs()
    if q.is_zero:
        return Poly.from_coeffs([0]), 0
    d = q.degree
    lam = conj.lam
    c = np.conj(lam) / lam
    lin_num = Poly.from_coeffs([lam, -1.0])          # lambda - z
    lin_den = Poly.from_coeffs([1.0, -np.conj(lam)])  # 1 - z conj(lambda)
    num = Poly.from_coeffs([0])
    for j, coef in enumerate(q.coeffs):
        term = poly_pow(lin_num, j) * poly_pow(lin_den, d - j)
        num = num + term.scale(coef * c**j)
    return num, d


def _divide_out(num: Poly, den_root_factor: Poly, power: int) -> Poly:
    """Divide num by (1 - z conj(lam))^power, raising when a remainder survives."""
    lead = den_root_factor.coefficient(1)
    root = -den_root_factor.coefficient(0) / lead
    scale = max(1.0, max(abs(a) for a in num.coeffs))
    out = num
    for _ in range(power):
        # 1 - z conj(lam) = -conj(lam) (z - 1/conj(lam))
        quotient, rem = divide_linear(out, root)
        if abs(rem) > DIVISION_TOL * scale:
            raise NotPolynomial(
                f"pushforward is genuinely rational: division remainder {abs(rem):.3e}"
            )
        out = quotient.scale(1.0 / lead)
    return out


def conjugated_symbols_j(conj: JBetaLambda, symbols: SymbolPair) -> SymbolPair:
    """Symbols of J E J via exact rational algebra and polynomial division.

    psi1 pushforward: -lam (1 - z conj(lam))^2 conj(psi1(conj(phi z))) /
    (conj(lam) (1 - |lam|^2)); psi0 pushforward adds conj(psi0(conj(phi z)))
    and lam (1 - z conj(lam)) conj(psi1(conj(phi z))) / (1 - |lam|^2).
    Raises NotPolynomial when the surviving denominator does not cancel.
    """
    lam = conj.lam
    one_minus = 1.0 - abs(lam) ** 2
    den = Poly.from_coeffs([1.0, -np.conj(lam)])

    num0, d0 = _compose_conj_phi(conj, symbols.psi0)
    num1, d1 = _compose_conj_phi(conj, symbols.psi1)

    # psi1 pushforward: scale * den^2 * num1 / den^d1
    scaled1 = num1.scale(-lam / (np.conj(lam) * one_minus))
    if d1 <= 2:
        psi1_push = scaled1 * poly_pow(den, 2 - d1)
    else:
        psi1_push = _divide_out(scaled1, den, d1 - 2)

    # psi0 pushforward: num0 / den^d0 + (lam / one_minus) * den * num1 / den^d1
    # over the common denominator den^k, k = max(d0, d1 - 1)
    k = max(d0, d1 - 1, 0)
    total = num0 * poly_pow(den, k - d0)
    total = total + (num1.scale(lam / one_minus) * poly_pow(den, k - (d1 - 1)))
    if k == 0:
        psi0_push = total
    else:
        psi0_push = _divide_out(total, den, k)

    return SymbolPair(psi0_push, psi1_push)


def conjugated_symbols(conj, symbols: SymbolPair) -> SymbolPair:
    """Dispatch on the conjugation family."""
    if isinstance(conj, CAlphaBeta):
        return conjugated_symbols_c(conj, symbols)
    if isinstance(conj, JBetaLambda):
        return conjugated_symbols_j(conj, symbols)
    raise TypeError(f"unsupported conjugation type {type(conj)!r}")


@dataclass(frozen=True)
class AxiomReport:
    """Measured conjugation-axiom residuals on a finite section."""

    anti_linearity: float
    isometry: float
    involution: float
    truncation_degree: int
    test_degree: int


def conjugation_axioms(conj, truncation_degree: int, test_degree: int | None = None,
                       trials: int = 20, seed: int = 7) -> AxiomReport:
    """Residuals of the three conjugation axioms on random low-degree vectors.

    Anti-linearity holds structurally (the action is M @ conj(v), linear in
    conj(v)), so its residual is reported as exactly 0. Isometry and
    involution are measured; for the diagonal family both vanish to rounding,
    for the Moebius family they carry the truncation budget.
    """
    if test_degree is None:
        test_degree = max(truncation_degree // 4, 0)
    if isinstance(conj, CAlphaBeta):
        matrix = c_matrix(conj, truncation_degree)
    elif isinstance(conj, JBetaLambda):
        matrix = j_matrix(conj, truncation_degree)
    elif isinstance(conj, AntiLinearMatrix):
        matrix = conj
    else:
        raise TypeError(f"unsupported conjugation type {type(conj)!r}")

    rng = np.random.default_rng(seed)
    n = matrix.dim
    isometry = 0.0
    involution = 0.0
    for _ in range(trials):
        v = np.zeros(n, dtype=complex)
        k = test_degree + 1
        v[:k] = rng.standard_normal(k) + 1j * rng.standard_normal(k)
        image = matrix.apply(v)
        isometry = max(isometry, abs(np.linalg.norm(image) - np.linalg.norm(v)))
        involution = max(involution, float(np.linalg.norm(matrix.apply(image) - v)))
    return AxiomReport(
        anti_linearity=0.0,
        isometry=isometry,
        involution=involution,
        truncation_degree=truncation_degree,
        test_degree=test_degree,
    )


def involution_residual_curve(conj: JBetaLambda, truncation_degrees, test_degree: int = 8,
                              trials: int = 10, seed: int = 11) -> list[float]:
    """Involution residual at each truncation: the empirical decay budget."""
    return [
        conjugation_axioms(conj, n, test_degree=test_degree, trials=trials, seed=seed).involution
        for n in truncation_degrees
    ]
