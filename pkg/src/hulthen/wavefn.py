"""Radial eigenfunctions and their normalization.

The bound-state radial function in y = e^{-alpha r} is

    R(r) = N y^{eps} (1 - y)^{nu} 2F1(-n, n + 2(eps + nu); 1 + 2 eps; y),

a degree-n polynomial times the boundary factors.  The polynomial part is
proportional to the Jacobi polynomial P_n^{(2 eps, 2 nu - 1)}(1 - 2y), which
gives the closed-form normalization through Beta integrals.
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import quad
from scipy.special import betaln, gammaln

from .errors import (
    GridTooCoarseError,
    InvalidCError,
    NodeProximityError,
    NotBoundError,
    ParameterPoleError,
    QuadratureFailure,
)
from .model import PhysicalParams, QuantumNumbers, effective_V, warn_if_outside_validity
from .spectrum import energy_value, epsilon_tilde


def pochhammer(y: float, k: int) -> float:
    """Rising factorial (y)_k = y (y+1) ... (y+k-1); empty product for k = 0."""
    if int(k) != k or k < 0:
        raise ValueError("k must be an integer >= 0")
    out = 1.0
    for i in range(int(k)):
        out *= y + i
    return out


def hyp2f1_truncated(A: float, B: float, C: float, y: float) -> float:
    """2F1(A, B; C; y) for A = -n: the finite sum of n + 1 terms.

    The term recurrence t_{k+1} = t_k (A+k)(B+k) y /((C+k)(k+1)) is run in
    exact rational arithmetic (float inputs are exact rationals), so the
    heavily cancelling alternating sum is correct to the final rounding.
    """
    if int(A) != A or A > 0:
        raise ValueError("A must be a nonpositive integer -n")
    if int(C) == C and C <= 0:
        raise InvalidCError(f"C = {C} is a nonpositive integer")
    n = int(-A)
    Bf, Cf, yf = Fraction(B), Fraction(C), Fraction(y)
    term = Fraction(1)
    total = Fraction(1)
    for k in range(n):
        term *= Fraction(-n + k) * (Bf + k) * yf / ((Cf + k) * (k + 1))
        total += term
    return float(total)


def jacobi_P(n: int, A: float, B: float, x: float) -> float:
    """Jacobi polynomial P_n^{(A,B)}(x) via the finite double-factor expansion

        G(n+A+1) G(n+B+1) sum_p ((x-1)/2)^{n-p} ((x+1)/2)^p
                               / [p! G(n+A-p+1) G(B+p+1) (n-p)!].

    The Gamma ratios reduce to finite rising products, so the sum is done in
    exact rational arithmetic; the would-be Gamma poles cancel identically.
    """
    if int(n) != n or n < 0:
        raise ValueError("n must be an integer >= 0")
    Af, Bf, xf = Fraction(A), Fraction(B), Fraction(x)
    half_m = (xf - 1) / 2
    half_p = (xf + 1) / 2
    total = Fraction(0)
    for p in range(n + 1):
        num = Fraction(1)
        for j in range(p):  # G(n+A+1)/G(n+A-p+1)
            num *= n + Af - j
        for j in range(1, n - p + 1):  # G(n+B+1)/G(B+p+1)
            num *= Bf + p + j
        total += (num * half_m ** (n - p) * half_p**p
                  / (math.factorial(p) * math.factorial(n - p)))
    return float(total)


def _series_coeffs(n: int, B: float, C: float) -> tuple[float, ...]:
    """Coefficients of the degree-n polynomial 2F1(-n, B; C; y)."""
    coeffs = [1.0]
    for k in range(n):
        coeffs.append(coeffs[-1] * (-n + k) * (B + k) / ((C + k) * (k + 1.0)))
    return tuple(coeffs)


@dataclass(frozen=True)
class RadialWavefunction:
    """Evaluable bound-state radial function; norm = 1.0 means unnormalized."""

    n: int
    l: int
    D: int
    alpha: float
    eps_tilde: float
    nu: float
    coeffs: tuple[float, ...]
    norm: float

    def poly(self, y):
        """Polynomial part F(y) = 2F1(-n, n + 2(eps+nu); 1 + 2 eps; y)."""
        y = np.asarray(y, dtype=float)
        out = np.zeros_like(y)
        for c in reversed(self.coeffs):
            out = out * y + c
        return out

    def poly_deriv(self, y, order: int = 1):
        y = np.asarray(y, dtype=float)
        cs = self.coeffs
        for _ in range(order):
            cs = tuple(k * c for k, c in enumerate(cs))[1:] or (0.0,)
        out = np.zeros_like(y)
        for c in reversed(cs):
            out = out * y + c
        return out

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0):
            raise ValueError("r must be strictly positive")
        y = np.exp(-self.alpha * r)
        return self.norm * y**self.eps_tilde * (1.0 - y) ** self.nu * self.poly(y)

    def log_derivative(self, r: float) -> tuple[float, float]:
        """phi = R'/R and phi' at r, from analytic derivatives of the factors."""
        y = math.exp(-self.alpha * r)
        f = float(self.poly(y))
        scale = sum(abs(c) for c in self.coeffs)
        if abs(f) < 1e-10 * scale:
            raise NodeProximityError(f"R(r) too close to a node at r = {r}")
        f1 = float(self.poly_deriv(y, 1))
        f2 = float(self.poly_deriv(y, 2))
        a = self.alpha
        phi = -a * (self.eps_tilde - self.nu * y / (1.0 - y) + y * f1 / f)
        dphi_dy = a * (self.nu / (1.0 - y) ** 2 - (f1 + y * f2) / f + y * (f1 / f) ** 2)
        return phi, -a * y * dphi_dy


def radial_wavefunction(p: PhysicalParams, q: QuantumNumbers,
                        normalized: bool = True) -> RadialWavefunction:
    """Build the (n, l) bound-state radial function; NotBoundError if eps_tilde <= 0."""
    warn_if_outside_validity(p, q)
    eps = epsilon_tilde(p, q)
    if eps <= 0:
        raise NotBoundError(
            f"state n={q.n}, l={q.l}, D={p.D} at alpha={p.alpha} is not bound"
        )
    nu = q.l + (p.D - 1) / 2.0
    coeffs = _series_coeffs(q.n, q.n + 2.0 * (eps + nu), 1.0 + 2.0 * eps)
    wf = RadialWavefunction(n=q.n, l=q.l, D=p.D, alpha=p.alpha,
                            eps_tilde=eps, nu=nu, coeffs=coeffs, norm=1.0)
    if normalized:
        wf = replace(wf, norm=normalization_closed(p, q))
    return wf


def radial_R(p: PhysicalParams, q: QuantumNumbers, r, normalized: bool = True):
    """Evaluate R(r); normalized=False uses N = 1."""
    return radial_wavefunction(p, q, normalized=normalized)(r)


def normalization_closed(p: PhysicalParams, q: QuantumNumbers) -> float:
    """Closed-form normalization constant via the Jacobi expansion + Beta integrals.

    With A = 2 eps, the polynomial part equals c_n P_n^{(A, 2 nu - 1)}(1 - 2y),
    c_n = n! G(1+A)/G(n+1+A), and

        int_0^inf R^2 dr = (c_n^2/alpha) sum_{p,q} (-1)^{p+q} T_p T_q
                           B(2 eps + 2n - p - q, 2 nu + 1 + p + q),
        T_p = G(n+A+1) G(n+2 nu) / [p! G(n+A-p+1) G(2 nu + p) (n-p)!].
    """
    eps = epsilon_tilde(p, q)
    if eps <= 0:
        raise NotBoundError("normalization requested for an unbound state")
    n = q.n
    nu = q.l + (p.D - 1) / 2.0
    A = 2.0 * eps
    log_top = gammaln(n + A + 1.0) + gammaln(n + 2.0 * nu)
    if not np.isfinite(log_top):
        raise ParameterPoleError("Gamma pole in normalization factors")
    log_t = [
        log_top - (gammaln(pp + 1.0) + gammaln(n + A - pp + 1.0)
                   + gammaln(2.0 * nu + pp) + gammaln(n - pp + 1.0))
        for pp in range(n + 1)
    ]
    total = 0.0
    for pp in range(n + 1):
        for qq in range(n + 1):
            total += (-1.0) ** (pp + qq) * math.exp(
                log_t[pp] + log_t[qq]
                + betaln(A + 2.0 * n - pp - qq, 2.0 * nu + 1.0 + pp + qq)
            )
    log_cn = gammaln(n + 1.0) + gammaln(1.0 + A) - gammaln(n + 1.0 + A)
    return math.sqrt(p.alpha / total) / math.exp(log_cn)


def normalization_numeric(p: PhysicalParams, q: QuantumNumbers,
                          tol: float = 1e-12) -> float:
    """Normalization from adaptive quadrature of R^2 in y = e^{-alpha r}.

    int R^2 dr = (1/alpha) int_0^1 y^{2 eps - 1} (1 - y)^{2 nu} F(y)^2 dy;
    the y -> 0 endpoint is an integrable algebraic singularity.
    """
    wf = radial_wavefunction(p, q, normalized=False)
    e2m1 = 2.0 * wf.eps_tilde - 1.0

    def integrand(y):
        return y**e2m1 * (1.0 - y) ** (2.0 * wf.nu) * float(wf.poly(y)) ** 2

    val, err, info, *rest = quad(integrand, 0.0, 1.0, epsabs=tol, epsrel=tol,
                                 limit=300, full_output=True)
    if rest or val <= 0:
        raise QuadratureFailure("normalization quadrature did not converge")
    return math.sqrt(p.alpha / val)


def count_nodes(p: PhysicalParams, q: QuantumNumbers, grid=None) -> int:
    """Strict sign changes of R on (0, inf), by a refining log-spaced scan."""
    wf = radial_wavefunction(p, q, normalized=False)

    def scan(r):
        sign = np.sign(wf.poly(np.exp(-p.alpha * r)))  # positive prefactors dropped
        sign = sign[sign != 0]
        return int(np.sum(sign[1:] != sign[:-1]))

    if grid is not None:
        return scan(np.asarray(grid, dtype=float))

    lo, hi = 1e-4 / p.alpha, 80.0 / p.alpha
    npts = 2048
    counts = [scan(np.geomspace(lo, hi, npts))]
    for _ in range(8):
        npts *= 2
        counts.append(scan(np.geomspace(lo, hi, npts)))
        if len(counts) >= 3 and counts[-1] == counts[-2] == counts[-3]:
            return counts[-1]
    raise GridTooCoarseError("node count did not stabilize under refinement")


def riccati_residual(p: PhysicalParams, q: QuantumNumbers, r: float) -> float:
    """|phi' + phi^2 + (2 mu/hbar^2)(E - V_approx)| with analytic derivatives.

    Zero (to roundoff) because R solves the radial equation with the
    approximated centrifugal term; with the exact term it measures the
    approximation error instead.
    """
    wf = radial_wavefunction(p, q, normalized=False)
    phi, dphi = wf.log_derivative(r)
    E = energy_value(p, q)
    v = float(effective_V(p, q, r, mode="approx"))
    return abs(dphi + phi**2 + (2.0 * p.mu / p.hbar**2) * (E - v))
