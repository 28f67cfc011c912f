"""Improved-quantization-rule engine.

In the variable z = e^{-alpha r}/(1 - e^{-alpha r}) the effective potential is
the upward parabola V(z) = b z^2 + (b - a) z + b c0, so a bound level has two
turning points z_A < z_B and momentum

    k(z) = (sqrt(2 mu b)/hbar) sqrt((z_B - z)(z - z_A)).

The quantization condition, reconstructed to be algebraically equivalent to
the closed-form spectrum, is

    lambda (s2 - s1) = n + nu,    s1 = sqrt(c0 - E/b),  s2 = sqrt(c0 + (a-E)/b),

and the positive action integral is int k dr = pi lambda (s2 - s1 - 1).
The quantum correction Q_c = int k0'(r) phi0/phi0' dr evaluates to
pi (nu - lambda - 1), node-independent as the rule requires.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import (
    CentrifugalFreeError,
    NoClassicalRegionError,
    NoRootError,
    QuadratureFailure,
)
from .model import DerivedParams, PhysicalParams, QuantumNumbers, derive_params
from .spectrum import epsilon_tilde

_QUAD_TOL = 1e-12


def transform_z(alpha: float, r):
    """z = e^{-alpha r}/(1 - e^{-alpha r}); z'(r) = -alpha z (1+z)."""
    if np.any(np.asarray(r) <= 0):
        raise ValueError("r must be strictly positive")
    return 1.0 / np.expm1(alpha * np.asarray(r, dtype=float))


def inverse_z(alpha: float, z):
    """Inverse map r = ln(1 + 1/z)/alpha."""
    if np.any(np.asarray(z) <= 0):
        raise ValueError("z must be strictly positive")
    return np.log1p(1.0 / np.asarray(z, dtype=float)) / alpha


@dataclass(frozen=True)
class TurningPoints:
    """Turning points in z and their r images (z decreases in r: zB <-> rA)."""

    zA: float
    zB: float
    rA: float
    rB: float


def turning_points(p: PhysicalParams, dp: DerivedParams, E: float) -> TurningPoints:
    """Roots of b z^2 + (b - a) z + b c0 = E, with r images attached."""
    if dp.b == 0:
        raise CentrifugalFreeError(
            "b = 0 (l = 0, D = 3): single turning point in z; use the s-wave branch"
        )
    disc = (dp.a - dp.b) ** 2 + 4.0 * dp.b * (E - dp.b * p.c0)
    if disc < 0:
        raise NoClassicalRegionError(f"no classical region at E = {E:g}")
    root = math.sqrt(disc)
    mid = dp.a / (2.0 * dp.b) - 0.5
    zA = mid - root / (2.0 * dp.b)
    zB = mid + root / (2.0 * dp.b)
    rA = float(inverse_z(p.alpha, zB))
    rB = float(inverse_z(p.alpha, zA)) if zA > 0 else math.inf
    return TurningPoints(zA=zA, zB=zB, rA=rA, rB=rB)


def _k_prefactor(p: PhysicalParams, dp: DerivedParams) -> float:
    return math.sqrt(2.0 * p.mu * dp.b) / p.hbar


def momentum_k(p: PhysicalParams, dp: DerivedParams, tp: TurningPoints, z):
    """k(z) between the turning points; zero at both ends."""
    z = np.asarray(z, dtype=float)
    if np.any(z < tp.zA) or np.any(z > tp.zB):
        raise ValueError("z outside the classical region [zA, zB]")
    return _k_prefactor(p, dp) * np.sqrt((tp.zB - z) * (z - tp.zA))


def momentum_k_prime(p: PhysicalParams, dp: DerivedParams, tp: TurningPoints, z):
    """dk/dz = (pref/2) (sqrt((zB-z)/(z-zA)) - sqrt((z-zA)/(zB-z))); singular at the ends."""
    z = np.asarray(z, dtype=float)
    if np.any(z <= tp.zA) or np.any(z >= tp.zB):
        raise ValueError("z outside the open classical region (zA, zB)")
    return 0.5 * _k_prefactor(p, dp) * (
        np.sqrt((tp.zB - z) / (z - tp.zA)) - np.sqrt((z - tp.zA) / (tp.zB - z))
    )


@dataclass(frozen=True)
class GroundLogDeriv:
    """Ground-state log-derivative phi0(z) = c1 z + c2 and its energy.

    c1 = nu alpha > 0 and c2 = -alpha eps0, the sign required for phi0 to solve
    the Riccati equation (the log-derivative of y^eps0 (1-y)^nu).
    e0_tilde = E0 - b c0 is the centrifugal-offset-free ground energy.
    """

    c1: float
    c2: float
    e0_tilde: float
    e0: float

    def __call__(self, z):
        return self.c1 * np.asarray(z, dtype=float) + self.c2


def ground_phi(p: PhysicalParams, dp: DerivedParams) -> GroundLogDeriv:
    """Ground-state (n = 0) log-derivative and energy for the given (l, D)."""
    eps0 = p.mu * p.Z * p.e2 / (p.hbar**2 * dp.nu * p.alpha) - dp.nu / 2.0
    e0_tilde = -(p.hbar**2 * p.alpha**2 / (2.0 * p.mu)) * eps0**2
    return GroundLogDeriv(
        c1=dp.nu * p.alpha,
        c2=-p.alpha * eps0,
        e0_tilde=e0_tilde,
        e0=e0_tilde + dp.b * p.c0,
    )


def _quad(f, lo, hi, tol):
    val, err, info, *rest = quad(f, lo, hi, epsabs=tol, epsrel=tol,
                                 limit=200, full_output=True)
    if rest:
        raise QuadratureFailure(str(rest[0]))
    return val


def quantum_correction(p: PhysicalParams, q: QuantumNumbers,
                       method: str = "closed") -> float:
    """Dimensionless q with Q_c = pi q, from the closed form or the ground-state integral.

    Closed form: q = nu - lambda - 1 (zero for l = 0, D = 3).  The quadrature
    route evaluates int k0'(r) phi0/phi0' dr between the ground turning points
    with the smoothing substitution z = zA + (zB - zA) sin^2(theta).
    """
    dp = derive_params(p, q)
    if dp.b == 0:
        return 0.0
    if method == "closed":
        return dp.nu - dp.lambda_dimless - 1.0
    if method != "quadrature":
        raise ValueError(f"unknown method {method!r}")

    gp = ground_phi(p, dp)
    tp = turning_points(p, dp, gp.e0)
    pref = _k_prefactor(p, dp)
    w = tp.zB - tp.zA

    # integrand in z: (1/(nu alpha^2)) (dk/dz) phi0(z) / (z (1+z));
    # (dk/dz) dz = pref w cos(2 theta) d(theta) is smooth.
    def integrand(theta):
        z = tp.zA + w * math.sin(theta) ** 2
        return pref * w * math.cos(2.0 * theta) * gp(z) / (z * (1.0 + z))

    val = _quad(integrand, 0.0, math.pi / 2.0, _QUAD_TOL)
    return val / (dp.nu * p.alpha**2) / math.pi


def momentum_integral(p: PhysicalParams, q: QuantumNumbers, E: float,
                      method: str = "closed") -> float:
    """Positive action int_{rA}^{rB} k(r) dr at energy E.

    Closed form: pi lambda (s2 - s1 - 1).  Quadrature re-parameterizes the
    r-integral through z with the sin^2 substitution.
    """
    dp = derive_params(p, q)
    if dp.b == 0:
        raise CentrifugalFreeError("momentum integral needs two turning points (b > 0)")
    if method == "closed":
        s1 = math.sqrt(p.c0 - E / dp.b)
        s2 = math.sqrt(p.c0 + (dp.a - E) / dp.b)
        return math.pi * dp.lambda_dimless * (s2 - s1 - 1.0)
    if method != "quadrature":
        raise ValueError(f"unknown method {method!r}")

    tp = turning_points(p, dp, E)
    pref = _k_prefactor(p, dp)
    w = tp.zB - tp.zA

    # int k dr = int_{zA}^{zB} k(z) dz / (alpha z (1+z)); k dz is smooth in theta.
    def integrand(theta):
        s, c = math.sin(theta), math.cos(theta)
        z = tp.zA + w * s * s
        return 2.0 * pref * w * w * (s * c) ** 2 / (p.alpha * z * (1.0 + z))

    return _quad(integrand, 0.0, math.pi / 2.0, _QUAD_TOL)


def quantization_residual(p: PhysicalParams, q: QuantumNumbers, E: float) -> float:
    """f(E) = lambda (s2 - s1) - (n + nu); zero at the closed-form levels."""
    dp = derive_params(p, q)
    if dp.b == 0:
        raise CentrifugalFreeError("quantization residual needs b > 0")
    s1 = math.sqrt(p.c0 - E / dp.b)
    s2 = math.sqrt(p.c0 + (dp.a - E) / dp.b)
    return dp.lambda_dimless * (s2 - s1) - (q.n + dp.nu)


def solve_quantization(p: PhysicalParams, q: QuantumNumbers) -> float:
    """Energy from the quantization condition by bracketed root-finding.

    f is monotone increasing in E on (V_min, b c0]; f(b c0) > 0 iff the state
    is bound, so the bracket is guaranteed for genuine bound states.  The
    l = 0, D = 3 case (b = 0) falls back to the s-wave closed form.
    """
    dp = derive_params(p, q)
    eps = epsilon_tilde(p, q)
    if eps <= 0:
        raise NoRootError(
            f"state n={q.n}, l={q.l}, D={p.D} at alpha={p.alpha} is unbound"
        )
    if dp.b == 0:
        return -(p.hbar**2 * p.alpha**2 / (2.0 * p.mu)) * eps**2

    if dp.a <= dp.b:
        # eps > 0 implies a > b (lambda < n + nu); defensive only
        raise NoRootError("well has no classical region (a <= b)")
    hi = dp.b * p.c0
    lo = dp.b * p.c0 - (dp.a - dp.b) ** 2 / (4.0 * dp.b)  # well minimum
    f = lambda E: quantization_residual(p, q, E)
    if not (f(lo) < 0 < f(hi)):
        raise NoRootError("quantization bracket failed")
    return brentq(f, lo, hi, xtol=1e-30, rtol=8.9e-16, maxiter=200)


_APPENDIX = ("A1", "A2", "A3", "A4", "A5")


def appendix_integral(formula: str, rA: float, rB: float,
                      a: float | None = None, b: float | None = None) -> float:
    """Closed-form two-turning-point integrals A1..A5.

    A1: int r/sqrt((r-rA)(rB-r)) dr            = pi (rA + rB)/2
    A2: int 1/(r sqrt(..)) dr                  = pi/sqrt(rA rB)
    A3: int 1/sqrt(..) dr                      = pi
    A4: int sqrt(..)/r dr                      = pi [(rA+rB)/2 - sqrt(rA rB)]
    A5: int 1/((a + b r) sqrt(..)) dr          = pi/sqrt((a + b rA)(a + b rB))
    """
    if formula not in _APPENDIX:
        raise ValueError(f"formula must be one of {_APPENDIX}")
    if not (0 < rA < rB):
        raise ValueError("require 0 < rA < rB")
    if formula == "A1":
        return math.pi * 0.5 * (rA + rB)
    if formula == "A2":
        return math.pi / math.sqrt(rA * rB)
    if formula == "A3":
        return math.pi
    if formula == "A4":
        return math.pi * (0.5 * (rA + rB) - math.sqrt(rA * rB))
    if a is None or b is None:
        raise ValueError("A5 requires the (a, b) pair")
    if a + b * rA <= 0 or a + b * rB <= 0:
        raise ValueError("A5 requires a + b r > 0 on [rA, rB]")
    return math.pi / math.sqrt((a + b * rA) * (a + b * rB))
