"""Physical problem definition: Hulthen potential in D dimensions.

The effective radial potential is

    V_eff(r) = -Z e^2 alpha e^{-alpha r}/(1 - e^{-alpha r})
               + (Lambda^2 - 1) hbar^2 / (8 mu r^2),      Lambda = 2l + D - 2.

The centrifugal 1/r^2 barrier is either kept exactly ("exact" mode) or
replaced by the exponential-type approximation ("approx" mode)

    1/r^2  ~  alpha^2 (c0 + e^{-alpha r}/(1 - e^{-alpha r})^2),   c0 = 1/12,

which becomes exact in the alpha -> 0 limit.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .errors import ValidityWarning

DEFAULT_C0 = 1.0 / 12.0


@dataclass(frozen=True)
class PhysicalParams:
    """Problem definition: screening, charge, mass, units, dimension."""

    alpha: float
    Z: float = 1.0
    mu: float = 0.5
    hbar: float = 1.0
    e2: float = 1.0
    D: int = 3
    c0: float = DEFAULT_C0

    def __post_init__(self):
        for name in ("alpha", "Z", "mu", "hbar", "e2"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")
        if int(self.D) != self.D or self.D < 2:
            raise ValueError("D must be an integer >= 2")
        if self.c0 < 0:
            raise ValueError("c0 must be >= 0")

    @classmethod
    def paper_units(cls, alpha: float, Z: float = 1.0, D: int = 3,
                    c0: float = DEFAULT_C0) -> "PhysicalParams":
        """Preset hbar = 1, mu = 1/2, e2 = 1 (the hbar = 2 mu = e = 1 convention)."""
        return cls(alpha=alpha, Z=Z, mu=0.5, hbar=1.0, e2=1.0, D=D, c0=c0)

    def with_c0(self, c0: float) -> "PhysicalParams":
        return replace(self, c0=c0)

    def with_alpha(self, alpha: float) -> "PhysicalParams":
        return replace(self, alpha=alpha)


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial (n) and angular (l) quantum numbers, both >= 0."""

    n: int
    l: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError("n must be an integer >= 0")
        if int(self.l) != self.l or self.l < 0:
            raise ValueError("l must be an integer >= 0")


@dataclass(frozen=True)
class DerivedParams:
    """Algebraic intermediates a, b, L^2, Lambda, nu, lambda used everywhere.

    a = Z e^2 alpha,  b = alpha^2 L^2,
    L^2 = (hbar^2/2mu)(l + (D-1)/2)(l + (D-3)/2),
    Lambda = 2l + D - 2,  nu = l + (D-1)/2,
    lambda_dimless = sqrt(2 mu) L / hbar = sqrt((l+(D-1)/2)(l+(D-3)/2)).
    """

    a: float
    b: float
    L2: float
    Lambda: float
    nu: float
    lambda_dimless: float

    @property
    def outside_validity(self) -> bool:
        """True when L^2 < 0 (only D = 2, l = 0), i.e. nu < 1."""
        return self.L2 < 0


def derive_params(p: PhysicalParams, q: QuantumNumbers) -> DerivedParams:
    """Compute the derived algebraic parameters for (p, q). Total function."""
    nu = q.l + (p.D - 1) / 2.0
    factor = nu * (q.l + (p.D - 3) / 2.0)
    L2 = (p.hbar**2 / (2.0 * p.mu)) * factor
    lam = math.sqrt(factor) if factor >= 0 else float("nan")
    return DerivedParams(
        a=p.Z * p.e2 * p.alpha,
        b=p.alpha**2 * L2,
        L2=L2,
        Lambda=2 * q.l + p.D - 2,
        nu=nu,
        lambda_dimless=lam,
    )


def warn_if_outside_validity(p: PhysicalParams, q: QuantumNumbers) -> None:
    """Emit ValidityWarning for the D = 2, l = 0 corner (nu = 1/2, L^2 < 0)."""
    if p.D == 2 and q.l == 0:
        warnings.warn(
            "D=2, l=0 has nu = 1/2 < 1 and L^2 < 0: results are outside the "
            "stated validity of the centrifugal approximation",
            ValidityWarning,
            stacklevel=3,
        )


def _check_r(r) -> None:
    if np.any(np.asarray(r) <= 0):
        raise ValueError("r must be strictly positive")


def screened_z(alpha: float, r):
    """z(r) = e^{-alpha r}/(1 - e^{-alpha r}) = 1/expm1(alpha r), stable for small alpha*r."""
    _check_r(r)
    with np.errstate(over="ignore"):  # expm1 -> inf gives the correct z -> 0
        return 1.0 / np.expm1(alpha * np.asarray(r, dtype=float))


def hulthen_V(p: PhysicalParams, r):
    """Hulthen potential -Z e^2 alpha e^{-alpha r}/(1 - e^{-alpha r})."""
    return -p.Z * p.e2 * p.alpha * screened_z(p.alpha, r)


def centrifugal_approx(alpha: float, c0: float, r):
    """Exponential approximation to 1/r^2: alpha^2 (c0 + z(1+z)) with z = screened_z."""
    if alpha <= 0:
        raise ValueError("alpha must be strictly positive")
    z = screened_z(alpha, r)
    return alpha**2 * (c0 + z * (1.0 + z))


def effective_V(p: PhysicalParams, q: QuantumNumbers, r, mode: str = "exact"):
    """Effective potential with the true (exact) or approximated centrifugal barrier.

    In approx mode this equals b (c0 + z(1+z)) - a z, the bracketed potential of
    the transformed radial equation.
    """
    _check_r(r)
    dp = derive_params(p, q)
    if mode == "exact":
        r = np.asarray(r, dtype=float)
        return hulthen_V(p, r) + dp.L2 / r**2
    if mode == "approx":
        return hulthen_V(p, r) + dp.L2 * centrifugal_approx(p.alpha, p.c0, r)
    raise ValueError(f"unknown mode {mode!r} (expected 'exact' or 'approx')")
