"""Closed-form bound-state energies in D dimensions.

    E_{n,l} = (hbar^2 alpha^2 / 2 mu) { (l+(D-1)/2)(l+(D-3)/2) c0 - eps_tilde^2 }

with eps_tilde = mu Z e^2/(hbar^2 (n+nu) alpha) - (n+nu)/2 and nu = l+(D-1)/2.
A level is bound iff eps_tilde > 0 (the e^{-alpha eps_tilde r} tail decays).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotBoundError, OutOfRangeError
from .model import PhysicalParams, QuantumNumbers, derive_params, warn_if_outside_validity


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    l: int
    D: int
    energy: float
    mode: str  # "c0_improved" or "c0_zero"
    bound: bool
    eps_tilde: float


def epsilon_tilde(p: PhysicalParams, q: QuantumNumbers) -> float:
    """Tail exponent eps_tilde; its sign is the bound-state criterion."""
    nn = q.n + q.l + (p.D - 1) / 2.0
    return p.mu * p.Z * p.e2 / (p.hbar**2 * nn * p.alpha) - nn / 2.0


def energy_value(p: PhysicalParams, q: QuantumNumbers) -> float:
    """Raw closed-form energy (no bound-state check)."""
    dp = derive_params(p, q)
    eps = epsilon_tilde(p, q)
    factor = dp.nu * (q.l + (p.D - 3) / 2.0)
    return (p.hbar**2 * p.alpha**2 / (2.0 * p.mu)) * (factor * p.c0 - eps**2)


def energy_level(p: PhysicalParams, q: QuantumNumbers) -> EnergyLevel:
    """Closed-form level; raises NotBoundError when eps_tilde <= 0."""
    warn_if_outside_validity(p, q)
    eps = epsilon_tilde(p, q)
    if eps <= 0:
        raise NotBoundError(
            f"state n={q.n}, l={q.l}, D={p.D} at alpha={p.alpha} is not bound "
            f"(eps_tilde = {eps:g} <= 0)"
        )
    return EnergyLevel(
        n=q.n, l=q.l, D=p.D,
        energy=energy_value(p, q),
        mode="c0_zero" if p.c0 == 0 else "c0_improved",
        bound=True,
        eps_tilde=eps,
    )


def critical_alpha(p: PhysicalParams, q: QuantumNumbers) -> float:
    """Screening at which the c0 = 0 level crosses zero: 2 mu Z e^2/(hbar^2 (n+nu)^2)."""
    nn = q.n + q.l + (p.D - 1) / 2.0
    return 2.0 * p.mu * p.Z * p.e2 / (p.hbar**2 * nn**2)


def count_bound_states(p: PhysicalParams, l: int) -> int:
    """Number of n >= 0 with eps_tilde > 0, i.e. n + nu < sqrt(2 mu Z e^2/(hbar^2 alpha))."""
    if l < 0:
        raise ValueError("l must be >= 0")
    nu = l + (p.D - 1) / 2.0
    s = math.sqrt(2.0 * p.mu * p.Z * p.e2 / (p.hbar**2 * p.alpha))
    t = s - nu
    if t <= 0:
        return 0
    return int(math.ceil(t))


def degeneracy_partner(q: QuantumNumbers, D: int, direction: int):
    """Interdimensional map (n, l, D) -> (n, l +- 1, D -+ 2); energy is invariant."""
    if direction not in (+1, -1):
        raise ValueError("direction must be +1 or -1")
    l_new = q.l + direction
    D_new = D - 2 * direction
    if l_new < 0 or D_new < 2:
        raise OutOfRangeError(
            f"degeneracy partner of (n={q.n}, l={q.l}, D={D}) with direction "
            f"{direction:+d} leaves the valid domain (l={l_new}, D={D_new})"
        )
    return QuantumNumbers(q.n, l_new), D_new
