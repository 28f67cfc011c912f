"""Self-verification suites: every closed form against an independent check.

Each suite returns a list of check dicts {name, passed, value, tolerance};
`run_verification` aggregates them into a machine-readable report.  All
randomness is seeded, so reports are byte-for-byte reproducible.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad

from .errors import NoClassicalRegionError
from .model import PhysicalParams, QuantumNumbers, derive_params
from .qrule import (
    appendix_integral,
    ground_phi,
    momentum_integral,
    quantization_residual,
    quantum_correction,
    solve_quantization,
    turning_points,
)
from .spectrum import energy_value, epsilon_tilde
from .wavefn import (
    hyp2f1_truncated,
    jacobi_P,
    normalization_closed,
    normalization_numeric,
    pochhammer,
    riccati_residual,
)

GRID_ALPHAS = (0.025, 0.05, 0.1)
SUITE_NAMES = ("vieta", "riccati", "jacobi", "correction", "momentum",
               "quantization", "appendix", "normalization")


def _check(name, value, tol):
    return {"name": name, "value": float(value), "tolerance": tol,
            "passed": bool(value <= tol)}


def _bound_grid(c0):
    """(params, q) tuples over n<=3, l<=2, D in {3,4,5}, the standard alpha grid."""
    out = []
    for alpha in GRID_ALPHAS:
        for D in (3, 4, 5):
            for l in range(3):
                for n in range(4):
                    p = PhysicalParams.paper_units(alpha, D=D, c0=c0)
                    q = QuantumNumbers(n, l)
                    if epsilon_tilde(p, q) > 0:
                        out.append((p, q))
    return out


def suite_vieta(c0):
    """Turning-point sum/product identities at closed-form energies."""
    checks = []
    worst = 0.0
    for p, q in _bound_grid(c0):
        dp = derive_params(p, q)
        if dp.b == 0:
            continue
        tp = turning_points(p, dp, energy_value(p, q))
        E = energy_value(p, q)
        worst = max(worst,
                    abs(tp.zA + tp.zB - (dp.a / dp.b - 1.0)),
                    abs(tp.zA * tp.zB - (-E / dp.b + p.c0)))
    checks.append(_check("vieta_sum_product_worst", worst, 1e-12))
    return checks


def suite_riccati(c0):
    """Ground log-derivative solves the z-space Riccati equation; full
    wavefunctions solve the r-space one away from nodes."""
    checks = []
    worst0 = 0.0
    for alpha in GRID_ALPHAS:
        for D in (3, 4, 5):
            for l in range(3):
                p = PhysicalParams.paper_units(alpha, D=D, c0=c0)
                dp = derive_params(p, QuantumNumbers(0, l))
                gp = ground_phi(p, dp)
                z = np.geomspace(1e-3, 1e2, 41)
                phi = gp(z)
                lhs = -alpha * z * (1.0 + z) * gp.c1
                veff = dp.b * (p.c0 + z * (1.0 + z)) - dp.a * z
                rhs = -(2.0 * p.mu / p.hbar**2) * (gp.e0 - veff) - phi**2
                worst0 = max(worst0, float(np.max(np.abs(lhs - rhs))))
    checks.append(_check("ground_phi_riccati_worst", worst0, 1e-12))

    worst_g, worst_x = 0.0, 0.0
    for l, D in ((0, 3), (1, 3), (2, 5)):
        p = PhysicalParams.paper_units(0.05, D=D, c0=c0)
        if epsilon_tilde(p, QuantumNumbers(0, l)) > 0:
            for r in np.geomspace(0.1, 50.0, 25):
                worst_g = max(worst_g, riccati_residual(p, QuantumNumbers(0, l), r))
        if epsilon_tilde(p, QuantumNumbers(2, l)) > 0:
            for r in np.geomspace(0.5, 40.0, 25):
                try:
                    worst_x = max(worst_x, riccati_residual(p, QuantumNumbers(2, l), r))
                except Exception:
                    continue  # node proximity
    checks.append(_check("wavefn_riccati_ground_worst", worst_g, 1e-10))
    checks.append(_check("wavefn_riccati_excited_worst", worst_x, 1e-8))
    return checks


def suite_jacobi(c0):
    """Hypergeometric/Jacobi identity on randomized parameters, n <= 10."""
    rng = np.random.default_rng(42)
    worst = 0.0
    for _ in range(60):
        n = int(rng.integers(0, 11))
        A = float(rng.uniform(0.0, 5.0))
        B = float(rng.uniform(0.0, 5.0))
        x = float(rng.uniform(0.0, 1.0))
        lhs = jacobi_P(n, A, B, 1.0 - 2.0 * x)
        rhs = (pochhammer(1.0 + A, n) / math.factorial(n)
               * hyp2f1_truncated(-n, n + A + B + 1.0, A + 1.0, x))
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return [_check("jacobi_2f1_identity_worst", worst, 1e-12)]


def suite_correction(c0):
    """Quantum correction: closed form vs quadrature of the ground-state integral."""
    worst = 0.0
    for alpha in GRID_ALPHAS:
        for D in (3, 4, 5):
            for l in (1, 2, 3):
                p = PhysicalParams.paper_units(alpha, D=D, c0=c0)
                q = QuantumNumbers(0, l)
                if epsilon_tilde(p, q) <= 0:
                    continue  # no genuine ground state to build phi0 from
                try:
                    numer = quantum_correction(p, q, "quadrature")
                except NoClassicalRegionError:
                    continue
                worst = max(worst, abs(quantum_correction(p, q, "closed") - numer))
    checks = [_check("quantum_correction_worst_abs", worst, 1e-6)]
    p = PhysicalParams.paper_units(0.1, D=3, c0=c0)
    checks.append(_check("quantum_correction_swave_zero",
                         abs(quantum_correction(p, QuantumNumbers(0, 0), "closed")),
                         0.0))
    return checks


def suite_momentum(c0, canary: float = 1.0):
    """Action integral: closed form vs adaptive quadrature, relative.

    The canary factor perturbs c0 on the quadrature side only, so a
    deliberately inconsistent configuration is guaranteed to fail.
    """
    worst = 0.0
    for p, q in _bound_grid(c0):
        if derive_params(p, q).b == 0:
            continue
        E = energy_value(p, q)
        closed = momentum_integral(p, q, E, "closed")
        numer = momentum_integral(p.with_c0(c0 * canary), q, E, "quadrature")
        worst = max(worst, abs(closed - numer) / abs(closed))
    return [_check("momentum_integral_worst_rel", worst, 1e-8)]


def suite_quantization(c0, canary: float = 1.0):
    """Quantization-rule roots against the closed-form spectrum, relative."""
    worst = 0.0
    worst_res = 0.0
    for p, q in _bound_grid(c0):
        E = energy_value(p, q)
        root = solve_quantization(p.with_c0(c0 * canary), q)
        worst = max(worst, abs(root - E) / abs(E))
        if derive_params(p, q).b > 0:
            worst_res = max(worst_res, abs(quantization_residual(p, q, E)))
    return [_check("quantization_vs_closed_worst_rel", worst, 1e-10),
            _check("quantization_residual_at_closed", worst_res, 1e-10)]


def _appendix_quadrature(formula, rA, rB, a=None, b=None):
    """Direct numerical value of the A1..A5 left-hand sides (sin^2 substitution)."""
    w = rB - rA
    funcs = {
        "A1": lambda r: r,
        "A2": lambda r: 1.0 / r,
        "A3": lambda r: 1.0,
        "A4": lambda r: (r - rA) * (rB - r) / r,
        "A5": lambda r: 1.0 / (a + b * r),
    }
    g = funcs[formula]
    if formula == "A4":
        # integrand sqrt((r-rA)(rB-r))/r: weight sits in the numerator
        def f(t):
            r = rA + w * math.sin(t) ** 2
            return 2.0 * g(r)
    else:
        def f(t):
            r = rA + w * math.sin(t) ** 2
            return 2.0 * w * math.sin(t) * math.cos(t) * g(r) / (
                w * math.sin(t) * math.cos(t))
    val, _ = quad(f, 0.0, math.pi / 2.0, epsabs=1e-13, epsrel=1e-13, limit=200)
    return val


def suite_appendix(c0, pairs: int = 100):
    """A1..A5 closed forms vs quadrature on randomized turning-point pairs."""
    rng = np.random.default_rng(7)
    worst = {f: 0.0 for f in ("A1", "A2", "A3", "A4", "A5")}
    for _ in range(pairs):
        rA = float(rng.uniform(0.01, 50.0))
        rB = rA + float(rng.uniform(0.01, 50.0))
        for formula in ("A1", "A2", "A3", "A4"):
            closed = appendix_integral(formula, rA, rB)
            numer = _appendix_quadrature(formula, rA, rB)
            worst[formula] = max(worst[formula], abs(closed - numer) / abs(closed))
        bb = float(rng.uniform(-0.5, 2.0))
        aa = float(rng.uniform(0.1, 5.0)) + max(0.0, -bb * rB)
        closed = appendix_integral("A5", rA, rB, a=aa, b=bb)
        numer = _appendix_quadrature("A5", rA, rB, a=aa, b=bb)
        worst["A5"] = max(worst["A5"], abs(closed - numer) / abs(closed))
    return [_check(f"appendix_{f}_worst_rel", v, 1e-8) for f, v in worst.items()]


def suite_normalization(c0):
    """Closed-form normalization vs quadrature, n <= 5, l <= 2, D in {3,4,5}."""
    worst = 0.0
    alpha = 0.01
    for D in (3, 4, 5):
        for l in range(3):
            for n in range(6):
                p = PhysicalParams.paper_units(alpha, D=D, c0=c0)
                q = QuantumNumbers(n, l)
                if epsilon_tilde(p, q) <= 0:
                    continue
                nc = normalization_closed(p, q)
                nn = normalization_numeric(p, q)
                worst = max(worst, abs(nc - nn) / nn)
    checks = [_check("normalization_closed_vs_numeric_worst_rel", worst, 1e-8)]
    anchor = normalization_closed(PhysicalParams.paper_units(0.2, c0=c0),
                                  QuantumNumbers(0, 0))
    checks.append(_check("normalization_sqrt12_anchor",
                         abs(anchor - math.sqrt(12.0)), 1e-10))
    return checks


_SUITES = {
    "vieta": suite_vieta,
    "riccati": suite_riccati,
    "jacobi": suite_jacobi,
    "correction": suite_correction,
    "momentum": suite_momentum,
    "quantization": suite_quantization,
    "appendix": suite_appendix,
    "normalization": suite_normalization,
}


_CANARY_SUITES = ("momentum", "quantization")


def run_verification(suites=None, c0: float = 1.0 / 12.0,
                     canary: float = 1.0) -> dict:
    """Run the named suites (all by default) and aggregate a report.

    canary != 1 injects an inconsistent c0 into the dual-route suites; it
    exists so the verifier can be shown to fail when it should.
    """
    names = list(suites) if suites else list(SUITE_NAMES)
    unknown = [s for s in names if s not in _SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}")
    report = {"suites": [], "passed": True}
    for name in names:
        if name in _CANARY_SUITES:
            checks = _SUITES[name](c0, canary)
        else:
            checks = _SUITES[name](c0)
        passed = all(c["passed"] for c in checks)
        report["suites"].append({"name": name, "passed": passed, "checks": checks})
        report["passed"] = report["passed"] and passed
    return report
