import math

import numpy as np
import pytest

from hulthen import (
    CentrifugalFreeError,
    NoClassicalRegionError,
    NoRootError,
    PhysicalParams,
    QuantumNumbers,
    appendix_integral,
    derive_params,
    energy_value,
    ground_phi,
    momentum_integral,
    quantization_residual,
    quantum_correction,
    solve_quantization,
    turning_points,
)
from hulthen.oracle import adaptive_quad
from hulthen.qrule import inverse_z, momentum_k, transform_z


def bound_grid():
    from hulthen import epsilon_tilde

    for alpha in (0.025, 0.05, 0.1):
        for D in (3, 4, 5):
            for l in (0, 1, 2):
                for n in (0, 1, 2, 3):
                    p = PhysicalParams.paper_units(alpha, D=D)
                    q = QuantumNumbers(n, l)
                    if epsilon_tilde(p, q) > 0:
                        yield p, q


def test_transform_roundtrip():
    alpha = 0.2
    r = np.array([0.1, 1.0, 10.0])
    assert np.allclose(inverse_z(alpha, transform_z(alpha, r)), r, rtol=1e-13)


def test_turning_points_vieta_and_momentum_zero():
    p = PhysicalParams.paper_units(0.05)
    q = QuantumNumbers(0, 1)
    dp = derive_params(p, q)
    E = energy_value(p, q)
    tp = turning_points(p, dp, E)
    assert 0 < tp.zA < tp.zB
    assert tp.zA + tp.zB == pytest.approx(dp.a / dp.b - 1.0, rel=1e-13)
    assert tp.zA * tp.zB == pytest.approx(-E / dp.b + p.c0, rel=1e-13)
    # k vanishes at both turning points
    assert abs(momentum_k(p, dp, tp, tp.zA)) < 1e-12
    assert abs(momentum_k(p, dp, tp, tp.zB)) < 1e-12


def test_turning_points_errors():
    p = PhysicalParams.paper_units(0.1)
    q0 = QuantumNumbers(0, 0)
    dp0 = derive_params(p, q0)
    with pytest.raises(CentrifugalFreeError):
        turning_points(p, dp0, -0.1)  # b = 0 for l = 0, D = 3
    q1 = QuantumNumbers(0, 1)
    dp1 = derive_params(p, q1)
    v_min = dp1.b * p.c0 - (dp1.a - dp1.b) ** 2 / (4.0 * dp1.b)
    with pytest.raises(NoClassicalRegionError):
        turning_points(p, dp1, v_min - 0.01)


def test_ground_phi_satisfies_riccati():
    # phi0' + phi0^2 = (2 mu/hbar^2)(V_approx - E0) along the axis
    for alpha, l, D in [(0.05, 1, 3), (0.1, 2, 4), (0.025, 1, 5)]:
        p = PhysicalParams.paper_units(alpha, D=D)
        q = QuantumNumbers(0, l)
        dp = derive_params(p, q)
        gp = ground_phi(p, dp)
        from hulthen import effective_V

        for r in (0.5 / alpha, 1.0 / alpha, 3.0 / alpha):
            z = float(transform_z(alpha, r))
            phi = gp(z)
            dz = 1e-7 * z
            dphi_dr = ((gp(z + dz) - gp(z - dz)) / (2 * dz)) * (-alpha * z * (1 + z))
            rhs = 2.0 * p.mu / p.hbar**2 * (
                float(effective_V(p, q, r, mode="approx")) - gp.e0
            )
            assert dphi_dr + phi**2 == pytest.approx(rhs, rel=1e-6, abs=1e-10)


def test_quantum_correction_closed_vs_quadrature():
    for alpha, l, D in [(0.025, 1, 3), (0.025, 2, 3), (0.05, 1, 4), (0.025, 2, 5)]:
        p = PhysicalParams.paper_units(alpha, D=D)
        q = QuantumNumbers(0, l)
        closed = quantum_correction(p, q, method="closed")
        quadr = quantum_correction(p, q, method="quadrature")
        assert quadr == pytest.approx(closed, abs=1e-6)


def test_quantum_correction_swave_zero():
    p = PhysicalParams.paper_units(0.1)
    assert quantum_correction(p, QuantumNumbers(0, 0)) == 0.0
    # the closed form nu - lambda - 1 also vanishes as nu -> 1, lambda -> 0


def test_momentum_integral_closed_vs_quadrature():
    worst = 0.0
    for p, q in bound_grid():
        if q.l == 0 and p.D == 3:
            continue
        E = energy_value(p, q)
        dp = derive_params(p, q)
        if E <= dp.b * p.c0 - (dp.a - dp.b) ** 2 / (4.0 * dp.b):
            continue
        closed = momentum_integral(p, q, E, method="closed")
        quadr = momentum_integral(p, q, E, method="quadrature")
        worst = max(worst, abs(closed - quadr) / abs(closed))
    assert worst <= 1e-8


def test_momentum_integral_equals_pi_n_nu_minus_lambda_at_eigenvalue():
    p = PhysicalParams.paper_units(0.05)
    q = QuantumNumbers(2, 1)
    dp = derive_params(p, q)
    E = energy_value(p, q)
    val = momentum_integral(p, q, E, method="closed")
    assert val == pytest.approx(math.pi * (q.n + dp.nu - dp.lambda_dimless),
                                rel=1e-13)


def test_quantization_residual_zero_at_closed_energy():
    for p, q in bound_grid():
        if q.l == 0 and p.D == 3:
            continue
        assert abs(quantization_residual(p, q, energy_value(p, q))) < 1e-10


def test_solve_quantization_matches_closed_form():
    worst = 0.0
    for p, q in bound_grid():
        E_root = solve_quantization(p, q)
        E_closed = energy_value(p, q)
        worst = max(worst, abs(E_root - E_closed) / abs(E_closed))
    assert worst <= 1e-10


def test_solve_quantization_unbound_raises():
    p = PhysicalParams.paper_units(0.8)
    with pytest.raises(NoRootError):
        solve_quantization(p, QuantumNumbers(2, 1))


def test_appendix_closed_vs_quadrature():
    rng = np.random.default_rng(123)
    for _ in range(20):
        rA = float(rng.uniform(0.1, 2.0))
        rB = rA + float(rng.uniform(0.1, 3.0))
        a = float(rng.uniform(0.5, 2.0))
        b = float(rng.uniform(0.1, 1.0))

        def w(r):
            return math.sqrt((r - rA) * (rB - r))

        checks = {
            "A1": adaptive_quad(lambda r: r / w(r), rA, rB),
            "A2": adaptive_quad(lambda r: 1.0 / (r * w(r)), rA, rB),
            "A3": adaptive_quad(lambda r: 1.0 / w(r), rA, rB),
            "A4": adaptive_quad(lambda r: w(r) / r, rA, rB),
            "A5": adaptive_quad(lambda r: 1.0 / ((a + b * r) * w(r)), rA, rB),
        }
        for name, num in checks.items():
            closed = appendix_integral(name, rA, rB, a=a, b=b)
            assert num == pytest.approx(closed, rel=1e-8)


def test_appendix_validation():
    with pytest.raises(ValueError):
        appendix_integral("A9", 1.0, 2.0)
    with pytest.raises(ValueError):
        appendix_integral("A1", 2.0, 1.0)
    with pytest.raises(ValueError):
        appendix_integral("A5", 1.0, 2.0)  # missing (a, b)
