"""Acceptance suite: one printed PASS/FAIL line per criterion.

Lines are written to the real stdout so they appear even when pytest
captures output.
"""

import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from hulthen import (
    PhysicalParams,
    QuantumNumbers,
    appendix_integral,
    count_nodes,
    degeneracy_partner,
    derive_params,
    energy_value,
    epsilon_tilde,
    hyp2f1_truncated,
    jacobi_P,
    momentum_integral,
    normalization_closed,
    normalization_numeric,
    pochhammer,
    quantization_residual,
    quantum_correction,
    riccati_residual,
    solve_bound_states,
    solve_quantization,
)
from hulthen.errors import NodeProximityError
from hulthen.oracle import adaptive_quad

ALPHAS = (0.025, 0.05, 0.1)
CLI = [sys.executable, "-m", "hulthen.cli"]


_CAPSYS = None


@pytest.fixture(autouse=True)
def _live_report(capsys):
    global _CAPSYS
    _CAPSYS = capsys
    yield
    _CAPSYS = None


def _report(num: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"[criterion {num:2d}] {status}  {name}"
    if detail:
        line += f"  ({detail})"
    if _CAPSYS is not None:
        with _CAPSYS.disabled():
            print(line, flush=True)
    else:
        print(line, flush=True)
    assert ok, line


def criterion_grid():
    for alpha in ALPHAS:
        for D in (3, 4, 5):
            for l in (0, 1, 2):
                p = PhysicalParams.paper_units(alpha, D=D)
                for n in (0, 1, 2, 3):
                    q = QuantumNumbers(n, l)
                    if epsilon_tilde(p, q) > 0:
                        yield p, q


def test_criterion_01_quantization_matches_closed_form():
    t0 = time.perf_counter()
    worst = 0.0
    for p, q in criterion_grid():
        e_root = solve_quantization(p, q)
        e_closed = energy_value(p, q)
        worst = max(worst, abs(e_root - e_closed) / abs(e_closed))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-10 and elapsed < 5.0
    _report(1, "quantization-rule root matches closed form",
            ok, f"worst rel dev {worst:.2e}, {elapsed:.2f} s")


def test_criterion_02_anchor_values():
    e1 = energy_value(PhysicalParams.paper_units(0.2), QuantumNumbers(0, 0))
    e2 = energy_value(PhysicalParams.paper_units(0.1), QuantumNumbers(0, 1))
    dev1 = abs(e1 + 0.16)
    dev2 = abs(e2 + 1.0 / 48.0)
    dev3 = 0.0
    from hulthen import critical_alpha

    for (n, l, D) in [(0, 0, 3), (1, 0, 3), (0, 1, 4), (2, 2, 5)]:
        p0 = PhysicalParams.paper_units(0.1, D=D, c0=0.0)
        q = QuantumNumbers(n, l)
        ac = critical_alpha(p0, q)
        dev3 = max(dev3, abs(energy_value(p0.with_alpha(ac), q)))
    ok = dev1 <= 1e-12 and dev2 <= 1e-12 and dev3 <= 1e-12
    _report(2, "anchor energies -0.16, -1/48 and E(critical alpha) = 0",
            ok, f"devs {dev1:.1e}, {dev2:.1e}, {dev3:.1e}")


def test_criterion_03_oracle_agreement_approx():
    t0 = time.perf_counter()
    worst = 0.0
    for alpha in ALPHAS:
        for D in (3, 4, 5):
            for l in (0, 1, 2):
                p = PhysicalParams.paper_units(alpha, D=D)
                bound_n = [n for n in range(4)
                           if epsilon_tilde(p, QuantumNumbers(n, l)) > 0]
                if not bound_n:
                    continue
                levels = solve_bound_states(p, QuantumNumbers(0, l),
                                            mode="approx", count=max(bound_n) + 1)
                for lvl in levels:
                    if lvl.n not in bound_n:
                        continue
                    e_closed = energy_value(p, QuantumNumbers(lvl.n, l))
                    worst = max(worst,
                                abs(lvl.energy - e_closed) / abs(e_closed))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-4 and elapsed < 60.0
    _report(3, "finite-difference oracle (approx centrifugal) matches closed form",
            ok, f"worst rel dev {worst:.2e}, {elapsed:.1f} s")


def test_criterion_04_improvement_over_c0_zero():
    ok = True
    worst_pair = ""
    for alpha in (0.025, 0.05):
        for l in (1, 2):
            p = PhysicalParams.paper_units(alpha)
            n_list = [n for n in (0, 1)
                      if epsilon_tilde(p, QuantumNumbers(n, l)) > 0]
            if not n_list:
                continue
            exact = solve_bound_states(p, QuantumNumbers(0, l), mode="exact",
                                       count=max(n_list) + 1)
            for lvl in exact:
                if lvl.n not in n_list:
                    continue
                q = QuantumNumbers(lvl.n, l)
                dev_c0 = abs(energy_value(p, q) - lvl.energy)
                dev_0 = abs(energy_value(p.with_c0(0.0), q) - lvl.energy)
                if dev_c0 > dev_0:
                    ok = False
                    worst_pair = f"alpha={alpha}, n={lvl.n}, l={l}"
    _report(4, "c0 = 1/12 closed form is closer to the exact oracle than c0 = 0",
            ok, worst_pair or "all pairs improved")


def test_criterion_05_quantum_correction():
    worst = 0.0
    for D in (3, 4, 5):
        for l in (1, 2, 3):
            p = PhysicalParams.paper_units(0.025, D=D)
            q = QuantumNumbers(0, l)
            closed = quantum_correction(p, q, method="closed")
            quadr = quantum_correction(p, q, method="quadrature")
            worst = max(worst, abs(closed - quadr))
    p3 = PhysicalParams.paper_units(0.1)
    swave_zero = (quantum_correction(p3, QuantumNumbers(0, 0), "closed") == 0.0
                  and quantum_correction(p3, QuantumNumbers(0, 0), "quadrature")
                  == 0.0)
    ok = worst <= 1e-6 and swave_zero
    _report(5, "quantum correction: closed form vs ground-state quadrature",
            ok, f"worst abs dev {worst:.2e}, s-wave zero: {swave_zero}")


def test_criterion_06_momentum_integral():
    worst = 0.0
    for p, q in criterion_grid():
        dp = derive_params(p, q)
        if dp.b == 0:
            continue
        E = energy_value(p, q)
        closed = momentum_integral(p, q, E, method="closed")
        quadr = momentum_integral(p, q, E, method="quadrature")
        worst = max(worst, abs(closed - quadr) / abs(closed))
    ok = worst <= 1e-8
    _report(6, "momentum integral: closed form vs adaptive quadrature",
            ok, f"worst rel dev {worst:.2e}")


def test_criterion_07_appendix_formulas():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        rA = float(rng.uniform(0.05, 3.0))
        rB = rA + float(rng.uniform(0.05, 4.0))
        a = float(rng.uniform(0.2, 2.0))
        b = float(rng.uniform(0.05, 1.5))

        def w(r):
            return math.sqrt((r - rA) * (rB - r))

        per = {
            "A1": adaptive_quad(lambda r: r / w(r), rA, rB),
            "A2": adaptive_quad(lambda r: 1.0 / (r * w(r)), rA, rB),
            "A3": adaptive_quad(lambda r: 1.0 / w(r), rA, rB),
            "A4": adaptive_quad(lambda r: w(r) / r, rA, rB),
            "A5": adaptive_quad(lambda r: 1.0 / ((a + b * r) * w(r)), rA, rB),
        }
        for name, num in per.items():
            closed = appendix_integral(name, rA, rB, a=a, b=b)
            worst = max(worst, abs(num - closed) / abs(closed))
    ok = worst <= 1e-8
    _report(7, "two-turning-point integrals A1-A5 vs quadrature",
            ok, f"worst rel dev {worst:.2e}")


def test_criterion_08_wavefunction_suite():
    # (a) Riccati residual away from nodes
    worst_ric = 0.0
    for alpha, n, l, D in [(0.1, 0, 0, 3), (0.05, 1, 1, 3), (0.05, 2, 0, 4),
                           (0.025, 3, 2, 3)]:
        p = PhysicalParams.paper_units(alpha, D=D)
        q = QuantumNumbers(n, l)
        for r in np.linspace(0.3 / alpha, 5.0 / alpha, 17):
            try:
                worst_ric = max(worst_ric, riccati_residual(p, q, float(r)))
            except NodeProximityError:
                continue
    # (b) node count = n
    nodes_ok = True
    for p, q in criterion_grid():
        if count_nodes(p, q) != q.n:
            nodes_ok = False
    # (c) Jacobi / 2F1 identity, n <= 10
    rng = np.random.default_rng(8)
    worst_id = 0.0
    for _ in range(100):
        n = int(rng.integers(0, 11))
        A = float(rng.uniform(0.0, 5.0))
        B = float(rng.uniform(0.0, 5.0))
        x = float(rng.uniform(0.0, 1.0))
        lhs = jacobi_P(n, A, B, 1.0 - 2.0 * x)
        rhs = (pochhammer(1.0 + A, n) / math.factorial(n)
               * hyp2f1_truncated(-n, n + A + B + 1.0, A + 1.0, x))
        worst_id = max(worst_id, abs(lhs - rhs) / max(1.0, abs(lhs)))
    # (d) quantum-condition residual at the closed-form energies
    worst_qc = 0.0
    for p, q in criterion_grid():
        if derive_params(p, q).b == 0:
            continue
        worst_qc = max(worst_qc,
                       abs(quantization_residual(p, q, energy_value(p, q))))
    ok = (worst_ric <= 1e-8 and nodes_ok and worst_id <= 1e-12
          and worst_qc <= 1e-12)
    _report(8, "wavefunctions: Riccati residual, node counts, Jacobi identity, "
               "quantum condition",
            ok, f"ric {worst_ric:.1e}, nodes {nodes_ok}, id {worst_id:.1e}, "
                f"qc {worst_qc:.1e}")


def test_criterion_09_normalization():
    worst = 0.0
    for D in (3, 4, 5):
        for l in (0, 1, 2):
            for n in range(6):
                p = PhysicalParams.paper_units(0.01, D=D)
                q = QuantumNumbers(n, l)
                closed = normalization_closed(p, q)
                numeric = normalization_numeric(p, q)
                worst = max(worst, abs(closed - numeric) / closed)
    anchor = normalization_closed(PhysicalParams.paper_units(0.2),
                                  QuantumNumbers(0, 0))
    dev_anchor = abs(anchor - math.sqrt(12.0))
    ok = worst <= 1e-8 and dev_anchor <= 1e-10
    _report(9, "normalization: closed form vs quadrature, anchor sqrt(12)",
            ok, f"worst rel dev {worst:.2e}, anchor dev {dev_anchor:.1e}")


def test_criterion_10_degeneracy_and_coulomb_limit():
    worst = 0.0
    for alpha in (0.025, 0.1):
        for D in (4, 5, 6):
            for l in (0, 1, 2):
                for n in (0, 1, 2):
                    p = PhysicalParams.paper_units(alpha, D=D)
                    q = QuantumNumbers(n, l)
                    q2, D2 = degeneracy_partner(q, D, +1)
                    p2 = PhysicalParams.paper_units(alpha, D=D2)
                    e1, e2 = energy_value(p, q), energy_value(p2, q2)
                    worst = max(worst, abs(e1 - e2) / max(abs(e1), 1e-300))
    # Coulomb limit: |E(alpha) - E_coulomb| shrinks linearly in alpha
    q = QuantumNumbers(1, 1)
    nn = 1 + 1 + 1.0
    coulomb = -1.0 / (4.0 * nn**2)
    devs = [abs(energy_value(PhysicalParams.paper_units(a), q) - coulomb)
            for a in (1e-1, 1e-2, 1e-3)]
    ratios = [d / a for d, a in zip(devs, (1e-1, 1e-2, 1e-3))]
    linear = (devs[0] > devs[1] > devs[2]
              and abs(ratios[1] / ratios[2] - 1.0) < 0.15)
    ok = worst <= 1e-14 and linear
    _report(10, "interdimensional degeneracy and linear Coulomb-limit approach",
            ok, f"worst rel dev {worst:.1e}, linear: {linear}")


def test_criterion_11_cli_determinism():
    ok = True
    detail = []
    for argv in (["verify", "--format", "json"],
                 ["spectrum", "--alpha", "0.1", "--format", "csv"]):
        a = subprocess.run(CLI + argv, capture_output=True, text=True)
        b = subprocess.run(CLI + argv, capture_output=True, text=True)
        same = (a.stdout == b.stdout and a.returncode == b.returncode == 0)
        ok = ok and same
        detail.append(f"{argv[0]}: {'identical' if same else 'DIFFERS'}")
    _report(11, "byte-identical repeated CLI runs (verify, spectrum)",
            ok, "; ".join(detail))
