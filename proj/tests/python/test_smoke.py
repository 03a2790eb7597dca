import math

import numpy as np
import pytest

import wqpe


def test_window_basics():
    amps = wqpe.make_window("rect", 0.0, 3)
    assert len(amps) == 8
    assert all(abs(a - 1 / math.sqrt(8)) < 1e-14 for a in amps)
    assert abs(wqpe.bessel_i0(1.0) - 1.2660658777520083) < 1e-14
    assert abs(wqpe.optimal_beta(1) - math.pi * math.sqrt(3)) < 1e-12


def test_phase_distribution_normalized():
    mass = wqpe.phase_distribution("kaiser", 6.0, 5, 0.37)
    assert abs(sum(mass) - 1.0) < 1e-12
    assert min(mass) >= 0.0


def test_worst_case_failure_rect():
    f = wqpe.worst_case_failure("rect", 0.0, 10, 1)
    assert 0.186 <= f <= 0.193


def test_run_algorithm_extremal():
    lam = np.array([math.cos(2 * math.pi * 6 / 16), math.cos(2 * math.pi * 3 / 16)])
    h = np.diag(lam).astype(complex)
    f = np.eye(2, dtype=complex)
    rep = wqpe.run_algorithm(h, f, "rect", 0.0, 4, 20)
    assert rep.truth == pytest.approx(1.0)
    assert rep.realized_error < 1e-6
    assert rep.success_flag


def test_resource_formulas():
    assert wqpe.baseline_qubits(107.49, 0.302) == 12
    assert wqpe.total_toffoli(1, 1) == 11
    case = wqpe.estimate_case("water", "kinetic", "kaiser")
    assert case["l"] == 12
    assert case["total_toffoli"] > 0


def test_infeasible_uniform_policy():
    with pytest.raises(wqpe.InfeasibleError):
        wqpe.estimate_case("water", "kinetic", "rect")


def test_verification_suite():
    res = wqpe.run_suite("rho", 7, 5)
    assert res["ok"]
    assert res["count"] == 5
