from __future__ import annotations

import numpy as np
import pytest

from fairbound.bounds import (
    BoundsResult,
    ConeStatus,
    EvvBasis,
    cone_membership,
    legut_bounds,
    lower_bound,
    select_basis_rows,
    single_evv_bounds,
    solve_cone_system,
    supporting_bounds,
    upper_bound,
)
from fairbound.errors import (
    ConeTestFailed,
    DegenerateEvvError,
    NotNormalizedError,
    NumericalInconsistencyError,
    RankDeficientError,
)
from fairbound.evv import EvvRecord, compute_evv, compute_evvs, corner_evv
from fairbound.measure import identical_instance, validate_instance

WORKED_BETAS = [(0.4, 0.3, 0.3), (0.3, 0.6, 0.1), (1 / 3, 1 / 3, 1 / 3)]
UNIFORM3 = np.full(3, 1 / 3)


def _basis(*columns, beta=None):
    n = len(columns[0])
    weights = beta if beta is not None else np.full(n, 1.0 / n)
    return EvvBasis.from_evvs([EvvRecord.from_values(weights, c) for c in columns])


def test_select_basis_rows():
    assert select_basis_rows(np.eye(3)) == (0, 1, 2)
    with pytest.raises(RankDeficientError):
        select_basis_rows(np.array([[1.0, 2.0], [0.0, 0.0], [0.0, 0.0]]))
    rows = select_basis_rows(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 3.0]]))
    assert rows == (1, 2)


def test_mixed_basis_rows(mixed):
    basis = EvvBasis.from_evvs(compute_evvs(mixed, WORKED_BETAS))
    assert basis.rows == (0, 1, 2)
    assert abs(basis.det_ubar) > 1e-6


def test_cone_membership_examples(mixed):
    alpha = np.array([0.2, 0.3, 0.5])
    assert cone_membership(_basis(2.5 * alpha), alpha).status is ConeStatus.INTERIOR

    basis = EvvBasis.from_evvs(compute_evvs(mixed, WORKED_BETAS))
    report = cone_membership(basis, UNIFORM3)
    assert report.status is ConeStatus.OUTSIDE
    assert report.signs[0] > 0 and report.signs[1] > 0 and report.signs[2] < 0

    report = cone_membership(_basis((1.0, 0.0), (0.9, 0.1)), (0.5, 0.5))
    assert report.status is ConeStatus.OUTSIDE
    with pytest.raises(ConeTestFailed):
        lower_bound(_basis((1.0, 0.0), (0.9, 0.1)), (0.5, 0.5))


def test_corner_column_outside_for_uniform_claims():
    basis = _basis((1.0, 0.0, 0.0))
    assert cone_membership(basis, UNIFORM3).status is ConeStatus.OUTSIDE


def test_lower_bound_on_claim_ray():
    alpha = np.array([0.25, 0.25, 0.5])
    solution = lower_bound(_basis(alpha), alpha)
    assert solution.r_star == pytest.approx(1.0)
    assert solution.t == pytest.approx([1.0])


def test_three_evv_basis_is_not_certified(mixed):
    evvs = compute_evvs(mixed, WORKED_BETAS)
    result = supporting_bounds(evvs, mixed.alpha)
    assert result.cone_status is ConeStatus.OUTSIDE
    assert result.lower is None and result.solution is None
    assert result.upper == pytest.approx(1.5443, abs=5e-4)
    assert result.uncertified_r == pytest.approx(1.4656, abs=5e-4)
    r, t = solve_cone_system(result.basis, mixed.alpha)
    assert r == pytest.approx(result.uncertified_r, rel=1e-12)
    assert t.sum() == pytest.approx(1.0)
    assert t == pytest.approx([1.610, 0.275, -0.886], abs=2e-3)


def test_certified_bounds_leave_uncertified_value_empty(mixed):
    result = single_evv_bounds(mixed, compute_evv(mixed, UNIFORM3), mixed.alpha)
    assert result.lower is not None
    assert result.uncertified_r is None


def test_cone_solution_certificates(mixed):
    basis = single_evv_bounds(mixed, compute_evv(mixed, UNIFORM3), mixed.alpha).basis
    solution = lower_bound(basis, mixed.alpha)
    r_direct, t_direct = solve_cone_system(basis, mixed.alpha)
    assert r_direct == pytest.approx(solution.r_star, rel=1e-9)
    assert t_direct == pytest.approx(solution.t, abs=1e-9)
    assert solution.t.sum() == pytest.approx(1.0)
    assert np.all(solution.t >= 0.0)
    assert np.abs(basis.U @ solution.t - solution.r_star * mixed.alpha).max() <= 1e-8


def test_zero_determinant_column_can_be_dropped():
    basis = _basis((1.0, 1.0, 0.0), (0.0, 1.0, 1.0), (1.0, 0.0, 1.0))
    alpha = np.array([0.25, 0.5, 0.25])
    report = cone_membership(basis, alpha)
    assert report.status is ConeStatus.BOUNDARY
    solution = lower_bound(basis, alpha, report)
    assert solution.r_star == pytest.approx(2.0)
    assert solution.t[2] == pytest.approx(0.0, abs=1e-12)
    shrunk = basis.without([2])
    assert lower_bound(shrunk, alpha).r_star == pytest.approx(solution.r_star, rel=1e-9)


def test_off_span_claims_are_outside():
    basis = _basis((1.0, 1.0, 0.0), (0.0, 1.0, 1.0))
    report = cone_membership(basis, (0.2, 0.3, 0.5))
    assert report.status is ConeStatus.OUTSIDE
    assert report.span_residual > 1e-8


def test_upper_bound_examples(mixed):
    rec = compute_evv(mixed, UNIFORM3)
    value, idx = upper_bound([rec], mixed.alpha)
    assert value == pytest.approx(1.6594, abs=5e-4) and idx == 0

    alpha = np.array([0.2, 0.3, 0.5])
    assert upper_bound([EvvRecord.from_values((0.6, 0.3, 0.1), alpha)], alpha)[0] == pytest.approx(1.0)

    evvs = compute_evvs(mixed, WORKED_BETAS)
    running = np.inf
    for k in range(1, len(evvs) + 1):
        value, _ = upper_bound(evvs[:k], mixed.alpha)
        assert value <= running
        running = value


def test_supporting_bounds_skips_dependent_evvs(mixed):
    evvs = compute_evvs(mixed, WORKED_BETAS)
    duplicate = EvvRecord.from_values((0.5, 0.25, 0.25), 2.0 * evvs[0].u)
    result = supporting_bounds([evvs[0], duplicate, evvs[1], evvs[2]], mixed.alpha)
    assert result.basis.m == 3
    reference = supporting_bounds(evvs, mixed.alpha)
    assert result.cone_status is reference.cone_status
    assert result.uncertified_r == pytest.approx(reference.uncertified_r, rel=1e-12)


def test_legut_bounds_mixed(mixed):
    rec = compute_evv(mixed, UNIFORM3)
    result = legut_bounds(mixed, rec, mixed.alpha)
    assert result.lower == pytest.approx(1.3437, abs=5e-4)
    assert result.upper == pytest.approx(1.6594, abs=5e-4)
    single = single_evv_bounds(mixed, rec, mixed.alpha)
    assert single.lower == pytest.approx(result.lower, rel=1e-9)
    assert single.upper == pytest.approx(result.upper, rel=1e-9)


def test_legut_identical_measures():
    inst = identical_instance(3)
    result = legut_bounds(inst, compute_evv(inst, UNIFORM3), inst.alpha)
    assert result.lower == pytest.approx(1.0)
    assert result.upper == pytest.approx(1.0)


def test_legut_two_agent_arithmetic(linear):
    rec = EvvRecord.from_values((0.5, 0.5), (0.3, 0.9))
    result = legut_bounds(linear, rec, linear.alpha)
    assert result.lower == pytest.approx(1.125)
    assert result.upper == pytest.approx(1.2)


def test_single_evv_bounds_with_unequal_masses():
    inst = validate_instance(
        {
            "claims": [1 / 3, 1 / 3, 1 / 3],
            "agents": [{"pieces": [{"interval": [0, 1], "coeffs": [c]}]} for c in (2.0, 1.0, 1.0)],
        }
    )
    rec = EvvRecord.from_values(UNIFORM3, (1.0, 0.5, 0.5))
    result = single_evv_bounds(inst, rec, inst.alpha)
    assert result.lower == pytest.approx(1.5)
    assert result.upper == pytest.approx(2.0)
    corners = [EvvRecord.from_values(np.eye(3)[i], np.eye(3)[i] * inst.masses[i]) for i in range(3)]
    corners[0] = rec
    assert supporting_bounds(corners, inst.alpha).lower == pytest.approx(result.lower, rel=1e-9)

    with pytest.raises(NotNormalizedError):
        legut_bounds(inst, rec, inst.alpha)


def test_single_evv_on_claim_ray(identical):
    rec = EvvRecord.from_values((0.5, 0.3, 0.2), identical.alpha)
    result = single_evv_bounds(identical, rec, identical.alpha)
    assert result.lower == pytest.approx(1.0)
    assert result.upper == pytest.approx(1.0)


def test_single_evv_bound_errors(mixed):
    with pytest.raises(DegenerateEvvError):
        single_evv_bounds(mixed, EvvRecord.from_values(UNIFORM3, (0.0, 0.0, 0.0)), mixed.alpha)
    with pytest.raises(NotNormalizedError):
        legut_bounds(mixed, compute_evv(mixed, (0.4, 0.3, 0.3)), mixed.alpha)


def test_bounds_result_rejects_crossed_bounds():
    with pytest.raises(NumericalInconsistencyError):
        BoundsResult(upper=1.0, argmin_upper=0, cone_status=ConeStatus.INTERIOR, lower=1.1)
    assert BoundsResult(1.0, 0, ConeStatus.OUTSIDE).gap == np.inf


def test_sandwich_on_random_instances(random_instance):
    rng = np.random.default_rng(21)
    for _ in range(10):
        inst = random_instance(rng, int(rng.integers(2, 5)))
        evvs = compute_evvs(inst, rng.dirichlet(np.ones(inst.n), inst.n))
        result = supporting_bounds(evvs, inst.alpha)
        if result.cone_status is not ConeStatus.OUTSIDE:
            assert result.lower <= result.upper + 1e-9


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cramer_weights_match_direct_solution(n):
    rng = np.random.default_rng(300 + n)
    for _ in range(25):
        m = int(rng.integers(1, n + 1))
        U = rng.uniform(0.05, 1.0, (n, m))
        alpha = U @ rng.dirichlet(np.ones(m))
        alpha /= alpha.sum()
        basis = _basis(*U.T)
        report = cone_membership(basis, alpha)
        assert report.status is not ConeStatus.OUTSIDE
        solution = lower_bound(basis, alpha, report)
        r_direct, t_direct = solve_cone_system(basis, alpha)
        assert solution.r_star == pytest.approx(r_direct, rel=1e-9)
        assert np.allclose(solution.t, t_direct, atol=1e-9)
        assert np.all(solution.t >= 0.0)
        assert solution.t.sum() == pytest.approx(1.0, abs=1e-12)
        assert np.abs(U @ solution.t - solution.r_star * alpha).max() <= 1e-8


def test_single_evv_bounds_match_corner_basis(random_instance):
    rng = np.random.default_rng(77)
    checked = 0
    for _ in range(10):
        inst = random_instance(rng, int(rng.integers(2, 5)))
        for rec in compute_evvs(inst, rng.dirichlet(np.ones(inst.n), 10)):
            result = single_evv_bounds(inst, rec, inst.alpha)
            j = int(np.argmax(rec.u / inst.alpha))
            corners = [corner_evv(inst, i) for i in range(inst.n)]
            corners[j] = rec
            generic = supporting_bounds(corners, inst.alpha, pool=[rec])
            assert generic.cone_status is not ConeStatus.OUTSIDE
            assert result.lower == pytest.approx(generic.lower, rel=1e-9)
            assert result.upper == pytest.approx(generic.upper, rel=1e-12)
            checked += 1
    assert checked == 100


def test_legut_matches_single_evv_under_unit_masses():
    rng = np.random.default_rng(78)
    for _ in range(100):
        n = int(rng.integers(2, 6))
        inst = identical_instance(n).with_claims(0.5 * rng.dirichlet(np.ones(n)) + 0.5 / n)
        u = rng.uniform(0.05, 1.0, n)
        u *= max(1.0, 1.05 / u.sum())
        rec = EvvRecord.from_values(np.full(n, 1.0 / n), u)
        legut = legut_bounds(inst, rec, inst.alpha)
        single = single_evv_bounds(inst, rec, inst.alpha)
        assert legut.lower == pytest.approx(single.lower, rel=1e-12)
        assert legut.upper == pytest.approx(single.upper, rel=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_identical_measures_give_unit_bounds_from_several_evvs(n):
    rng = np.random.default_rng(40 + n)
    inst = identical_instance(n).with_claims(0.5 * rng.dirichlet(np.ones(n)) + 0.5 / n)
    betas = [0.5 * np.eye(n)[k] + 0.5 / n for k in range(n)]
    evvs = compute_evvs(inst, betas + [np.full(n, 1.0 / n)])
    result = supporting_bounds(evvs[:n], inst.alpha, pool=evvs)
    assert result.cone_status is not ConeStatus.OUTSIDE
    assert result.lower == pytest.approx(1.0, abs=1e-6)
    assert result.upper == pytest.approx(1.0, abs=1e-6)
