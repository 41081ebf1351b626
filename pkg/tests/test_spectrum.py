"""Closed-form energy solve, independent root-finding routes and sweeps."""
from __future__ import annotations

import math

import numpy as np
import pytest

from wsdirac import (
    DegenerateSuperpotential,
    PhysicalParams,
    QuantumState,
    closed_form_vs_bracketing_gap,
    energy_equation_residual,
    ground_state_energy,
    solve_energy,
    solve_energy_by_bracketing,
    sweep,
)

from conftest import (
    BOUND,
    BOUND_STATE,
    DEGENERATE_STATE,
    NO_REAL_ROOT_STATE,
    random_valid_config,
    reference_params,
)


class TestSolveEnergy:
    def test_roots_zero_the_residual(self, rng):
        for _ in range(20):
            p, state, result = random_valid_config(rng)
            for E in (result.e_upper, result.e_lower):
                assert energy_equation_residual(E, p, state) == \
                    pytest.approx(0.0, abs=1e-8)

    def test_branch_selection(self):
        result = solve_energy(BOUND, BOUND_STATE)
        assert result.roots_real
        assert result.branch == "upper"
        assert result.e_upper >= result.e_lower
        assert result.e_binding == result.e_upper - BOUND.M

    def test_bound_configuration_normalizable(self):
        assert solve_energy(BOUND, BOUND_STATE).normalizable

    def test_reference_root_not_normalizable(self):
        # the selected root of the reference well has a growing analytic profile
        assert not solve_energy(reference_params(0.0), BOUND_STATE).normalizable

    def test_no_real_root_reported_not_raised(self):
        result = solve_energy(reference_params(0.0), NO_REAL_ROOT_STATE)
        assert not result.roots_real
        assert result.e_upper is None and result.e_binding is None

    def test_degenerate_raises(self):
        with pytest.raises(DegenerateSuperpotential):
            solve_energy(reference_params(0.0), DEGENERATE_STATE)
        with pytest.raises(DegenerateSuperpotential):
            energy_equation_residual(5.0, reference_params(0.0), DEGENERATE_STATE)


class TestGroundStateRoute:
    def test_agrees_with_quadratic_route(self, rng):
        for _ in range(20):
            p, state, result = random_valid_config(rng)
            gs = ground_state_energy(p, state)
            assert gs.e_upper == pytest.approx(result.e_upper, abs=1e-10)
            assert gs.e_lower == pytest.approx(result.e_lower, abs=1e-10)

    def test_rejects_excited_states(self):
        with pytest.raises(ValueError):
            ground_state_energy(BOUND, QuantumState(n=1, ell=20, D=3))

    def test_no_real_root(self):
        gs = ground_state_energy(reference_params(0.0), NO_REAL_ROOT_STATE)
        assert not gs.roots_real


class TestBracketingRoute:
    def test_finds_both_roots(self):
        result = solve_energy(BOUND, BOUND_STATE)
        roots = solve_energy_by_bracketing(BOUND, BOUND_STATE)
        assert len(roots) == 2
        assert roots[0] == pytest.approx(result.e_lower, abs=1e-10)
        assert roots[1] == pytest.approx(result.e_upper, abs=1e-10)

    def test_empty_when_no_real_root(self):
        assert solve_energy_by_bracketing(reference_params(0.0),
                                          NO_REAL_ROOT_STATE) == []

    def test_resolves_sub_grid_root_pair(self):
        # the reference roots sit 0.17 fm^-1 apart, closer than the default
        # scan spacing; the vertex-refinement path must still split them
        p, state = reference_params(0.0), BOUND_STATE
        result = solve_energy(p, state)
        roots = solve_energy_by_bracketing(p, state)
        assert len(roots) == 2
        assert roots[1] == pytest.approx(result.e_upper, abs=1e-10)

    def test_gap_metric(self):
        assert closed_form_vs_bracketing_gap(BOUND, BOUND_STATE) < 1e-10
        assert closed_form_vs_bracketing_gap(reference_params(0.0),
                                             NO_REAL_ROOT_STATE) == 0.0


class TestSweep:
    def test_ordering_and_shape(self):
        cells = sweep(reference_params(0.0), [0.0, 0.01], [3], [20, 21], [0])
        assert [(c.alpha_prime, c.ell) for c in cells] == \
            [(0.0, 20), (0.0, 21), (0.01, 20), (0.01, 21)]
        assert all(c.error is None and c.result.roots_real for c in cells)

    def test_degenerate_cell_recorded(self):
        cells = sweep(reference_params(0.0), [0.0], [3], [0, 20], [0])
        assert cells[0].error == "DegenerateSuperpotential"
        assert cells[0].result is None
        assert cells[1].error is None

    def test_no_real_root_cell_recorded(self):
        cells = sweep(reference_params(0.0), [0.0], [3], [5], [0])
        assert cells[0].error == "NoRealRoot"
        assert cells[0].result is not None and not cells[0].result.roots_real

    def test_rejects_empty_grid(self):
        with pytest.raises(ValueError):
            sweep(reference_params(0.0), [], [3], [20], [0])


class TestQuadraticConditioning:
    def test_residual_sign_structure(self):
        # residual is a downward-opening-free quadratic: positive far from
        # the roots, negative between them
        result = solve_energy(BOUND, BOUND_STATE)
        lo, hi = result.e_lower, result.e_upper
        mid = 0.5 * (lo + hi)
        assert energy_equation_residual(mid, BOUND, BOUND_STATE) < 0.0
        assert energy_equation_residual(lo - 1.0, BOUND, BOUND_STATE) > 0.0
        assert energy_equation_residual(hi + 1.0, BOUND, BOUND_STATE) > 0.0

    def test_roots_within_physical_window(self, rng):
        for _ in range(10):
            p, state, result = random_valid_config(rng)
            bound = math.sqrt(p.M**2 + 1.0) + 50.0
            assert abs(result.e_upper) < bound
            assert abs(result.e_lower) < bound
