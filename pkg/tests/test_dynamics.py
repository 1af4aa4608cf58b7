import itertools
import math

import numpy as np
import pytest

from opcalc.model import dynamics
from opcalc.model.cohomology import coboundary, cocycle_basis, is_cocycle
from opcalc.model.deformation import DeformationPair, curvature
from opcalc.model.dynamics import DynamicsConfig
from opcalc.model.endop import Lcg64, make_operation, random_operation, unit, zero
from opcalc.model.exceptions import AssociativityRequiredError, DomainError, PreconditionError


def weight(index):
    return 1 if index == 1 else 0


def random_cocycle(mu, n, seed):
    rng = Lcg64(seed)
    result = zero(mu.dim, n)
    for f in cocycle_basis(mu, n):
        result = result + f * rng.draw(3)
    return result


def test_config_validation():
    assert DynamicsConfig(1.0, 1.0, 0.1).steps == 10
    assert DynamicsConfig(1.0, 0.0, 0.1).steps == 0
    assert DynamicsConfig(1.0, 1.0, 0.1).remainder == 0.0
    uneven = DynamicsConfig(1.0, 1.0, 0.3)
    assert uneven.steps == 3
    assert uneven.remainder == pytest.approx(0.1)
    with pytest.raises(DomainError):
        DynamicsConfig(1.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        DynamicsConfig(math.inf, 1.0, 0.1)
    with pytest.raises(DomainError):
        DynamicsConfig(1.0, 1.0, 0.1, method="euler")


def test_zero_rate_is_constant(dual_numbers, derivation):
    f0 = random_operation(2, 2, seed=4)
    trajectory = dynamics.heisenberg_flow(dual_numbers.mu, derivation, f0, DynamicsConfig(0.0, 1.0, 0.1))
    assert len(trajectory.times) == 11
    for state in trajectory.states:
        assert np.array_equal(state, trajectory.states[0])


def test_flow_of_mu_is_constant(dual_numbers, derivation):
    mu = dual_numbers.mu
    trajectory = dynamics.heisenberg_flow(mu, derivation, mu, DynamicsConfig(1.0, 1.0, 0.01))
    initial = np.array([float(c) for c in mu.coeffs]).reshape(2, 2, 2)
    assert np.max(np.abs(trajectory.final - initial)) < 1e-12


def test_adjoint_of_derivation_is_diagonal(derivation):
    matrix = dynamics.adjoint_matrix(derivation, 2)
    indices = list(itertools.product(range(2), repeat=3))
    expected = [weight(k) - weight(j1) - weight(j2) for j1, j2, k in indices]
    assert np.array_equal(matrix, np.diag(expected).astype(float))


def test_flow_matches_exponential(dual_numbers, derivation):
    f0 = random_operation(2, 2, seed=9)
    trajectory = dynamics.heisenberg_flow(dual_numbers.mu, derivation, f0, DynamicsConfig(0.5, 1.0, 1e-2))
    eigenvalues = np.diag(dynamics.adjoint_matrix(derivation, 2))
    exact = np.array([float(c) for c in f0.coeffs]) * np.exp(0.5 * eigenvalues)
    assert np.max(np.abs(trajectory.final.reshape(-1) - exact)) < 1e-9


def test_uneven_step_lands_on_end_time(dual_numbers, derivation):
    f0 = random_operation(2, 2, seed=9)
    trajectory = dynamics.heisenberg_flow(dual_numbers.mu, derivation, f0, DynamicsConfig(0.1, 1.0, 0.3))
    assert trajectory.times[:4] == pytest.approx([0.0, 0.3, 0.6, 0.9])
    assert trajectory.times[-1] == 1.0
    assert len(trajectory.states) == len(trajectory.defects) == 5
    eigenvalues = np.diag(dynamics.adjoint_matrix(derivation, 2))
    exact = np.array([float(c) for c in f0.coeffs]) * np.exp(0.1 * eigenvalues)
    assert np.max(np.abs(trajectory.final.reshape(-1) - exact)) < 1e-6

    short = dynamics.heisenberg_flow(dual_numbers.mu, derivation, f0, DynamicsConfig(0.1, 0.05, 0.1))
    assert short.times == [0.0, 0.05]


def test_cocycles_stay_cocycles(dual_numbers, derivation):
    f0 = random_cocycle(dual_numbers.mu, 2, seed=21)
    trajectory = dynamics.heisenberg_flow(dual_numbers.mu, derivation, f0, DynamicsConfig(1.0, 1.0, 1e-3))
    assert trajectory.times[-1] == pytest.approx(1.0)
    assert trajectory.max_defect() < 1e-9


def test_superposition(dual_numbers, derivation):
    f0, g0 = random_operation(2, 1, seed=1), random_operation(2, 1, seed=2)
    config = DynamicsConfig(0.7, 1.0, 0.05)
    combined = dynamics.heisenberg_flow(dual_numbers.mu, derivation, 2 * f0 - 3 * g0, config).final
    separate = (
        2 * dynamics.heisenberg_flow(dual_numbers.mu, derivation, f0, config).final
        - 3 * dynamics.heisenberg_flow(dual_numbers.mu, derivation, g0, config).final
    )
    assert np.max(np.abs(combined - separate)) < 1e-9


def test_fourth_order_convergence(dual_numbers, derivation):
    f0 = make_operation(2, 2, [1] * 8)
    factor = dynamics.convergence_factor(dual_numbers.mu, derivation, f0, 1.0, 1.0, 0.1)
    assert 12 <= factor <= 20


def test_scalar_model_is_static(scalar, dual_numbers):
    assert dynamics.is_static(scalar.mu)
    assert not dynamics.is_static(dual_numbers.mu)
    f0 = make_operation(1, 3, [2])
    trajectory = dynamics.heisenberg_flow(scalar.mu, zero(1, 1), f0, DynamicsConfig(1.0, 1.0, 0.1))
    assert all(state.reshape(-1).tolist() == [2.0] for state in trajectory.states)


def test_hamiltonian_preconditions(dual_numbers, nonassoc, derivation):
    config = DynamicsConfig(1.0, 1.0, 0.1)
    f0 = random_operation(2, 1, seed=3)
    with pytest.raises(PreconditionError):
        dynamics.heisenberg_flow(dual_numbers.mu, unit(2), f0, config)
    with pytest.raises(PreconditionError):
        dynamics.heisenberg_flow(dual_numbers.mu, dual_numbers.mu, f0, config)
    with pytest.raises(AssociativityRequiredError):
        dynamics.heisenberg_flow(nonassoc.mu, derivation, f0, config)


def test_curvature_flow(dual_numbers, derivation):
    mu = dual_numbers.mu
    flat = dynamics.curvature_flow(mu, derivation, DeformationPair(mu, mu), DynamicsConfig(1.0, 1.0, 0.1))
    assert all(not state.any() for state in flat.states)

    pair = DeformationPair.from_omega(mu, random_operation(2, 2, seed=6))
    frozen = dynamics.curvature_flow(mu, derivation, pair, DynamicsConfig(0.0, 1.0, 0.1))
    assert frozen.degree == 3
    for state in frozen.states:
        assert np.array_equal(state, frozen.states[0])


def test_curvature_flow_carries_its_coboundary(dual_numbers, derivation):
    mu = dual_numbers.mu
    config = DynamicsConfig(1.0, 0.5, 0.05)
    pair = DeformationPair.from_omega(mu, random_operation(2, 2, seed=31))
    trajectory = dynamics.curvature_flow(mu, derivation, pair, config)
    # δ commutes with ad_h, so max|δΩ(t)| follows the flow of δΩ(0)
    image = dynamics.heisenberg_flow(mu, derivation, coboundary(mu, curvature(mu, pair.omega)), config)
    expected = [float(np.max(np.abs(state))) for state in image.states]
    assert trajectory.defects == pytest.approx(expected, abs=1e-9)


def test_curvature_flow_keeps_closed_curvature_closed(dual_numbers, derivation):
    mu = dual_numbers.mu
    omega = random_cocycle(mu, 2, seed=8)
    assert is_cocycle(mu, curvature(mu, omega))
    trajectory = dynamics.curvature_flow(
        mu, derivation, DeformationPair.from_omega(mu, omega), DynamicsConfig(1.0, 1.0, 0.01)
    )
    assert trajectory.max_defect() < 1e-9
