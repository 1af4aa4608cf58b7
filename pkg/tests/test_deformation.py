from fractions import Fraction

import pytest

from opcalc.model import deformation
from opcalc.model.algebras import zero_algebra
from opcalc.model.cohomology import coboundary
from opcalc.model.deformation import DeformationPair
from opcalc.model.endop import make_operation, random_operation, zero
from opcalc.model.exceptions import AssociativityRequiredError, DimensionError, DomainError
from opcalc.model.flows import associator, bracket, compose_sum
from tests.helpers import draw_operations


def random_pair(seed, dim=2):
    mu, mu0 = draw_operations(seed, dim, [2, 2])
    return DeformationPair(mu, mu0)


def test_pair_keeps_omega_consistent(dual_numbers, nonassoc):
    pair = DeformationPair(dual_numbers.mu, nonassoc.mu)
    assert pair.omega == nonassoc.mu - dual_numbers.mu
    assert DeformationPair.from_omega(dual_numbers.mu, pair.omega) == pair
    with pytest.raises(DomainError):
        DeformationPair(dual_numbers.mu, make_operation(2, 1, [1, 0, 0, 1]))


def test_zero_deformation_has_zero_curvature(nonassoc):
    assert deformation.curvature(nonassoc.mu, zero(2, 2)).is_zero()


@pytest.mark.parametrize("seed", range(20))
def test_maurer_cartan_and_bianchi(seed):
    pair = random_pair(seed)
    assert deformation.maurer_cartan_residual(pair).is_zero()
    assert deformation.bianchi_residual(pair).is_zero()
    assert deformation.bianchi_reduction_residual(pair).is_zero()


@pytest.mark.parametrize("seed", range(5))
def test_albert_residuals(seed):
    (mu,) = draw_operations(seed, 2, [2])
    for residual in deformation.albert_residuals(mu):
        assert residual.is_zero()


@pytest.mark.parametrize("seed", range(5))
def test_coboundary_deformation_curvature(dual_numbers, seed):
    mu = dual_numbers.mu
    omega = deformation.differential(mu, random_operation(2, 1, seed=seed))
    assert deformation.curvature(mu, omega) == bracket(omega, omega) * Fraction(1, 2)


def test_quasi_associative_coboundary_deformation(dual_numbers):
    mu = dual_numbers.mu
    alpha = make_operation(2, 1, [0, 1, 0, 0])
    omega = deformation.differential(mu, alpha)
    assert omega == make_operation(2, 2, [0, -1, 0, 0, 0, 0, 0, 0])
    pair = DeformationPair.from_omega(mu, omega)
    assert associator(pair.mu0).is_zero()
    assert deformation.curvature(mu, omega).is_zero()
    assert deformation.master_equation_residual(omega).is_zero()
    assert deformation.differential(mu, omega).is_zero()


def test_transported_pair_is_quasi_associative(dual_numbers):
    pair = deformation.quasi_associative_pair(dual_numbers.mu, [[2, 1], [1, 1]])
    omega = pair.omega
    assert not omega.is_zero()
    assert deformation.curvature(pair.mu, omega).is_zero()
    assert compose_sum(omega, omega) == -deformation.differential(pair.mu, omega)


@pytest.mark.parametrize("seed", range(5))
def test_covariant_derivative(seed):
    mu, omega, f = draw_operations(seed, 2, [2, 2, 1 + seed % 3])
    mu0 = mu + omega
    nabla = deformation.covariant_derivative(mu, omega, f)
    assert nabla == -coboundary(mu0, f)
    assert deformation.covariant_derivative(mu, omega, nabla) == bracket(f, associator(mu0))
    assert deformation.covariant_derivative(mu, zero(2, 2), f) == deformation.differential(mu, f)


def test_flat_covariant_square_does_not_force_zero_associator(nonassoc):
    mu = zero_algebra(2).mu
    omega = nonassoc.mu
    curvature0 = associator(mu + omega)
    assert not curvature0.is_zero()
    once = deformation.covariant_derivative(mu, omega, curvature0)
    assert deformation.covariant_derivative(mu, omega, once).is_zero()


@pytest.mark.parametrize("dual_mode", ["self_dual", "anti_self_dual"])
def test_gauge_residuals_over_associative_ground(dual_numbers, dual_mode):
    pair = DeformationPair.from_omega(dual_numbers.mu, random_operation(2, 2, seed=17))
    report = deformation.gauge_residuals(pair, dual_mode)
    assert report.Omega == report.A0 - report.A
    assert report.all_zero
    assert report.dual == (report.Omega if dual_mode == "self_dual" else -report.Omega)
    assert set(report.max_abs_coeffs()) == {
        "mc_residual",
        "bianchi_residual",
        "gauge_residual_1",
        "gauge_residual_2",
        "conservation_residual",
    }


def test_gauge_residuals_with_supplied_current(dual_numbers):
    pair = DeformationPair(dual_numbers.mu, dual_numbers.mu)
    current = random_operation(2, 4, seed=5)
    report = deformation.gauge_residuals(pair, "self_dual", current=current)
    assert report.gauge_residual_2 == -current
    assert not report.all_zero


def test_gauge_residuals_argument_errors(dual_numbers, nonassoc):
    pair = DeformationPair(dual_numbers.mu, nonassoc.mu)
    with pytest.raises(DomainError):
        deformation.gauge_residuals(pair, "custom")
    with pytest.raises(DimensionError):
        deformation.gauge_residuals(pair, "custom", custom_dual=zero(2, 2))
    with pytest.raises(DimensionError):
        deformation.gauge_residuals(pair, current=zero(2, 3))
    with pytest.raises(DomainError):
        deformation.gauge_residuals(pair, "mirror")


def test_gauge_residuals_need_associative_ground(dual_numbers, nonassoc):
    pair = DeformationPair(nonassoc.mu, dual_numbers.mu)
    with pytest.raises(AssociativityRequiredError):
        deformation.gauge_residuals(pair)
    report = deformation.deformation_report(pair)
    assert report.gauge_residual_1 is None
    assert report.mc_residual.is_zero()
    assert report.bianchi_residual.is_zero()


@pytest.mark.slow
def test_maurer_cartan_and_bianchi_on_100_pairs():
    for seed in range(100):
        pair = random_pair(seed)
        assert deformation.curvature(pair.mu, pair.omega) == associator(pair.mu0) - associator(pair.mu), seed
        assert deformation.bianchi_residual(pair).is_zero(), seed


@pytest.mark.parametrize("seed", range(3))
def test_gauge_residuals_with_custom_dual(dual_numbers, seed):
    pair = DeformationPair.from_omega(dual_numbers.mu, random_operation(2, 2, seed=seed + 40))
    custom = random_operation(2, 3, seed=seed + 80)
    report = deformation.gauge_residuals(pair, "custom", custom_dual=custom)
    assert report.dual == custom
    assert report.current == -coboundary(pair.mu0, custom)
    assert report.gauge_residual_2.is_zero()
    # ∇J = ∇∇Ω† = [Ω†, A0] and Ω = A0 over an associative ground
    assert report.Omega == report.A0
    assert report.conservation_residual == bracket(custom, report.A0) - bracket(custom, report.Omega)
    assert report.conservation_residual.is_zero()
    assert report.all_zero
