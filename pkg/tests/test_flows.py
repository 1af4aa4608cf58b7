import pytest

from opcalc.model import flows
from opcalc.model.endop import make_operation, unit, zero
from opcalc.model.exceptions import DomainError, EmptyFlowError
from tests.helpers import draw_degrees, draw_operations


def scalar_op(degree, value):
    return make_operation(1, degree, [value])


def closed_form_factor(a, b):
    """Total composition of scalar operations with reduced degrees a, b is f·g times this."""
    if a < 0:
        return 0
    if b % 2 == 0:
        return a + 1
    return 1 if a % 2 == 0 else 0


def test_ground_simplex_sizes():
    assert len(flows.ground_simplex(1, 3)) == 3
    assert flows.ground_simplex(2, 3, 2).indices == ((0, 2), (0, 3), (1, 3))
    assert flows.ground_simplex(3, 3, 1, 1).indices == ((0, 1, 2),)
    assert len(flows.ground_simplex(2, 1, 3)) == 0
    with pytest.raises(DomainError):
        flows.ground_simplex(4, 3)


def test_total_compose_needs_positive_degree():
    with pytest.raises(EmptyFlowError):
        flows.total_compose(make_operation(2, 0, [1, 0]), unit(2))


def test_empty_simplex_gives_zero_of_right_degree():
    h = make_operation(2, 1, [1, 2, 3, 4])
    f, g = draw_operations(3, 2, [2, 3])
    assert flows.flow2(h, f, g) == zero(2, 4)


@pytest.mark.parametrize("deg_f", [1, 2, 3, 4])
@pytest.mark.parametrize("deg_g", [0, 1, 2, 3])
def test_scalar_total_composition_closed_form(deg_f, deg_g):
    f, g = scalar_op(deg_f, 3), scalar_op(deg_g, 5)
    assert flows.total_compose(f, g).coeffs == [15 * closed_form_factor(deg_f - 1, deg_g - 1)]


def test_unit_cup_square_is_minus_mu(dual_numbers):
    identity = unit(2)
    assert flows.cup(dual_numbers.mu, identity, identity) == -dual_numbers.mu


def test_scalar_cup_sign():
    mu = scalar_op(2, 1)
    assert flows.cup(mu, scalar_op(1, 2), scalar_op(3, 5)).coeffs == [-10]
    assert flows.cup(mu, scalar_op(2, 2), scalar_op(3, 5)).coeffs == [10]


def test_bracket_of_mu_with_itself(nonassoc):
    mu = nonassoc.mu
    assert flows.bracket(mu, mu) == 2 * flows.associator(mu)
    assert not flows.associator(mu).is_zero()


def test_bracket_of_two_constants_is_undefined():
    a = make_operation(2, 0, [1, 0])
    with pytest.raises(DomainError):
        flows.bracket(a, a)


def test_associator_of_associative_algebras(dual_numbers, mat2, scalar):
    for algebra in (dual_numbers, mat2, scalar):
        assert flows.associator(algebra.mu).is_zero()


def test_cup_associator_on_unit(nonassoc):
    mu, identity = nonassoc.mu, unit(2)
    square = flows.associator(mu)
    left = flows.cup(mu, flows.cup(mu, identity, identity), identity) - flows.cup(
        mu, identity, flows.cup(mu, identity, identity)
    )
    assert left == -square
    assert flows.flow3(square, identity, identity, identity) == square
    assert flows.cup_associator_residual(mu, identity, identity, identity).is_zero()


@pytest.mark.parametrize("seed", range(12))
def test_three_operation_identities(seed):
    h, f, g = draw_operations(seed, 2, draw_degrees(seed, 3, 3))
    assert flows.getzler_residual(h, f, g).is_zero()
    assert flows.vinberg_residual(h, f, g).is_zero()
    assert flows.jacobiator(h, f, g).is_zero()
    assert flows.generalized_jacobi_residual(h, f, g).is_zero()
    for residual in flows.r_operator_residuals(f, g, h) + flows.right_translation_residuals(h, f, g):
        assert residual.is_zero()


@pytest.mark.parametrize("seed", range(12))
def test_cup_identities(seed):
    mu, h, f, g = draw_operations(seed, 2, [2] + draw_degrees(seed, 3, 2))
    assert flows.right_leibniz_residual(mu, h, f, g).is_zero()
    assert flows.cup_relation_residual(mu, f, g).is_zero()
    assert flows.cup_endomorphism_residual(mu, f, g).is_zero()
    assert flows.cup_associator_residual(mu, h, f, g).is_zero()
    assert flows.associator_endomorphism_residual(mu).is_zero()


def test_cup_accepts_constants(dual_numbers):
    a = make_operation(2, 0, [0, 1])
    b = make_operation(2, 0, [1, 1])
    assert flows.cup(dual_numbers.mu, a, b).coeffs == [0, 1]


def test_r_operator_is_right_bracket(nonassoc):
    mu = nonassoc.mu
    f = make_operation(2, 1, [1, 2, 3, 4])
    assert flows.r_operator(mu, mu) == 2 * flows.associator(mu)
    assert flows.r_operator(mu, f) == flows.bracket(f, mu)
    assert flows.r_operator(f, mu) == -flows.r_operator(mu, f)


@pytest.mark.parametrize("seed", range(20))
def test_r_operator_laws(seed):
    f, g, h = draw_operations(seed, 2, draw_degrees(seed, 3, 3))
    first, second = flows.r_operator_residuals(f, g, h)
    assert first.is_zero()
    assert second.is_zero()
