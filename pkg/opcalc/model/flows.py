"""Composition flows, cup product and Gerstenhaber bracket."""

from dataclasses import dataclass

from opcalc.model.endop import _check_same_dim, partial_compose, substitute, zero
from opcalc.model.exceptions import DomainError, EmptyFlowError
from opcalc.model.utils import sign


@dataclass(frozen=True)
class GroundSimplex:
    order: int
    indices: tuple

    def __len__(self):
        return len(self.indices)


def ground_simplex(order, deg_h, deg_f=None, deg_g=None):
    """Index tuples summed over by the flow of the given order.

    order 1: i with 0 <= i <= |h|
    order 2: (i, j) with i <= |h|-1 and i+f <= j <= |h|+|f|
    order 3: (i, j, k) with i <= |h|-2, i+f <= j <= |h|+|f|-1, j+g <= k <= |h|+|f|+|g|
    """
    h_ = deg_h - 1
    if order == 1:
        indices = tuple(range(0, h_ + 1))
    elif order == 2:
        f_ = deg_f - 1
        indices = tuple((i, j) for i in range(0, h_) for j in range(i + deg_f, h_ + f_ + 1))
    elif order == 3:
        f_, g_ = deg_f - 1, deg_g - 1
        indices = tuple(
            (i, j, k)
            for i in range(0, h_ - 1)
            for j in range(i + deg_f, h_ + f_)
            for k in range(j + deg_g, h_ + f_ + g_ + 1)
        )
    else:
        raise DomainError(f"flows are defined for orders 1, 2 and 3, got {order}")
    return GroundSimplex(order, indices)


def _target(dim, degree):
    if degree < 0:
        raise DomainError(f"flow result would have negative degree {degree}")
    return zero(dim, degree)


def compose_sum(h, f):
    """Σ_i h∘_i f; the zero operation when h has degree 0."""
    _check_same_dim(h, f)
    result = _target(h.dim, h.degree + f.grading)
    for i in ground_simplex(1, h.degree).indices:
        result = result + partial_compose(h, f, i)
    return result


def total_compose(h, f):
    """⟨h|f⟩ = h∘f."""
    if h.degree == 0:
        raise EmptyFlowError("total composition needs deg h >= 1")
    return compose_sum(h, f)


def flow2(h, f, g):
    """⟨h|fg⟩ = Σ (h∘_i f)∘_j g over the order-2 ground simplex."""
    _check_same_dim(h, f, g)
    result = _target(h.dim, h.degree + f.grading + g.grading)
    for i, j in ground_simplex(2, h.degree, f.degree).indices:
        result = result + partial_compose(partial_compose(h, f, i), g, j)
    return result


def flow3(h, f, g, b):
    _check_same_dim(h, f, g, b)
    result = _target(h.dim, h.degree + f.grading + g.grading + b.grading)
    for i, j, k in ground_simplex(3, h.degree, f.degree, g.degree).indices:
        result = result + partial_compose(partial_compose(partial_compose(h, f, i), g, j), b, k)
    return result


def _check_multiplication(mu):
    if mu.degree != 2:
        raise DomainError(f"expected a binary multiplication, got degree {mu.degree}")


def cup(mu, f, g):
    """f⌣g = (-1)^f (μ∘_0 f)∘_f g."""
    _check_multiplication(mu)
    _check_same_dim(mu, f, g)
    return partial_compose(partial_compose(mu, f, 0), g, f.degree) * sign(f.degree)


def associator(mu):
    """μ² = μ∘μ."""
    _check_multiplication(mu)
    return total_compose(mu, mu)


def bracket(f, g):
    """[f, g] = f∘g - (-1)^(|f||g|) g∘f; compositions with a degree-0 left side vanish."""
    _check_same_dim(f, g)
    if f.degree + g.degree < 1:
        raise DomainError("the bracket of two degree-0 operations is not defined")
    return compose_sum(f, g) - compose_sum(g, f) * sign(f.grading * g.grading)


def jacobiator(f, g, h):
    """Graded Jacobi sum; zero for every triple."""
    first = bracket(bracket(f, g), h) * sign(f.grading * h.grading)
    second = bracket(bracket(g, h), f) * sign(g.grading * f.grading)
    third = bracket(bracket(h, f), g) * sign(h.grading * g.grading)
    return first + second + third


def composition_associator(h, f, g):
    """(h, f, g) = (h∘f)∘g - h∘(f∘g)."""
    return compose_sum(compose_sum(h, f), g) - compose_sum(h, compose_sum(f, g))


def getzler_residual(h, f, g):
    """(h, f, g) - ⟨h|fg⟩ - (-1)^(|f||g|) ⟨h|gf⟩."""
    return composition_associator(h, f, g) - flow2(h, f, g) - flow2(h, g, f) * sign(f.grading * g.grading)


def vinberg_residual(h, f, g):
    return composition_associator(h, f, g) - composition_associator(h, g, f) * sign(f.grading * g.grading)


def generalized_jacobi_residual(h, f, g):
    """[[h, f], g] - [h, [f, g]] - (-1)^(|f||g|) [[h, g], f]."""
    return (
        bracket(bracket(h, f), g)
        - bracket(h, bracket(f, g))
        - bracket(bracket(h, g), f) * sign(f.grading * g.grading)
    )


def r_operator(f, g):
    """R_f g = [g, f]."""
    return bracket(g, f)


def r_operator_residuals(f, g, h):
    """Residuals of the two R-operator laws, applied to h.

    [R_f, R_g] = R_[g, f] with the graded commutator R_f R_g - (-1)^(|f||g|) R_g R_f, and
    R_f [g, h] = (-1)^(|f||h|) [R_f g, h] + [g, R_f h].
    """
    commutator = r_operator(f, r_operator(g, h)) - r_operator(g, r_operator(f, h)) * sign(f.grading * g.grading)
    first = commutator - r_operator(bracket(g, f), h)
    second = (
        r_operator(f, bracket(g, h))
        - bracket(r_operator(f, g), h) * sign(f.grading * h.grading)
        - bracket(g, r_operator(f, h))
    )
    return first, second


def right_translation_residuals(h, f, g):
    """The same laws for right translation h -> ⟨h|f⟩.

    ⟨⟨h|f⟩|g⟩ - (-1)^(|f||g|) ⟨⟨h|g⟩|f⟩ = ⟨h|[f, g]⟩ and
    ⟨⟨h|f⟩|g⟩ - ⟨h|f∘g⟩ = ⟨h|fg⟩ + (-1)^(|f||g|) ⟨h|gf⟩.
    """
    commutator = compose_sum(compose_sum(h, f), g) - compose_sum(compose_sum(h, g), f) * sign(f.grading * g.grading)
    first = commutator - compose_sum(h, bracket(f, g))
    second = (
        compose_sum(compose_sum(h, f), g)
        - compose_sum(h, compose_sum(f, g))
        - flow2(h, f, g)
        - flow2(h, g, f) * sign(f.grading * g.grading)
    )
    return first, second


def right_leibniz_residual(mu, h, f, g):
    """⟨f⌣g|h⟩ - f⌣⟨g|h⟩ - (-1)^(|h|g) ⟨f|h⟩⌣g."""
    return (
        compose_sum(cup(mu, f, g), h)
        - cup(mu, f, compose_sum(g, h))
        - cup(mu, compose_sum(f, h), g) * sign(h.grading * g.degree)
    )


def cup_relation_residual(mu, f, g):
    """f⌣g - (-1)^f ⟨μ|fg⟩."""
    return cup(mu, f, g) - flow2(mu, f, g) * sign(f.degree)


def tensor_product_compose(mu, f, g):
    """μ∘(f⊗g) computed by substituting into both slots of μ directly."""
    return substitute(substitute(mu, f, 0), g, f.degree)


def cup_endomorphism_residual(mu, f, g):
    """f⌣g - (-1)^(fg) μ∘(f⊗g)."""
    return cup(mu, f, g) - tensor_product_compose(mu, f, g) * sign(f.degree * g.degree)


def associator_endomorphism_residual(mu):
    """μ² - (μ∘(μ⊗1) - μ∘(1⊗μ))."""
    return associator(mu) - (substitute(mu, mu, 0) - substitute(mu, mu, 1))


def cup_associator_residual(mu, f, g, h):
    """(f⌣g)⌣h - f⌣(g⌣h) - (-1)^g ⟨μ²|fgh⟩."""
    left = cup(mu, cup(mu, f, g), h) - cup(mu, f, cup(mu, g, h))
    return left - flow3(associator(mu), f, g, h) * sign(g.degree)
