"""Variations of flows under the coboundary and the Stokes-type identities.

δ̄ of a bilinear expression is the coboundary of the expression minus the
coboundary pushed through each argument with the Koszul sign, so it vanishes
when δ is a derivation of that expression.
"""

from opcalc.model.cohomology import coboundary, flow_left_leibniz_defect, hochschild_coboundary, left_leibniz_defect
from opcalc.model.flows import associator, bracket, compose_sum, cup, flow2
from opcalc.model.utils import sign


def variation_flow1(mu, f, g):
    """δ⟨f|g⟩ - ⟨f|δg⟩ - (-1)^|g| ⟨δf|g⟩."""
    return (
        coboundary(mu, compose_sum(f, g))
        - compose_sum(f, coboundary(mu, g))
        - compose_sum(coboundary(mu, f), g) * sign(g.grading)
    )


def variation_flow2(mu, h, f, g):
    """δ⟨h|fg⟩ - ⟨h|f δg⟩ - (-1)^|g| ⟨h|δf g⟩ - (-1)^(|g|+|f|) ⟨δh|fg⟩."""
    return (
        coboundary(mu, flow2(h, f, g))
        - flow2(h, f, coboundary(mu, g))
        - flow2(h, coboundary(mu, f), g) * sign(g.grading)
        - flow2(coboundary(mu, h), f, g) * sign(g.grading + f.grading)
    )


def variation_cup(mu, f, g):
    """δ(f⌣g) - f⌣δg - (-1)^g δf⌣g."""
    return (
        coboundary(mu, cup(mu, f, g))
        - cup(mu, f, coboundary(mu, g))
        - cup(mu, coboundary(mu, f), g) * sign(g.degree)
    )


def stokes_first_residual(mu, f, g):
    """(-1)^|g| δ̄⟨f|g⟩ - (f⌣g - (-1)^(fg) g⌣f)."""
    commutator = cup(mu, f, g) - cup(mu, g, f) * sign(f.degree * g.degree)
    return variation_flow1(mu, f, g) * sign(g.grading) - commutator


def stokes_second_residual(mu, h, f, g):
    """(-1)^|g| δ̄⟨h|fg⟩ + (⟨h|f⌣g⟩ - ⟨h|f⟩⌣g - (-1)^(|h|f) f⌣⟨h|g⟩)."""
    return variation_flow2(mu, h, f, g) * sign(g.grading) + flow_left_leibniz_defect(mu, h, f, g)


def stokes_bracket_residual(mu, h, f, g):
    """([h, f⌣g] - [h, f]⌣g - (-1)^(|h|f) f⌣[h, g]) + (-1)^|g| δ̄⟨h|fg⟩."""
    return left_leibniz_defect(mu, h, f, g) + variation_flow2(mu, h, f, g) * sign(g.grading)


def stokes_third_residual(mu, f, g):
    """(-1)^|g| δ̄(f⌣g) - ⟨μ²|fg⟩."""
    return variation_cup(mu, f, g) * sign(g.grading) - flow2(associator(mu), f, g)


def bracket_derivation_residual(mu, f, g):
    """δ[f, g] - [f, δg] - (-1)^|g| [δf, g]."""
    return (
        coboundary(mu, bracket(f, g))
        - bracket(f, coboundary(mu, g))
        - bracket(coboundary(mu, f), g) * sign(g.grading)
    )


def coboundary_square_residual(mu, f):
    """δ²f - [f, μ²]."""
    return coboundary(mu, coboundary(mu, f)) - bracket(f, associator(mu))


def hochschild_residual(mu, f):
    return coboundary(mu, f) - hochschild_coboundary(mu, f)
