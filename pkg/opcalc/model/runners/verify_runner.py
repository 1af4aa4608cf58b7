import logging
from fractions import Fraction

import pandas as pd
from tqdm import tqdm

from opcalc.model import flows, variations
from opcalc.model.deformation import (
    DeformationPair,
    albert_residuals,
    bianchi_reduction_residual,
    bianchi_residual,
    maurer_cartan_residual,
)
from opcalc.model.endop import Lcg64, composition_relation_residuals, partial_compose, unit
from opcalc.model.utils import format_rational

COEFF_BOUND = 3

logger = logging.getLogger(__name__)


def _draw(rng, dim, max_degree, count):
    return [rng.operation(dim, rng.draw_between(1, max_degree), COEFF_BOUND) for _ in range(count)]


def _draw_mu(rng, dim):
    return rng.operation(dim, 2, COEFF_BOUND)


def check_composition_relations(rng, dim, max_degree):
    h, f, g = _draw(rng, dim, max_degree, 3)
    return [residual for _, _, _, residual in composition_relation_residuals(h, f, g)]


def check_unit_axiom(rng, dim, max_degree):
    (f,) = _draw(rng, dim, max_degree, 1)
    identity = unit(dim)
    residuals = [partial_compose(identity, f, 0) - f]
    residuals += [partial_compose(f, identity, i) - f for i in range(f.degree)]
    return residuals


def check_getzler(rng, dim, max_degree):
    return [flows.getzler_residual(*_draw(rng, dim, max_degree, 3))]


def check_vinberg(rng, dim, max_degree):
    return [flows.vinberg_residual(*_draw(rng, dim, max_degree, 3))]


def check_jacobi(rng, dim, max_degree):
    return [flows.jacobiator(*_draw(rng, dim, max_degree, 3))]


def check_generalized_jacobi(rng, dim, max_degree):
    return [flows.generalized_jacobi_residual(*_draw(rng, dim, max_degree, 3))]


def check_r_operator(rng, dim, max_degree):
    return list(flows.r_operator_residuals(*_draw(rng, dim, max_degree, 3)))


def check_right_translation(rng, dim, max_degree):
    return list(flows.right_translation_residuals(*_draw(rng, dim, max_degree, 3)))


def check_coboundary_square(rng, dim, max_degree):
    mu = _draw_mu(rng, dim)
    return [variations.coboundary_square_residual(mu, *_draw(rng, dim, max_degree, 1))]


def check_right_derivation(rng, dim, max_degree):
    mu = _draw_mu(rng, dim)
    return [variations.bracket_derivation_residual(mu, *_draw(rng, dim, max_degree, 2))]


def check_hochschild_form(rng, dim, max_degree):
    mu = _draw_mu(rng, dim)
    return [variations.hochschild_residual(mu, *_draw(rng, dim, max_degree, 1))]


def check_right_leibniz(rng, dim, max_degree):
    mu = _draw_mu(rng, dim)
    return [flows.right_leibniz_residual(mu, *_draw(rng, dim, max_degree, 3))]


def check_cup_forms(rng, dim, max_degree):
    mu = _draw_mu(rng, dim)
    f, g = _draw(rng, dim, max_degree, 2)
    return [flows.cup_relation_residual(mu, f, g), flows.cup_endomorphism_residual(mu, f, g)]


def check_cup_associator(rng, dim, max_degree):
    mu = _draw_mu(rng, dim)
    return [flows.cup_associator_residual(mu, *_draw(rng, dim, max_degree, 3))]


def check_stokes_first(rng, dim, max_degree):
    mu = _draw_mu(rng, dim)
    return [variations.stokes_first_residual(mu, *_draw(rng, dim, max_degree, 2))]


def check_stokes_second(rng, dim, max_degree):
    mu = _draw_mu(rng, dim)
    h, f, g = _draw(rng, dim, max_degree, 3)
    return [variations.stokes_second_residual(mu, h, f, g), variations.stokes_bracket_residual(mu, h, f, g)]


def check_stokes_third(rng, dim, max_degree):
    mu = _draw_mu(rng, dim)
    return [variations.stokes_third_residual(mu, *_draw(rng, dim, max_degree, 2))]


def check_albert(rng, dim, max_degree):
    mu = _draw_mu(rng, dim)
    return [flows.associator_endomorphism_residual(mu), *albert_residuals(mu)]


def check_maurer_cartan(rng, dim, max_degree):
    pair = DeformationPair(_draw_mu(rng, dim), _draw_mu(rng, dim))
    return [maurer_cartan_residual(pair)]


def check_bianchi(rng, dim, max_degree):
    pair = DeformationPair(_draw_mu(rng, dim), _draw_mu(rng, dim))
    return [bianchi_residual(pair), bianchi_reduction_residual(pair)]


IDENTITIES = (
    ("composition_relations", check_composition_relations),
    ("unit_axiom", check_unit_axiom),
    ("getzler", check_getzler),
    ("vinberg", check_vinberg),
    ("jacobi", check_jacobi),
    ("generalized_jacobi", check_generalized_jacobi),
    ("r_operator", check_r_operator),
    ("right_translation", check_right_translation),
    ("coboundary_square", check_coboundary_square),
    ("right_derivation", check_right_derivation),
    ("hochschild_form", check_hochschild_form),
    ("right_leibniz", check_right_leibniz),
    ("cup_forms", check_cup_forms),
    ("cup_associator", check_cup_associator),
    ("stokes_first", check_stokes_first),
    ("stokes_second", check_stokes_second),
    ("stokes_third", check_stokes_third),
    ("albert", check_albert),
    ("maurer_cartan", check_maurer_cartan),
    ("bianchi", check_bianchi),
)


class VerifyRunner:
    def __init__(self, identities=IDENTITIES):
        self.identities = identities

    def get_verify_output(self, dim, max_degree, trials, seed):
        """
        Runs every identity on seeded random operations.

        Parameters:
        - dim (int): dimension of the underlying space.
        - max_degree (int): largest degree drawn for random operations.
        - trials (int): random instances per identity.
        - seed (int): seed of the generator shared by all identities.

        Returns:
        - list of dict: one row per identity with trials, failures and the exact max residual.
        """
        rng = Lcg64(seed)
        rows = []
        for name, check in tqdm(self.identities, desc="identities", disable=None):
            for trial in range(trials):
                residuals = check(rng, dim, max_degree)
                worst = max((residual.max_abs_coeff() for residual in residuals), default=Fraction(0))
                rows.append({"identity": name, "trial": trial, "failed": worst != 0, "residual": worst})
        table = pd.DataFrame(rows)

        results = []
        for name, group in table.groupby("identity", sort=False):
            failures = int(group["failed"].sum())
            if failures:
                logger.warning("identity %s failed on %d of %d trials", name, failures, len(group))
            results.append(
                {
                    "identity": name,
                    "trials": int(len(group)),
                    "failures": failures,
                    "max_residual": format_rational(max(group["residual"])),
                }
            )
        return results
