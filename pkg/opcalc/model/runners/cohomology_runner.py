import logging
from fractions import Fraction

from opcalc.model.cohomology import coboundary_matrix, cohomology_basis, cohomology_dimensions
from opcalc.model.serialization import cohomology_report_to_json, operation_to_json
from opcalc.model.utils import format_rational, to_fraction

logger = logging.getLogger(__name__)


class CohomologyRunner:
    def get_cohomology_output(self, algebra, n_max, with_basis=False):
        report = cohomology_dimensions(algebra, n_max)
        output = cohomology_report_to_json(report)
        output["complex_residual"] = self.complex_residual(algebra.mu, n_max)
        if with_basis:
            output["basis"] = {
                str(n): [operation_to_json(f) for f in cohomology_basis(algebra.mu, n)] for n in range(n_max + 1)
            }
        logger.info("cohomology of %s up to degree %d: %s", algebra.name, n_max, list(report.dimensions))
        return output

    def complex_residual(self, mu, n_max):
        """Largest entry of δ_n δ_(n-1) over 1 <= n <= n_max; zero for an associative mu."""
        worst = Fraction(0)
        for n in range(1, n_max + 1):
            product = coboundary_matrix(mu, n).entries * coboundary_matrix(mu, n - 1).entries
            worst = max([worst] + [abs(to_fraction(x)) for x in product])
        return format_rational(worst)
