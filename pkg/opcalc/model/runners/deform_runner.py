import logging

from opcalc.model.deformation import DeformationPair, deformation_report
from opcalc.model.serialization import deformation_report_to_json

logger = logging.getLogger(__name__)


class DeformRunner:
    def get_deform_output(self, algebra, mu0=None, omega=None, dual_mode="self_dual", custom_dual=None, current=None):
        if mu0 is not None:
            pair = DeformationPair(algebra.mu, mu0)
        else:
            pair = DeformationPair.from_omega(algebra.mu, omega)
        report = deformation_report(pair, dual_mode, custom_dual, current)
        if report.gauge_residual_1 is None:
            logger.warning("ground multiplication of %s is not associative, gauge residuals omitted", algebra.name)
        return report, deformation_report_to_json(report)
