import logging

from opcalc.model.cohomology import is_cocycle
from opcalc.model.dynamics import TOLERANCE, heisenberg_flow, is_static
from opcalc.model.serialization import trajectory_to_json

logger = logging.getLogger(__name__)


class EvolveRunner:
    def get_evolve_output(self, algebra, h, f0, config):
        static = is_static(algebra.mu)
        trajectory = heisenberg_flow(algebra.mu, h, f0, config)
        cocycle_start = is_cocycle(algebra.mu, f0)
        output = {
            "static": static,
            "initial_cocycle": cocycle_start,
            "steps": len(trajectory.times) - 1,
            "max_defect": trajectory.max_defect(),
            "tolerance": TOLERANCE,
            "trajectory": trajectory_to_json(trajectory),
        }
        if static:
            logger.info("H^1 of %s vanishes, the flow is constant", algebra.name)
        # the defect is only an invariant when the flow starts on a cocycle
        passed = trajectory.max_defect() < TOLERANCE if cocycle_start else True
        return output, passed
