import logging
import math
import os
from dataclasses import dataclass, field

import numpy as np

from opcalc.model.cohomology import coboundary, coboundary_matrix, cohomology_basis, require_associative
from opcalc.model.deformation import curvature
from opcalc.model.endop import _check_same_dim, basis_operation
from opcalc.model.exceptions import DomainError, PreconditionError
from opcalc.model.flows import bracket

TOLERANCE = float(os.environ.get("OPCALC_TOLERANCE", 1e-9))

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DynamicsConfig:
    rate: float = 1.0
    t_end: float = 1.0
    dt: float = 1e-3
    method: str = "rk4"

    def __post_init__(self):
        if not math.isfinite(self.rate):
            raise DomainError(f"rate must be finite, got {self.rate}")
        if not (math.isfinite(self.t_end) and self.t_end >= 0):
            raise DomainError(f"t_end must be a finite non-negative number, got {self.t_end}")
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise DomainError(f"dt must be positive, got {self.dt}")
        if self.method != "rk4":
            raise DomainError(f"unsupported integration method {self.method!r}")

    @property
    def steps(self):
        # a step count that is an integer up to rounding noise is taken as exact
        return int(math.floor(self.t_end / self.dt + 1e-9))

    @property
    def remainder(self):
        """Length of the final partial step that lands on t_end; 0.0 when dt divides t_end."""
        rest = self.t_end - self.steps * self.dt
        return rest if rest > 1e-9 * self.dt else 0.0


@dataclass
class Trajectory:
    dim: int
    degree: int
    times: list
    states: list
    defects: list = field(default_factory=list)

    @property
    def final(self):
        return self.states[-1]

    def max_defect(self):
        return max(self.defects, default=0.0)


def adjoint_matrix(h, n):
    """Matrix of f -> [h, f] on C^n, built exactly and returned as floats."""
    columns = []
    for j in range(h.dim ** (n + 1)):
        image = bracket(h, basis_operation(h.dim, n, j))
        columns.append([float(c) for c in image.coeffs])
    return np.array(columns, dtype=float).T


def _coboundary_float_matrix(mu, n):
    entries = coboundary_matrix(mu, n).entries
    return np.array(entries.tolist(), dtype=float)


def _rk4(generator, y, dt):
    k1 = generator @ y
    k2 = generator @ (y + 0.5 * dt * k1)
    k3 = generator @ (y + 0.5 * dt * k2)
    k4 = generator @ (y + dt * k3)
    return y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _check_hamiltonian(mu, h):
    require_associative(mu)
    if h.degree != 1:
        raise PreconditionError(f"the hamiltonian must have degree 1, got {h.degree}")
    if not coboundary(mu, h).is_zero():
        raise PreconditionError("the hamiltonian is not a cocycle of the multiplication")


def _integrate(mu, h, f0, config):
    _check_same_dim(mu, h, f0)
    generator = config.rate * adjoint_matrix(h, f0.degree)
    defect_matrix = _coboundary_float_matrix(mu, f0.degree)
    shape = (f0.dim,) * (f0.degree + 1)

    y = np.array([float(c) for c in f0.coeffs], dtype=float)
    trajectory = Trajectory(f0.dim, f0.degree, [], [], [])

    def record(time, state):
        trajectory.times.append(time)
        trajectory.states.append(state.reshape(shape))
        trajectory.defects.append(float(np.max(np.abs(defect_matrix @ state), initial=0.0)))

    record(0.0, y)
    for step in range(1, config.steps + 1):
        y = _rk4(generator, y, config.dt)
        record(step * config.dt, y)
    if config.remainder:
        y = _rk4(generator, y, config.remainder)
        record(config.t_end, y)
    elif config.steps:
        trajectory.times[-1] = config.t_end
    logger.debug("integrated %d steps of degree %d flow", len(trajectory.times) - 1, f0.degree)
    return trajectory


def heisenberg_flow(mu, h, f0, config):
    """Integrates df/dt = rate·[h, f] from f0.

    Parameters:
    - mu (Operation): associative multiplication.
    - h (Operation): degree-1 cocycle of mu generating the flow.
    - f0 (Operation): initial state.
    - config (DynamicsConfig): rate, horizon and step.

    Returns:
    - Trajectory: float states at every step, with the cocycle defect max|δf(t)|.
    """
    _check_hamiltonian(mu, h)
    return _integrate(mu, h, f0, config)


def curvature_flow(mu, h, pair, config):
    _check_hamiltonian(mu, h)
    return _integrate(mu, h, curvature(mu, pair.omega), config)


def is_static(mu):
    """True when H^1 vanishes, so every admissible flow is constant."""
    return not cohomology_basis(mu, 1)


def convergence_factor(mu, h, f0, rate, t_end, dt):
    """Ratio of terminal errors at dt and dt/2 against a reference at dt/20."""
    _check_hamiltonian(mu, h)
    reference = _integrate(mu, h, f0, DynamicsConfig(rate, t_end, dt / 20)).final
    coarse = _integrate(mu, h, f0, DynamicsConfig(rate, t_end, dt)).final
    fine = _integrate(mu, h, f0, DynamicsConfig(rate, t_end, dt / 2)).final
    return float(np.max(np.abs(coarse - reference)) / np.max(np.abs(fine - reference)))
