import logging
from dataclasses import dataclass
from fractions import Fraction

from opcalc.model.cohomology import coboundary, require_associative
from opcalc.model.endop import _check_same_dim, transport
from opcalc.model.exceptions import AssociativityRequiredError, DimensionError, DomainError
from opcalc.model.flows import associator, bracket, compose_sum

DUAL_MODES = ("self_dual", "anti_self_dual", "custom")

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeformationPair:
    """A ground multiplication mu and its perturbation mu0 = mu + omega."""

    mu: object
    mu0: object

    def __post_init__(self):
        for name, operation in (("mu", self.mu), ("mu0", self.mu0)):
            if operation.degree != 2:
                raise DomainError(f"{name} must have degree 2, got {operation.degree}")
        _check_same_dim(self.mu, self.mu0)

    @classmethod
    def from_omega(cls, mu, omega):
        return cls(mu, mu + omega)

    @property
    def omega(self):
        return self.mu0 - self.mu


@dataclass(frozen=True)
class DeformationReport:
    A: object
    A0: object
    Omega: object
    mc_residual: object
    bianchi_residual: object
    gauge_residual_1: object = None
    gauge_residual_2: object = None
    conservation_residual: object = None
    dual_mode: str = "self_dual"
    dual: object = None
    current: object = None

    def residuals(self):
        """Residual fields that were computed, by name."""
        names = ("mc_residual", "bianchi_residual", "gauge_residual_1", "gauge_residual_2", "conservation_residual")
        return {name: getattr(self, name) for name in names if getattr(self, name) is not None}

    def max_abs_coeffs(self):
        return {name: residual.max_abs_coeff() for name, residual in self.residuals().items()}

    @property
    def all_zero(self):
        return all(residual.is_zero() for residual in self.residuals().values())


def differential(mu, f):
    """d = -δ_μ, i.e. df = [f, μ]."""
    return -coboundary(mu, f)


def curvature(mu, omega):
    """Ω = dω + ½[ω, ω]."""
    _check_same_dim(mu, omega)
    if mu.degree != 2 or omega.degree != 2:
        raise DomainError("curvature needs two operations of degree 2")
    return differential(mu, omega) + bracket(omega, omega) * Fraction(1, 2)


def maurer_cartan_residual(pair):
    """Ω - (μ0² - μ²); zero for every pair."""
    return curvature(pair.mu, pair.omega) - (associator(pair.mu0) - associator(pair.mu))


def master_equation_residual(omega):
    return bracket(omega, omega)


def covariant_derivative(mu, omega, f):
    """∇f = df + [f, ω], which is -δ_μ0 f."""
    _check_same_dim(mu, omega, f)
    return differential(mu, f) + bracket(f, omega)


def bianchi_residual(pair):
    """∇A0 = dA0 + [A0, ω]."""
    return covariant_derivative(pair.mu, pair.omega, associator(pair.mu0))


def bianchi_reduction_residual(pair):
    """(dA0 + [A0, ω]) - (-[A, μ])."""
    return bianchi_residual(pair) + bracket(associator(pair.mu), pair.mu)


def albert_residuals(mu):
    """(μ²∘μ - μ∘μ², (μ²∘μ)∘μ - μ²∘μ²); both vanish for every binary μ."""
    square = associator(mu)
    first = compose_sum(square, mu) - compose_sum(mu, square)
    second = compose_sum(compose_sum(square, mu), mu) - compose_sum(square, square)
    return first, second


def quasi_associative_pair(mu, matrix):
    """Pairs mu with its transport by an invertible matrix; Ω = 0 when mu is associative."""
    return DeformationPair(mu, transport(mu, matrix))


def dual(omega_curvature, dual_mode, custom_dual=None):
    if dual_mode == "self_dual":
        return omega_curvature
    if dual_mode == "anti_self_dual":
        return -omega_curvature
    if dual_mode == "custom":
        if custom_dual is None:
            raise DomainError("dual mode 'custom' needs a supplied dual operation")
        if custom_dual.degree != 3:
            raise DimensionError(f"the dual of the curvature must have degree 3, got {custom_dual.degree}")
        _check_same_dim(omega_curvature, custom_dual)
        return custom_dual
    raise DomainError(f"unknown dual mode {dual_mode!r}, expected one of {', '.join(DUAL_MODES)}")


def gauge_residuals(pair, dual_mode="self_dual", custom_dual=None, current=None):
    """Residuals of ∇Ω = 0, ∇Ω† = J and the conservation law ∇J = [Ω†, Ω].

    The ground multiplication has to be associative (d² = 0). When no current
    is supplied the definitional current J = ∇Ω† is used.
    """
    require_associative(pair.mu)
    mu, omega = pair.mu, pair.omega
    A, A0 = associator(mu), associator(pair.mu0)
    Omega = curvature(mu, omega)
    omega_dual = dual(Omega, dual_mode, custom_dual)
    if current is None:
        current = covariant_derivative(mu, omega, omega_dual)
    elif current.degree != 4:
        raise DimensionError(f"the current must have degree 4, got {current.degree}")
    _check_same_dim(mu, current)
    return DeformationReport(
        A=A,
        A0=A0,
        Omega=Omega,
        mc_residual=Omega - (A0 - A),
        bianchi_residual=bianchi_residual(pair),
        gauge_residual_1=covariant_derivative(mu, omega, Omega),
        gauge_residual_2=covariant_derivative(mu, omega, omega_dual) - current,
        conservation_residual=covariant_derivative(mu, omega, current) - bracket(omega_dual, Omega),
        dual_mode=dual_mode,
        dual=omega_dual,
        current=current,
    )


def deformation_report(pair, dual_mode="self_dual", custom_dual=None, current=None):
    """Like gauge_residuals, but falls back to curvature and Bianchi only for a non-associative ground."""
    try:
        return gauge_residuals(pair, dual_mode, custom_dual, current)
    except AssociativityRequiredError as e:
        logger.warning("gauge equations skipped: %s", e)
    A, A0 = associator(pair.mu), associator(pair.mu0)
    Omega = curvature(pair.mu, pair.omega)
    return DeformationReport(
        A=A,
        A0=A0,
        Omega=Omega,
        mc_residual=Omega - (A0 - A),
        bianchi_residual=bianchi_residual(pair),
        dual_mode=dual_mode,
    )
