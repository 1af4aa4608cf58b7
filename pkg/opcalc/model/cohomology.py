import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache

import pandas as pd
import sympy

from opcalc.model.endop import AlgebraSpec, basis_operation, make_operation, substitute
from opcalc.model.exceptions import AssociativityRequiredError, DomainError, ResourceCapError
from opcalc.model.flows import associator, bracket, cup, total_compose
from opcalc.model.utils import sign, to_fraction, to_rational

ENTRY_CAP = int(os.environ.get("OPCALC_ENTRY_CAP", 10_000_000))

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoboundaryMatrix:
    """Matrix of δ_n : C^n -> C^(n+1) in the flat coefficient layout."""

    degree: int
    rows: int
    cols: int
    entries: sympy.ImmutableMatrix


@dataclass
class CohomologyReport:
    """Cohomology of one algebra up to degree n_max.

    dims holds (n, dim H^n) pairs and ranks holds (n, rank δ_n, dim Ker δ_n) triples.
    """

    algebra: str
    dim: int
    n_max: int
    dims: tuple
    ranks: tuple
    table: pd.DataFrame = field(repr=False, default=None, compare=False)

    def __post_init__(self):
        self.dims = tuple((int(n), int(d)) for n, d in self.dims)
        self.ranks = tuple((int(n), int(r), int(k)) for n, r, k in self.ranks)
        if self.table is None:
            self.table = pd.DataFrame(
                {
                    "n": [n for n, _, _ in self.ranks],
                    "cochains": [self.dim ** (n + 1) for n, _, _ in self.ranks],
                    "rank": [r for _, r, _ in self.ranks],
                    "cocycles": [k for _, _, k in self.ranks],
                    "dim": [d for _, d in self.dims],
                }
            )

    @property
    def dimensions(self):
        return tuple(d for _, d in self.dims)


def require_associative(mu):
    """Raises AssociativityRequiredError naming the nonzero associator entries."""
    entries = list(associator(mu).nonzero_entries())
    if entries:
        shown = ", ".join(f"{index}={value}" for index, value in entries[:5])
        more = f" and {len(entries) - 5} more" if len(entries) > 5 else ""
        raise AssociativityRequiredError(
            f"multiplication is not associative, nonzero associator entries: {shown}{more}", entries
        )


def coboundary(mu, f):
    """δf = -[f, μ] = (-1)^|f| μ∘f - f∘μ."""
    return -bracket(f, mu)


def hochschild_coboundary(mu, f):
    """Standard Hochschild differential with coefficients in the algebra itself.

    (δf)(x0..xn) = x0 f(x1..xn) + Σ (-1)^i f(.., x_(i-1) x_i, ..) + (-1)^(n+1) f(x0..x_(n-1)) xn
    """
    n = f.degree
    result = substitute(mu, f, 1)
    for i in range(1, n + 1):
        result = result + substitute(f, mu, i - 1) * sign(i)
    return result + substitute(mu, f, 0) * sign(n + 1)


def _check_cap(rows, cols):
    if rows * cols > ENTRY_CAP:
        raise ResourceCapError(f"a {rows}x{cols} matrix exceeds the entry cap of {ENTRY_CAP}")


@lru_cache(maxsize=64)
def coboundary_matrix(mu, n):
    if n < 0:
        raise DomainError(f"cochain degree must be non-negative, got {n}")
    d = mu.dim
    rows, cols = d ** (n + 2), d ** (n + 1)
    _check_cap(rows, cols)
    columns = [coboundary(mu, basis_operation(d, n, j)).coeffs for j in range(cols)]
    entries = sympy.ImmutableMatrix(rows, cols, lambda r, c: to_rational(columns[c][r]))
    return CoboundaryMatrix(n, rows, cols, entries)


def _image_matrix(mu, n):
    """Columns spanning Im δ_(n-1) inside C^n; empty for n = 0."""
    if n == 0:
        return sympy.zeros(mu.dim, 0)
    return coboundary_matrix(mu, n - 1).entries


def cohomology_dimensions(algebra: AlgebraSpec, n_max):
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max}")
    mu = algebra.mu
    require_associative(mu)
    ranks = []
    for n in range(n_max + 1):
        ranks.append(int(coboundary_matrix(mu, n).entries.rank()))
        logger.debug("rank of δ_%d on %s: %d", n, algebra.name, ranks[-1])
    nullities = [algebra.dim ** (n + 1) - rank for n, rank in enumerate(ranks)]
    # Im(C^-1 -> C^0) is zero
    dims = [(n, nullities[n] - (ranks[n - 1] if n > 0 else 0)) for n in range(n_max + 1)]
    return CohomologyReport(
        algebra.name, algebra.dim, n_max, tuple(dims), tuple(zip(range(n_max + 1), ranks, nullities))
    )


def is_cocycle(mu, f):
    return coboundary(mu, f).is_zero()


def is_coboundary(mu, f):
    """Returns g with δg = f, or None when f is not a coboundary.

    C^-1 is zero, so the only degree-0 coboundary is the zero cochain, and it has no witness
    to return. None is returned for every degree-0 input, including zero.
    """
    require_associative(mu)
    if f.degree == 0:
        return None
    matrix = coboundary_matrix(mu, f.degree - 1).entries
    target = sympy.Matrix([to_rational(c) for c in f.coeffs])
    try:
        solution, params = matrix.gauss_jordan_solve(target)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({tau: 0 for tau in params})
    return make_operation(mu.dim, f.degree - 1, [to_fraction(x) for x in solution])


def cocycle_basis(mu, n):
    kernel = coboundary_matrix(mu, n).entries.nullspace()
    return [make_operation(mu.dim, n, [to_fraction(x) for x in vector]) for vector in kernel]


def cohomology_basis(mu, n):
    """Cocycles whose classes form a basis of H^n."""
    require_associative(mu)
    kernel = coboundary_matrix(mu, n).entries.nullspace()
    if not kernel:
        return []
    image = _image_matrix(mu, n)
    combined = sympy.Matrix.hstack(sympy.Matrix(image), *kernel)
    _, pivots = combined.rref()
    chosen = [kernel[p - image.cols] for p in pivots if p >= image.cols]
    return [make_operation(mu.dim, n, [to_fraction(x) for x in vector]) for vector in chosen]


def cup_commutativity_defect(mu, f, g):
    """f⌣g - (-1)^(fg) g⌣f; a coboundary for cocycles f, g."""
    return cup(mu, f, g) - cup(mu, g, f) * sign(f.degree * g.degree)


def cup_representative_defect(mu, f, g, x):
    """(f + δx)⌣g - f⌣g."""
    return cup(mu, f + coboundary(mu, x), g) - cup(mu, f, g)


def bracket_representative_defect(f, g, mu, x):
    """[f + δx, g] - [f, g]."""
    return bracket(f + coboundary(mu, x), g) - bracket(f, g)


def flow_left_leibniz_defect(mu, h, f, g):
    """⟨h|f⌣g⟩ - ⟨h|f⟩⌣g - (-1)^(|h|f) f⌣⟨h|g⟩."""
    if h.degree == 0:
        raise DomainError("the flow form of the left Leibniz defect needs deg h >= 1")
    return (
        total_compose(h, cup(mu, f, g))
        - cup(mu, total_compose(h, f), g)
        - cup(mu, f, total_compose(h, g)) * sign(h.grading * f.degree)
    )


def left_leibniz_defect(mu, h, f, g):
    """[h, f⌣g] - [h, f]⌣g - (-1)^(|h|f) f⌣[h, g]."""
    return (
        bracket(h, cup(mu, f, g))
        - cup(mu, bracket(h, f), g)
        - cup(mu, f, bracket(h, g)) * sign(h.grading * f.degree)
    )


def cup_associativity_defect(mu, f, g, h):
    return cup(mu, cup(mu, f, g), h) - cup(mu, f, cup(mu, g, h))


def degree_gap(mu, f, g):
    """deg(f⌣g) - deg[f, g], always 1."""
    return cup(mu, f, g).degree - bracket(f, g).degree
