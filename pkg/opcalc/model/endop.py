"""Endomorphism operad of a finite-dimensional space over the rationals.

An operation of degree n on K^d is stored as a numpy object array of shape
(d,)*n + (d,) holding Fractions: axes 0..n-1 are the inputs j1..jn and the
last axis is the output k. The C-order flattening of that array (output
fastest, j1 slowest) is the coefficient layout used everywhere else.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from opcalc.model.exceptions import CompositionRangeError, DimensionError, DomainError
from opcalc.model.utils import sign, to_fraction

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MODULUS = 2**64


class Operation:
    __slots__ = ("_dim", "_degree", "_tensor")

    def __init__(self, dim, degree, tensor):
        if dim < 1:
            raise DomainError(f"dimension must be positive, got {dim}")
        if degree < 0:
            raise DomainError(f"degree must be non-negative, got {degree}")
        tensor = np.asarray(tensor, dtype=object)
        expected = (dim,) * (degree + 1)
        if tensor.shape != expected:
            raise DimensionError(f"expected coefficient shape {expected}, got {tensor.shape}")
        tensor = tensor.copy()
        tensor.flags.writeable = False
        self._dim = dim
        self._degree = degree
        self._tensor = tensor

    @property
    def dim(self):
        return self._dim

    @property
    def degree(self):
        return self._degree

    @property
    def grading(self):
        """|f| = degree - 1."""
        return self._degree - 1

    @property
    def tensor(self):
        return self._tensor

    @property
    def coeffs(self):
        return [Fraction(x) for x in self._tensor.reshape(-1)]

    def coefficient(self, inputs, output):
        return Fraction(self._tensor[tuple(inputs) + (output,)])

    def is_zero(self):
        return all(x == 0 for x in self._tensor.flat)

    def max_abs_coeff(self):
        return max((abs(Fraction(x)) for x in self._tensor.flat), default=Fraction(0))

    def nonzero_entries(self):
        """Yields (index tuple, value) for every nonzero coefficient."""
        for index in itertools.product(range(self._dim), repeat=self._degree + 1):
            value = self._tensor[index]
            if value != 0:
                yield index, Fraction(value)

    def _check_compatible(self, other):
        if not isinstance(other, Operation):
            return NotImplemented
        if other.dim != self.dim or other.degree != self.degree:
            raise DimensionError(
                f"cannot combine operations of (dim, degree) {(self.dim, self.degree)} and {(other.dim, other.degree)}"
            )
        return None

    def __add__(self, other):
        if self._check_compatible(other) is NotImplemented:
            return NotImplemented
        return Operation(self.dim, self.degree, self._tensor + other.tensor)

    def __sub__(self, other):
        if self._check_compatible(other) is NotImplemented:
            return NotImplemented
        return Operation(self.dim, self.degree, self._tensor - other.tensor)

    def __neg__(self):
        return Operation(self.dim, self.degree, -self._tensor)

    def __mul__(self, scalar):
        if isinstance(scalar, Operation):
            return NotImplemented
        return Operation(self.dim, self.degree, self._tensor * Fraction(scalar))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Operation):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and all(a == b for a, b in zip(self._tensor.flat, other.tensor.flat))
        )

    def __hash__(self):
        return hash((self._dim, self._degree, tuple(Fraction(x) for x in self._tensor.flat)))

    def __repr__(self):
        return f"Operation(dim={self._dim}, degree={self._degree}, coeffs={[str(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class IndexRegion:
    kind: str
    deg_h: int
    deg_f: int
    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return tuple(pair) in self.pairs


@dataclass(frozen=True)
class AlgebraSpec:
    dim: int
    mu: Operation
    name: str = ""

    def __post_init__(self):
        if self.mu.degree != 2:
            raise DomainError(f"an algebra multiplication has degree 2, got {self.mu.degree}")
        if self.mu.dim != self.dim:
            raise DimensionError(f"algebra dimension {self.dim} does not match multiplication dimension {self.mu.dim}")


def make_operation(dim, degree, coeffs):
    coeffs = list(coeffs)
    expected = dim ** (degree + 1)
    if len(coeffs) != expected:
        raise DimensionError(f"expected {expected} coefficients for dim={dim}, degree={degree}, got {len(coeffs)}")
    tensor = np.empty(expected, dtype=object)
    tensor[:] = [Fraction(c) for c in coeffs]
    return Operation(dim, degree, tensor.reshape((dim,) * (degree + 1)))


def zero(dim, degree):
    return Operation(dim, degree, np.full((dim,) * (degree + 1), Fraction(0), dtype=object))


def unit(dim):
    tensor = np.full((dim, dim), Fraction(0), dtype=object)
    for j in range(dim):
        tensor[j, j] = Fraction(1)
    return Operation(dim, 1, tensor)


def basis_operation(dim, degree, flat_index):
    coeffs = [0] * dim ** (degree + 1)
    coeffs[flat_index] = 1
    return make_operation(dim, degree, coeffs)


def tabulate(dim, degree, fn):
    """Builds the operation whose value on basis vectors (e_j1, ..., e_jn) is fn((j1, ..., jn))."""
    tensor = np.full((dim,) * (degree + 1), Fraction(0), dtype=object)
    for inputs in itertools.product(range(dim), repeat=degree):
        values = list(fn(inputs))
        if len(values) != dim:
            raise DimensionError(f"expected a vector of length {dim}, got {len(values)}")
        for k, value in enumerate(values):
            tensor[inputs + (k,)] = Fraction(value)
    return Operation(dim, degree, tensor)


def _check_same_dim(*operations):
    dims = {op.dim for op in operations}
    if len(dims) != 1:
        raise DimensionError(f"operations live on spaces of different dimensions {sorted(dims)}")


def substitute(f, g, i):
    """Plain substitution f∘(1^i ⊗ g ⊗ 1^(n-1-i)), no sign."""
    _check_same_dim(f, g)
    if not 0 <= i < f.degree:
        raise CompositionRangeError(f"slot {i} is outside 0..{f.degree - 1} for an operation of degree {f.degree}")
    contracted = np.tensordot(g.tensor, f.tensor, axes=([g.degree], [i]))
    # contracted axes: g inputs, f inputs without slot i, f output
    moved = np.moveaxis(contracted, list(range(g.degree)), list(range(i, i + g.degree)))
    return Operation(f.dim, f.degree + g.degree - 1, moved)


def partial_compose(f, g, i):
    """f∘_i g = (-1)^(i|g|) f∘(1^i ⊗ g ⊗ 1^(|f|-i))."""
    result = substitute(f, g, i)
    if sign(i * g.grading) < 0:
        return -result
    return result


def apply(f, args):
    if len(args) != f.degree:
        raise DomainError(f"operation of degree {f.degree} applied to {len(args)} arguments")
    result = f.tensor
    for vector in args:
        vector = np.asarray([Fraction(x) for x in vector], dtype=object)
        if vector.shape != (f.dim,):
            raise DimensionError(f"argument of length {vector.shape[0]} for dimension {f.dim}")
        result = np.tensordot(vector, result, axes=([0], [0]))
    return [Fraction(x) for x in np.asarray(result).reshape(-1)]


def region(kind, deg_h, deg_f):
    """Index pairs (i, j) of the B, A or G region for deg h, deg f (deg h >= 1)."""
    if deg_h < 1 or deg_f < 0:
        raise DomainError(f"regions need deg h >= 1 and deg f >= 0, got {deg_h}, {deg_f}")
    h_, f_ = deg_h - 1, deg_f - 1
    if kind == "B":
        pairs = [(i, j) for i in range(1, h_ + 1) for j in range(0, i)]
    elif kind == "A":
        pairs = [(i, j) for i in range(0, h_ + 1) for j in range(i, i + f_ + 1)]
    elif kind == "G":
        pairs = [(i, j) for i in range(0, h_) for j in range(i + deg_f, f_ + h_ + 1)]
    else:
        raise DomainError(f"unknown region {kind!r}, expected one of B, A, G")
    return IndexRegion(kind, deg_h, deg_f, tuple(pairs))


def composition_relation(kind, h, f, g, i, j):
    """Returns (left, right) sides of the composition relation at (i, j)."""
    left = partial_compose(partial_compose(h, f, i), g, j)
    if kind == "B":
        right = partial_compose(partial_compose(h, g, j), f, i + g.grading)
        right = right * sign(f.grading * g.grading)
    elif kind == "A":
        right = partial_compose(h, partial_compose(f, g, j - i), i)
    elif kind == "G":
        right = partial_compose(partial_compose(h, g, j - f.grading), f, i)
        right = right * sign(f.grading * g.grading)
    else:
        raise DomainError(f"unknown region {kind!r}, expected one of B, A, G")
    return left, right


def composition_relation_residuals(h, f, g):
    """Yields (kind, i, j, residual) over the whole (i, j) domain for deg h >= 1."""
    _check_same_dim(h, f, g)
    for kind in ("B", "A", "G"):
        for i, j in region(kind, h.degree, f.degree).pairs:
            left, right = composition_relation(kind, h, f, g, i, j)
            yield kind, i, j, left - right


class Lcg64:
    """Seeded 64-bit linear congruential generator for reproducible operations."""

    def __init__(self, seed):
        self.state = seed % LCG_MODULUS

    def next_state(self):
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) % LCG_MODULUS
        return self.state

    def draw(self, bound):
        return ((self.next_state() >> 33) % (2 * bound + 1)) - bound

    def draw_between(self, low, high):
        return low + ((self.next_state() >> 33) % (high - low + 1))

    def operation(self, dim, degree, bound=3):
        return make_operation(dim, degree, [self.draw(bound) for _ in range(dim ** (degree + 1))])


def random_operation(dim, degree, seed, bound=3):
    return Lcg64(seed).operation(dim, degree, bound)


def transport(f, matrix):
    """Conjugates f by the invertible matrix P: P∘f∘(P^-1 ⊗ ... ⊗ P^-1).

    Column m of P is the image of e_m.
    """
    forward = sympy.Matrix(matrix)
    if forward.shape != (f.dim, f.dim):
        raise DimensionError(f"expected a {f.dim}x{f.dim} matrix, got {forward.shape}")
    if forward.det() == 0:
        raise DomainError("transport needs an invertible matrix")
    inverse = forward.inv()
    p = np.array([[to_fraction(forward[r, c]) for c in range(f.dim)] for r in range(f.dim)], dtype=object)
    q = np.array([[to_fraction(inverse[r, c]) for c in range(f.dim)] for r in range(f.dim)], dtype=object)
    tensor = f.tensor
    for axis in range(f.degree):
        tensor = np.moveaxis(np.tensordot(tensor, q, axes=([axis], [0])), -1, axis)
    tensor = np.tensordot(tensor, p, axes=([f.degree], [1]))
    return Operation(f.dim, f.degree, tensor)
