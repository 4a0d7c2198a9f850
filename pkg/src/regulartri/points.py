"""Integer point configurations and their circuits.

A `PointConfiguration` fixes, once, an exact affine coordinatization of the
input points: the homogenized point matrix (a leading 1, then the ambient
coordinates) is restricted to a greedily chosen set of d+1 linearly
independent columns, where d is the affine dimension.  All volumes, circuit
dependences, and orientation tests downstream are determinants of integer
submatrices of that projected matrix, so they are exact, and they agree with
the lattice-normalized volume (|det|, i.e. d! times Euclidean volume) whenever
the configuration is full-dimensional in its own ambient space.  For
lower-dimensional configurations all quantities are scaled by one global
positive constant, which no sign test or comparison in the library can see.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .errors import (
    DegenerateConfigError,
    DimensionError,
    InvalidInputError,
    NotCorankOneError,
)


@dataclass(frozen=True)
class CorankOneConfig:
    """A (d+2)-point subconfiguration with a unique affine dependence.

    `support` holds the point indices in ascending order and `dependence`
    the matching primitive integer coefficients lambda with sum(lambda) = 0
    and first nonzero entry positive.  `plus`, `zero`, `minus` split the
    support by the sign of lambda (the Radon partition).
    """

    support: tuple
    dependence: tuple
    plus: tuple
    zero: tuple
    minus: tuple

    def coefficient(self, point: int):
        return self.dependence[self.support.index(point)]

    def oriented(self, positive_point: int) -> "CorankOneConfig":
        """Return the circuit with signs flipped, if needed, so that the
        coefficient of `positive_point` is positive."""
        c = self.coefficient(positive_point)
        if c == 0:
            raise NotCorankOneError(
                f"point {positive_point} carries no sign in the circuit"
            )
        if c > 0:
            return self
        return self.negated()

    def negated(self) -> "CorankOneConfig":
        return CorankOneConfig(
            support=self.support,
            dependence=tuple(-x for x in self.dependence),
            plus=self.minus,
            zero=self.zero,
            minus=self.plus,
        )

    def reduced(self) -> "CorankOneConfig":
        """The circuit proper: support restricted to nonzero coefficients.

        A (d+2)-point subconfiguration may carry zero coefficients (points
        affinely independent from the true circuit); the reduced form is the
        minimal dependent set, canonically signed since dropping zeros keeps
        the first nonzero entry first.
        """
        if not self.zero:
            return self
        pairs = [(p, c) for p, c in zip(self.support, self.dependence) if c != 0]
        support = tuple(p for p, _ in pairs)
        dependence = tuple(c for _, c in pairs)
        return CorankOneConfig(support, dependence, self.plus, (), self.minus)


class PointConfiguration:
    """A labelled configuration of distinct integer points.

    Points keep their input order; every triangulation, flip and GKZ-vector
    refers to them by index.
    """

    def __init__(self, points, _columns=None):
        pts = tuple(tuple(int(x) for x in p) for p in points)
        if len(pts) < 2:
            raise InvalidInputError("need at least two points")
        width = len(pts[0])
        if width == 0:
            raise InvalidInputError("points need at least one coordinate")
        if any(len(p) != width for p in pts):
            raise InvalidInputError("points have mixed ambient dimensions")
        seen = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise InvalidInputError(f"duplicate point at indices {seen[p]} and {i}")
            seen[p] = i
        self.points = pts
        self.n = len(pts)
        self.ambient_dim = width

        full = [(1,) + p for p in pts]
        cols = _columns if _columns is not None else _independent_columns(full)
        self.basis_columns = tuple(cols)
        self.dim = len(cols) - 1
        if _columns is not None and exact.rank([[row[c] for c in cols] for row in full]) != len(cols):
            raise DegenerateConfigError("supplied basis columns are dependent")
        #: homogenized points in basis coordinates, one integer row per point
        self.hom = tuple(tuple(row[c] for c in cols) for row in full)

        self._volume_cache = {}
        self._circuit_cache = {}
        self._total_volume = None

    # -- basic queries ------------------------------------------------

    def normalized_volume(self, simplex) -> int:
        """Normalized volume of the simplex spanned by d+1 point indices.

        Zero exactly when the points are affinely dependent.
        """
        key = tuple(sorted(simplex))
        if len(key) != self.dim + 1:
            raise DimensionError(
                f"simplex needs {self.dim + 1} vertices, got {len(key)}"
            )
        if len(set(key)) != len(key):
            raise InvalidInputError(f"repeated vertex in simplex {key}")
        self._check_range(key)
        cached = self._volume_cache.get(key)
        if cached is None:
            det = exact.determinant([self.hom[i] for i in key])
            cached = abs(int(det))
            self._volume_cache[key] = cached
        return cached

    def corank_one(self, subset) -> CorankOneConfig:
        """The unique-circuit structure of d+2 points spanning the hull.

        Raises DegenerateConfigError when the subset is not full-dimensional
        (equivalently, when its dependence space is not one-dimensional).
        """
        key = tuple(sorted(subset))
        if len(key) != self.dim + 2:
            raise DimensionError(
                f"corank-one subset needs {self.dim + 2} points, got {len(key)}"
            )
        if len(set(key)) != len(key):
            raise InvalidInputError(f"repeated index in subset {key}")
        self._check_range(key)
        cached = self._circuit_cache.get(key)
        if cached is None:
            cached = self._circuit(key)
            self._circuit_cache[key] = cached
        if cached is False:
            raise DegenerateConfigError(
                f"points {key} do not span the affine hull"
            )
        return cached

    def circuit_or_none(self, key):
        """corank_one for presorted tuples, returning None when degenerate.

        Internal fast path shared by flip search; `key` must be sorted.
        """
        cached = self._circuit_cache.get(key)
        if cached is None:
            cached = self._circuit(key)
            self._circuit_cache[key] = cached
        return None if cached is False else cached

    def _circuit(self, key):
        # Right kernel of the (d+1) x (d+2) matrix whose columns are the
        # homogenized points: lambda with sum(lambda_i * hom_i) = 0.
        cols = [self.hom[i] for i in key]
        matrix = list(zip(*cols))
        try:
            lam = exact.kernel_vector(matrix)
        except NotCorankOneError:
            return False
        plus = tuple(p for p, c in zip(key, lam) if c > 0)
        zero = tuple(p for p, c in zip(key, lam) if c == 0)
        minus = tuple(p for p, c in zip(key, lam) if c < 0)
        return CorankOneConfig(key, lam, plus, zero, minus)

    def total_volume(self) -> int:
        """Normalized volume of the convex hull (computed once, by placing)."""
        if self._total_volume is None:
            from .triangulation import placing_triangulation

            t = placing_triangulation(self)
            self._total_volume = sum(self.normalized_volume(s) for s in t.simplices)
        return self._total_volume

    # -- orientation helpers ------------------------------------------

    def facet_sign(self, facet, point: int) -> int:
        """Sign of the oriented hyperplane determinant [facet rows; point row].

        The facet is a tuple of d point indices in a fixed order; two points
        get the same sign exactly when they lie on the same side of the
        facet's affine hull.
        """
        rows = [self.hom[i] for i in facet] + [self.hom[point]]
        det = exact.determinant(rows)
        return (det > 0) - (det < 0)

    def affine_coordinates(self, point_index: int, basis) -> tuple:
        """Exact affine coordinates of a point in a (d+1)-point basis."""
        basis = tuple(basis)
        if len(basis) != self.dim + 1:
            raise DimensionError("basis needs d+1 points")
        denom = exact.determinant([self.hom[i] for i in basis])
        if denom == 0:
            raise DegenerateConfigError("basis points are affinely dependent")
        coords = []
        target = self.hom[point_index]
        for k in range(len(basis)):
            rows = [self.hom[i] for i in basis]
            rows[k] = target
            coords.append(Fraction(exact.determinant(rows), denom))
        return tuple(coords)

    def _check_range(self, indices):
        for i in indices:
            if not 0 <= i < self.n:
                raise InvalidInputError(f"point index {i} out of range 0..{self.n - 1}")

    def __repr__(self):
        return f"PointConfiguration(n={self.n}, dim={self.dim})"


def _independent_columns(full_rows):
    """Greedy selection of independent columns of the homogenized matrix.

    The leading 1s column is always kept; remaining coordinates are added in
    ascending order while they increase the rank.
    """
    ncols = len(full_rows[0])
    chosen = [0]
    r = 1  # the 1s column is never zero
    for c in range(1, ncols):
        trial = chosen + [c]
        sub = [[row[j] for j in trial] for row in full_rows]
        if exact.rank(sub) > r:
            chosen = trial
            r += 1
    return chosen


def new_configuration(points) -> PointConfiguration:
    """Build a configuration from an iterable of integer coordinate tuples."""
    return PointConfiguration(points)
