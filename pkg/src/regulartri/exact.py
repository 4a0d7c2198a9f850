"""Exact linear algebra over arbitrary-precision integers and rationals.

Everything in this module is combinatorial bookkeeping for geometry that must
never see floating point: determinants and ranks are computed by fraction-free
Bareiss elimination, and one-dimensional kernels are returned as primitive
integer vectors with a fixed sign convention so they can be compared and
hashed exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionError, NoDependenceError, NotCorankOneError

#: Exact scalar type used wherever integers do not suffice.
Rational = Fraction


class Matrix:
    """A dense exact matrix with entries that are ints or Fractions.

    Rows are stored row-major as tuples.  The class is deliberately small:
    the heavy lifting lives in the module-level functions, which also accept
    plain sequences of rows.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows:
            raise DimensionError("matrix needs at least one row")
        width = len(rows[0])
        if width == 0:
            raise DimensionError("matrix needs at least one column")
        for r in rows:
            if len(r) != width:
                raise DimensionError("ragged rows in matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({list(map(list, self.rows))})"


def _as_rows(m):
    if isinstance(m, Matrix):
        return [list(r) for r in m.rows]
    rows = [list(r) for r in m]
    if not rows or not rows[0]:
        raise DimensionError("empty matrix")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DimensionError("ragged rows in matrix")
    return rows


def _clear_denominators(rows):
    """Scale each row to integers; return (int_rows, product of scale factors).

    The scale product multiplies the determinant of the integer matrix
    relative to the original: det(original) = det(int_rows) / product.
    """
    scale = Fraction(1)
    out = []
    for row in rows:
        mult = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                mult = mult * x.denominator // gcd(mult, x.denominator)
        scale *= mult
        out.append([int(x * mult) for x in row])
    return out, scale


def determinant(m) -> Rational:
    """Exact determinant via fraction-free Bareiss elimination.

    Integer input stays integer throughout; rational input is scaled to an
    integer matrix first.  Raises DimensionError on non-square input.
    """
    rows = _as_rows(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant requires a square matrix")
    rows, scale = _clear_denominators(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri = rows[i]
            rk = rows[k]
            lead = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    det = sign * rows[n - 1][n - 1]
    result = Fraction(det) / scale
    return int(result) if result.denominator == 1 else result


def rank(m) -> int:
    """Rank of an exact matrix (Bareiss-style integer elimination)."""
    rows, _ = _clear_denominators(_as_rows(m))
    nr, nc = len(rows), len(rows[0])
    r = 0
    prev = 1
    for c in range(nc):
        pivot_row = None
        for i in range(r, nr):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, nr):
            ri = rows[i]
            lead = ri[c]
            for j in range(c, nc):
                ri[j] = (pivot * ri[j] - lead * rows[r][j]) // prev
        prev = pivot
        r += 1
        if r == nr:
            break
    return r


def _primitive(vec):
    """Divide an integer vector by its gcd and make the first nonzero positive."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        return tuple(vec)
    vec = [x // g for x in vec]
    for x in vec:
        if x != 0:
            if x < 0:
                vec = [-y for y in vec]
            break
    return tuple(vec)


def kernel_vector(m) -> tuple:
    """Spanning vector of a one-dimensional right kernel, as a primitive
    integer tuple whose first nonzero entry is positive.

    Raises NoDependenceError when the kernel is trivial and
    NotCorankOneError when it has dimension two or more.
    """
    rows, _ = _clear_denominators(_as_rows(m))
    nc = len(rows[0])
    r = rank(rows)
    nullity = nc - r
    if nullity == 0:
        raise NoDependenceError("matrix has full column rank: no dependence")
    if nullity > 1:
        raise NotCorankOneError(f"kernel has dimension {nullity}, expected 1")
    # Fraction-based forward elimination to reduced row echelon form.
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = []  # (row, col)
    pr = 0
    for c in range(nc):
        pi = None
        for i in range(pr, len(work)):
            if work[i][c] != 0:
                pi = i
                break
        if pi is None:
            continue
        work[pr], work[pi] = work[pi], work[pr]
        pv = work[pr][c]
        work[pr] = [x / pv for x in work[pr]]
        for i in range(len(work)):
            if i != pr and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[pr])]
        pivots.append((pr, c))
        pr += 1
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(nc) if c not in pivot_cols]
    assert len(free_cols) == 1
    fc = free_cols[0]
    sol = [Fraction(0)] * nc
    sol[fc] = Fraction(1)
    for i, c in pivots:
        sol[c] = -work[i][fc]
    lcm = 1
    for x in sol:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    return _primitive([int(x * lcm) for x in sol])
