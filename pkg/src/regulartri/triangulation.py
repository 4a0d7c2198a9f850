"""Triangulations of a point configuration and their GKZ-vectors.

A triangulation is stored canonically: every simplex is an ascending tuple of
point indices, and the simplices themselves are sorted lexicographically.
The canonical text form `{{0,1,2},{0,2,3}}` is a bit-exact rendering of that
ordering and is used as hash key, cache key and CLI interchange format.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionError,
    InvalidInputError,
    TriangulationError,
)
from .points import PointConfiguration

#: A simplex is an ascending tuple of d+1 point indices.
Simplex = tuple

#: GKZ-vectors are integer tuples of length n, one entry per point.
GkzVector = tuple


class Triangulation:
    """An immutable set of maximal simplices in canonical order."""

    __slots__ = ("simplices", "_set", "_hash")

    def __init__(self, simplices):
        simps = tuple(sorted(tuple(sorted(s)) for s in simplices))
        if not simps:
            raise InvalidInputError("a triangulation needs at least one simplex")
        if len(set(simps)) != len(simps):
            raise InvalidInputError("repeated simplex")
        self.simplices = simps
        self._set = frozenset(simps)
        self._hash = hash(simps)

    def __contains__(self, simplex):
        return tuple(simplex) in self._set

    def __iter__(self):
        return iter(self.simplices)

    def __len__(self):
        return len(self.simplices)

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.simplices == other.simplices

    def __hash__(self):
        return self._hash

    def used_points(self) -> frozenset:
        return frozenset(i for s in self.simplices for i in s)

    def as_set(self) -> frozenset:
        return self._set

    def canonical(self) -> str:
        return format_triangulation(self)

    def __repr__(self):
        return f"Triangulation({self.canonical()})"


def format_triangulation(t: Triangulation) -> str:
    inner = ",".join("{" + ",".join(str(i) for i in s) + "}" for s in t.simplices)
    return "{" + inner + "}"


def parse_triangulation(text: str) -> Triangulation:
    """Parse the canonical `{{i,j,...},{...}}` form (whitespace tolerated)."""
    s = "".join(text.split())
    if not (s.startswith("{{") and s.endswith("}}")):
        raise InvalidInputError(f"not a triangulation literal: {text!r}")
    body = s[1:-1]
    simplices = []
    current = None
    token = ""
    depth = 0
    for ch in body:
        if ch == "{":
            depth += 1
            if depth != 1:
                raise InvalidInputError("nested braces in triangulation literal")
            current = []
            token = ""
        elif ch == "}":
            depth -= 1
            if depth != 0 or current is None:
                raise InvalidInputError("unbalanced braces in triangulation literal")
            if token == "":
                raise InvalidInputError("empty simplex in triangulation literal")
            current.append(_parse_index(token))
            simplices.append(tuple(current))
            current = None
            token = ""
        elif ch == ",":
            if depth == 1:
                if token == "":
                    raise InvalidInputError("missing index in triangulation literal")
                current.append(_parse_index(token))
                token = ""
            # commas between simplices carry no content
        elif ch.isdigit():
            if depth != 1:
                raise InvalidInputError("digit outside a simplex")
            token += ch
        else:
            raise InvalidInputError(f"unexpected character {ch!r} in triangulation")
    if depth != 0:
        raise InvalidInputError("unbalanced braces in triangulation literal")
    if not simplices:
        raise InvalidInputError("empty triangulation literal")
    return Triangulation(simplices)


def _parse_index(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InvalidInputError(f"bad point index {token!r}") from None


# -- GKZ-vectors -------------------------------------------------------


def gkz(config: PointConfiguration, t: Triangulation) -> GkzVector:
    """GKZ-vector: entry i sums the volumes of the simplices containing i."""
    out = [0] * config.n
    for s in t.simplices:
        v = config.normalized_volume(s)
        for i in s:
            out[i] += v
    return tuple(out)


def lex_compare(a: GkzVector, b: GkzVector) -> int:
    """Lexicographic comparison; returns -1, 0 or 1.

    Vectors must have equal length — comparing GKZ-vectors of different
    configurations is always a bug.
    """
    if len(a) != len(b):
        raise DimensionError("GKZ-vectors of different lengths")
    if a == b:
        return 0
    return 1 if a > b else -1


# -- validation --------------------------------------------------------


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    kind: str = ""
    detail: str = ""

    def __bool__(self):
        return self.ok


def validate(config: PointConfiguration, t: Triangulation) -> ValidationResult:
    """Check the triangulation invariants, reporting the first violation.

    Checks, in order: simplex shape (vertex count, index range, positive
    volume), total volume against the hull volume, and facet pairing (every
    interior facet shared by exactly two simplices lying on opposite sides;
    every once-used facet supported by the hull boundary).
    """
    d = config.dim
    for s in t.simplices:
        if len(s) != d + 1:
            raise DimensionError(f"simplex {s} has {len(s)} vertices, expected {d + 1}")
        config._check_range(s)
        if len(set(s)) != len(s):
            raise InvalidInputError(f"repeated vertex in simplex {s}")
    for s in t.simplices:
        if config.normalized_volume(s) == 0:
            return ValidationResult(False, "degenerate-simplex", f"simplex {s} is flat")

    total = sum(config.normalized_volume(s) for s in t.simplices)
    hull = config.total_volume()
    if total != hull:
        return ValidationResult(
            False,
            "total-volume",
            f"simplices cover volume {total}, hull has volume {hull}",
        )

    incidence = {}
    for s in t.simplices:
        for k in range(d + 1):
            facet = s[:k] + s[k + 1 :]
            incidence.setdefault(facet, []).append(s)
    for facet, owners in incidence.items():
        if len(owners) > 2:
            return ValidationResult(
                False,
                "facet-pairing",
                f"facet {facet} belongs to {len(owners)} simplices",
            )
        if len(owners) == 2:
            apex0 = next(i for i in owners[0] if i not in facet)
            apex1 = next(i for i in owners[1] if i not in facet)
            if config.facet_sign(facet, apex0) == config.facet_sign(facet, apex1):
                return ValidationResult(
                    False,
                    "facet-pairing",
                    f"simplices {owners[0]} and {owners[1]} overlap across facet {facet}",
                )
        else:
            if not _on_boundary(config, facet, owners[0]):
                return ValidationResult(
                    False,
                    "facet-pairing",
                    f"interior facet {facet} belongs to only one simplex",
                )
    return ValidationResult(True)


def _on_boundary(config: PointConfiguration, facet, owner) -> bool:
    """True when the facet's hyperplane supports the whole configuration."""
    apex = next(i for i in owner if i not in facet)
    side = config.facet_sign(facet, apex)
    for i in range(config.n):
        if i in facet:
            continue
        s = config.facet_sign(facet, i)
        if s != 0 and s != side:
            return False
    return True


def ensure_valid(config: PointConfiguration, t: Triangulation) -> None:
    res = validate(config, t)
    if not res:
        raise TriangulationError(f"{res.kind}: {res.detail}")


# -- placing construction ----------------------------------------------


def placing_triangulation(config: PointConfiguration) -> Triangulation:
    """Triangulation obtained by placing the points in input order.

    The first d+1 affinely independent points span the seed simplex; every
    later point that falls outside the current hull is joined to the facets
    it sees (strictly positive side only — points on a facet hyperplane do
    not see it).  Points inside the current hull are skipped, so the result
    need not use every point.  Placing triangulations are regular.
    """
    d = config.dim
    seed = []
    for i in range(config.n):
        trial = seed + [i]
        from . import exact

        if exact.rank([config.hom[j] for j in trial]) == len(trial):
            seed.append(i)
            if len(seed) == d + 1:
                break
    assert len(seed) == d + 1, "configuration spans its affine hull by construction"

    simplices = {tuple(sorted(seed))}
    placed = set(seed)
    for p in range(config.n):
        if p in placed:
            continue
        placed.add(p)
        visible = []
        for facet, apex in _boundary_facets(simplices):
            inside = config.facet_sign(facet, apex)
            s = config.facet_sign(facet, p)
            if s != 0 and s != inside:
                visible.append(facet)
        for facet in visible:
            simplices.add(tuple(sorted(facet + (p,))))
    return Triangulation(simplices)


def _boundary_facets(simplices):
    """Facets used by exactly one simplex, paired with that simplex's apex."""
    incidence = {}
    for s in simplices:
        for k in range(len(s)):
            facet = s[:k] + s[k + 1 :]
            incidence.setdefault(facet, []).append(s[k])
    return [
        (facet, apexes[0]) for facet, apexes in incidence.items() if len(apexes) == 1
    ]
