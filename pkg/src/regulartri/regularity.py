"""Regularity of triangulations and extremal rays of flip-displacement cones.

Two layers live here.  The first is classical: a triangulation is regular
exactly when a strict homogeneous system built from its interior-facet folds
(plus lifting rows for unused points) is feasible, which `is_regular` decides
by exact LP with witness heights or a Farkas certificate.

The second layer is the cheap path that makes enumeration fast.  The flip
displacements of a regular triangulation generate a pointed cone, and a flip
leads to a regular neighbor exactly when its displacement spans an extremal
ray of that cone.  Extremality of sparse vectors can usually be decided
without any LP by scanning columns:

* a column with a single nonzero entry confirms that vector as a ray and
  removes it from further consideration (R1);
* a column with one positive and one negative entry confirms both vectors
  and replaces them by their canceling positive combination, which is by
  construction not a ray (R2);
* a column with a singleton on one side and several entries on the other
  confirms the singleton; the opposite-side vectors are set aside to be
  decided against a snapshot of the current system, and replaced by their
  canceling combinations (R3);
* a one-sided column with two or more entries lets the zero-side subsystem
  be solved on its own; the nonzero-side vectors are set aside as in R3
  (R4).

Deferred vectors are decided afterwards: against a two-vector snapshot whose
other vector is a known non-ray, extremality is a scalar-multiple test;
otherwise one small LP runs against the snapshot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import RegulartriError
from .lp import Feasibility, nonneg_combination, strict_homogeneous
from .points import PointConfiguration
from .triangulation import Triangulation


# -- strict regularity system -------------------------------------------


def regularity_rows(config: PointConfiguration, t: Triangulation) -> list:
    """Rows r with: T regular  <=>  some h satisfies r·h > 0 for all rows.

    One row per interior facet (the fold of the two adjacent simplices,
    signed so both apexes carry positive coefficients) and one row per
    (unused point, containing simplex) pair (signed so the unused point
    carries a positive coefficient: the point must be lifted strictly above
    the simplex's hyperplane).
    """
    d = config.dim
    rows = []
    incidence = {}
    for s in t.simplices:
        for k in range(d + 1):
            facet = s[:k] + s[k + 1 :]
            incidence.setdefault(facet, []).append(s)
    for facet, owners in sorted(incidence.items()):
        if len(owners) != 2:
            continue
        s1, s2 = owners
        apex = next(i for i in s1 if i not in facet)
        j = tuple(sorted(set(s1) | set(s2)))
        circuit = config.corank_one(j).oriented(apex)
        rows.append(_scatter(config.n, circuit))
    used = t.used_points()
    for u in range(config.n):
        if u in used:
            continue
        for s in t.simplices:
            circuit = config.corank_one(tuple(sorted(s + (u,)))).oriented(u)
            inside = all(
                c <= 0 for p, c in zip(circuit.support, circuit.dependence) if p != u
            )
            if inside:
                rows.append(_scatter(config.n, circuit))
    return rows


def _scatter(n, circuit):
    row = [0] * n
    for p, c in zip(circuit.support, circuit.dependence):
        row[p] = c
    return tuple(row)


@dataclass(frozen=True)
class RegularityVerdict:
    regular: bool
    heights: tuple = None
    certificate: tuple = None
    rows: tuple = ()

    def __bool__(self):
        return self.regular


def is_regular(config: PointConfiguration, t: Triangulation) -> RegularityVerdict:
    """Decide regularity; carries exact heights or a Farkas certificate.

    The witness satisfies every row with slack >= 1 (any positive slack can
    be rescaled to this); the certificate is a nonnegative nonzero
    combination of the rows summing to zero.
    """
    rows = regularity_rows(config, t)
    res = strict_homogeneous(rows, dim=config.n)
    if res.feasible:
        return RegularityVerdict(True, heights=res.witness, rows=tuple(rows))
    return RegularityVerdict(False, certificate=res.certificate, rows=tuple(rows))


# -- sparse ray screening -------------------------------------------------


@dataclass(frozen=True)
class TaggedVector:
    """A system vector: `ident` is the candidate id, or None for vectors
    known to be positive combinations of others (never rays)."""

    vec: tuple
    ident: object = None

    @property
    def is_candidate(self):
        return self.ident is not None


@dataclass(frozen=True)
class DeferredCandidate:
    """A candidate postponed to the LP/scalar stage, together with the rest
    of the system exactly as it stood when the candidate was set aside."""

    ident: object
    vec: tuple
    others: tuple  # TaggedVector entries, excluding this candidate


@dataclass(frozen=True)
class ScreeningEvent:
    rule: str
    column: int
    confirmed: tuple = ()
    deferred: tuple = ()


@dataclass
class ScreeningOutcome:
    confirmed: list = field(default_factory=list)
    deferred: list = field(default_factory=list)
    residual: tuple = ()
    events: list = field(default_factory=list)
    r1: int = 0  # candidates confirmed per rule
    r2: int = 0
    r3: int = 0
    r4: int = 0  # rule-4 applications (it only defers)


def screen_rays(vectors) -> ScreeningOutcome:
    """Run the column reductions to a fixpoint.

    `vectors` is an iterable of TaggedVector (or (vec, ident) pairs).  The
    vectors must generate a pointed cone and no two may be positive scalar
    multiples unless one is tagged as a known non-ray.  Candidates end up
    either confirmed (extremal, no LP needed) or deferred with a snapshot;
    the partition is exact, screening never misclassifies.

    Scheduling is deterministic: rules are tried in the order R1, R2,
    R3-with-candidate-singleton, R3, R4, each scanning active columns in
    ascending order, restarting after every applied reduction.  Screening
    stops as soon as no candidates remain in the system, since reductions
    among known non-rays cannot decide anything further.
    """
    system = []
    for v in vectors:
        if isinstance(v, TaggedVector):
            system.append(v)
        else:
            vec, ident = v
            system.append(TaggedVector(tuple(vec), ident))
    if not system:
        return ScreeningOutcome()
    ncols = len(system[0].vec)
    for v in system:
        if len(v.vec) != ncols:
            raise RegulartriError("ray system vectors of mixed lengths")
        if all(x == 0 for x in v.vec):
            raise RegulartriError("zero vector in ray system")

    out = ScreeningOutcome()
    active = list(range(ncols))

    while any(v.is_candidate for v in system):
        action = _find_reduction(system, active)
        if action is None:
            break
        rule, col, data = action
        if rule == "R1":
            (i,) = data
            v = system[i]
            if v.is_candidate:
                out.confirmed.append(v.ident)
                out.r1 += 1
                out.events.append(ScreeningEvent("R1", col, confirmed=(v.ident,)))
            else:
                out.events.append(ScreeningEvent("R1", col))
            del system[i]
        elif rule == "R2":
            ip, im = data
            vp, vm = system[ip], system[im]
            confirmed = tuple(v.ident for v in (vp, vm) if v.is_candidate)
            out.confirmed.extend(confirmed)
            out.r2 += len(confirmed)
            out.events.append(ScreeningEvent("R2", col, confirmed=confirmed))
            combo = _cancel(vp, vm, col)
            system = [v for k, v in enumerate(system) if k not in (ip, im)]
            system.append(combo)
        elif rule in ("R3", "R3x"):
            single, opposite = data
            v1 = system[single]
            confirmed = (v1.ident,) if v1.is_candidate else ()
            out.confirmed.extend(confirmed)
            out.r3 += len(confirmed)
            deferred_ids = _defer(system, opposite, out)
            out.events.append(
                ScreeningEvent("R3", col, confirmed=confirmed, deferred=deferred_ids)
            )
            combos = [_cancel(v1, system[k], col) for k in opposite]
            drop = set(opposite) | {single}
            system = [v for k, v in enumerate(system) if k not in drop]
            system.extend(combos)
        else:  # R4
            nonzero = data
            deferred_ids = _defer(system, nonzero, out)
            out.r4 += 1
            out.events.append(ScreeningEvent("R4", col, deferred=deferred_ids))
            drop = set(nonzero)
            system = [v for k, v in enumerate(system) if k not in drop]

    # Whatever candidates survive an irreducible system go to the LP stage.
    leftovers = [k for k, v in enumerate(system) if v.is_candidate]
    if leftovers:
        deferred_ids = _defer(system, leftovers, out)
        out.events.append(ScreeningEvent("fixpoint", -1, deferred=deferred_ids))
    out.residual = tuple(system)
    return out


def _defer(system, indices, out):
    idents = []
    for k in indices:
        v = system[k]
        if not v.is_candidate:
            continue
        others = tuple(w for j, w in enumerate(system) if j != k)
        out.deferred.append(DeferredCandidate(v.ident, v.vec, others))
        idents.append(v.ident)
    return tuple(idents)


def _cancel(a: TaggedVector, b: TaggedVector, col: int) -> TaggedVector:
    """The positive combination of a and b that vanishes in `col`.

    a and b carry opposite signs there, so |a[col]|·b + |b[col]|·a kills the
    column; the result is tagged as a known non-ray.
    """
    ca, cb = abs(a.vec[col]), abs(b.vec[col])
    vec = tuple(ca * y + cb * x for x, y in zip(a.vec, b.vec))
    if all(x == 0 for x in vec):
        raise RegulartriError("cancellation produced zero: cone is not pointed")
    return TaggedVector(vec, None)


def _find_reduction(system, active):
    """Pick the next reduction: (rule, column, data) or None at fixpoint."""
    r2 = r3c = r3 = r4 = None
    dead = []
    for col in active:
        pos = [k for k, v in enumerate(system) if v.vec[col] > 0]
        neg = [k for k, v in enumerate(system) if v.vec[col] < 0]
        np_, nn = len(pos), len(neg)
        if np_ == 0 and nn == 0:
            dead.append(col)
            continue
        if np_ + nn == 1:
            _deactivate(active, dead)
            return ("R1", col, (pos + neg)[0:1])
        if np_ == 1 and nn == 1 and r2 is None:
            r2 = ("R2", col, (pos[0], neg[0]))
        elif np_ == 1 and nn >= 2:
            cand = system[pos[0]].is_candidate
            pick = ("R3", col, (pos[0], tuple(neg)))
            if cand and r3c is None:
                r3c = pick
            elif not cand and r3 is None:
                r3 = pick
        elif nn == 1 and np_ >= 2:
            cand = system[neg[0]].is_candidate
            pick = ("R3", col, (neg[0], tuple(pos)))
            if cand and r3c is None:
                r3c = pick
            elif not cand and r3 is None:
                r3 = pick
        elif (np_ == 0 or nn == 0) and r4 is None:
            r4 = ("R4", col, tuple(pos + neg))
    _deactivate(active, dead)
    return r2 or r3c or r3 or r4


def _deactivate(active, dead):
    for col in dead:
        active.remove(col)


# -- extremal-ray classification ------------------------------------------


@dataclass
class RayStats:
    """Counters for one extremal-ray computation (or accumulated)."""

    r1: int = 0
    r2: int = 0
    r3: int = 0
    r4: int = 0
    scalar_tests: int = 0
    lps_solved: int = 0

    def confirmed_by_screening(self):
        return self.r1 + self.r2 + self.r3

    def merge(self, other: "RayStats"):
        self.r1 += other.r1
        self.r2 += other.r2
        self.r3 += other.r3
        self.r4 += other.r4
        self.scalar_tests += other.scalar_tests
        self.lps_solved += other.lps_solved


def extremal_rays(vectors, stats: RayStats = None) -> set:
    """Idents of the vectors spanning extremal rays of the generated cone.

    `vectors` as in screen_rays.  Deferred candidates are decided against
    their snapshots by recursive screening; see _deferred_extremal.
    """
    if stats is None:
        stats = RayStats()
    outcome = screen_rays(vectors)
    _accumulate(stats, outcome)
    extremal = set(outcome.confirmed)
    for item in outcome.deferred:
        if _deferred_extremal(item, stats):
            extremal.add(item.ident)
    return extremal


def _accumulate(stats, outcome):
    stats.r1 += outcome.r1
    stats.r2 += outcome.r2
    stats.r3 += outcome.r3
    stats.r4 += outcome.r4


def _deferred_extremal(item: DeferredCandidate, stats: RayStats) -> bool:
    """Decide one deferred candidate against its snapshot system.

    The column reductions apply recursively to the snapshot: the candidate
    is screened (alone, the snapshot vectors all untagged) against a
    strictly shrinking system until it is confirmed, a single generator is
    left — then extremality is just the positive-scalar-multiple test — or
    no shrinking reduction applies, in which case one exact LP settles
    membership of the candidate in the cone of the snapshot.
    """
    vec, ident = item.vec, item.ident
    others = item.others
    while True:
        if not others:
            return True
        if len(others) == 1:
            stats.scalar_tests += 1
            return not _positive_multiple(others[0].vec, vec)
        sub = [TaggedVector(vec, ident)]
        sub.extend(TaggedVector(w.vec, None) for w in others)
        outcome = screen_rays(sub)
        _accumulate(stats, outcome)
        if outcome.confirmed:
            return True
        (again,) = outcome.deferred  # sole candidate, deferred exactly once
        if len(again.others) >= len(others):
            stats.lps_solved += 1
            res = nonneg_combination([w.vec for w in again.others], vec)
            return not res.feasible
        others = again.others


def _positive_multiple(u, v) -> bool:
    """True when u = a*v for some a > 0 (exact)."""
    a = None
    for x, y in zip(u, v):
        if (x == 0) != (y == 0):
            return False
        if y != 0:
            ratio = Fraction(x) / Fraction(y)
            if ratio <= 0:
                return False
            if a is None:
                a = ratio
            elif ratio != a:
                return False
    return a is not None


def naive_extremal_rays(vectors) -> set:
    """Reference classification: one LP per vector against all the others.

    Used as the independent oracle for the screening path; no reductions,
    no shortcuts.
    """
    tagged = []
    for v in vectors:
        if isinstance(v, TaggedVector):
            tagged.append(v)
        else:
            vec, ident = v
            tagged.append(TaggedVector(tuple(vec), ident))
    out = set()
    for k, v in enumerate(tagged):
        others = [w.vec for j, w in enumerate(tagged) if j != k]
        if v.is_candidate and not nonneg_combination(others, v.vec).feasible:
            out.add(v.ident)
    return out


def regular_flips(config: PointConfiguration, t: Triangulation, flips, stats=None):
    """The flips of a regular triangulation leading to regular neighbors.

    A flip qualifies exactly when its GKZ displacement spans an extremal ray
    of the cone generated by all displacements at t.
    """
    if not flips:
        return []
    rays = extremal_rays(
        [TaggedVector(f.delta, k) for k, f in enumerate(flips)], stats
    )
    return [f for k, f in enumerate(flips) if k in rays]
