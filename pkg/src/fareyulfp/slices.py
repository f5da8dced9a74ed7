"""Geodesic slices and weak-tight indices on the genus-one curve graphs.

On these surfaces every geodesic is tight, so the slice of a pair (a, b)
near a point c is the set of enumerated-geodesic vertices within delta of
c.  The weak-tight index of a geodesic is the largest min-side annular
projection gap over its vertices; filtering by an index ceiling yields
the weak-tight slices.  Radius slices over infinite balls are only ever
reported as sampled lower bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .annular import Annulus
from .bounds import BigBound, log10_upper, slice_bound_tight, slice_bound_weak, surface_for_kind
from .errors import HypothesisViolation, PreconditionViolation
from .farey import (
    Geodesic,
    Slope,
    SurfaceKind,
    distance,
    geodesic_vertices,
    geodesics,
    random_neighbor,
)
from .projections import candidate_subsurfaces, proj_distance, projects_to

DEFAULT_DELTA_HYP = 17  # user-chosen hyperbolicity placeholder, see cli.Config


@dataclass(frozen=True, slots=True)
class SliceQuery:
    a: Slope
    b: Slope
    c: Slope
    delta: int
    r: int = 0

    def __post_init__(self) -> None:
        if self.delta < 0 or self.r < 0:
            raise PreconditionViolation("delta and r must be nonnegative")


@dataclass(frozen=True)
class WeakTightReport:
    geodesic: Geodesic
    index: int
    attaining: Optional[tuple[Slope, Annulus]]


def tight_slice(
    kind: SurfaceKind, a: Slope, b: Slope, c: Slope, delta: int
) -> frozenset[Slope]:
    """Vertices of all geodesics between a and b within delta of c."""
    if delta < 0:
        raise PreconditionViolation("delta must be nonnegative")
    return frozenset(
        v for v in geodesic_vertices(a, b) if distance(v, c) <= delta
    )


def weak_tight_index(kind: SurfaceKind, g: Geodesic) -> WeakTightReport:
    """Smallest D such that g is D-weakly tight in the twist model.

    Maximizes min(d(x, v), d(v, y)) over vertices v and candidate annuli;
    finitely many annuli suffice because a larger gap would force the
    core onto the geodesics between the endpoints.
    """
    x, y = g.start, g.end
    if g.length <= 2:
        raise PreconditionViolation("weak-tight index needs endpoint distance > 2")
    annuli = [
        Z
        for Z in candidate_subsurfaces(kind, set(g.vertices))
        if not Z.is_whole
    ]
    best = 0
    attaining: Optional[tuple[Slope, Annulus]] = None
    for v in g.vertices:
        for Z in annuli:
            if not projects_to(Z, v):
                continue
            sides = [
                proj_distance(kind, Z, end, v)
                for end in (x, y)
                if projects_to(Z, end)
            ]
            value = min(sides)
            if value > best:
                best = value
                attaining = (v, Z.annulus)
    return WeakTightReport(g, best, attaining)


def weak_tight_slice(
    kind: SurfaceKind, a: Slope, b: Slope, c: Slope, delta: int, D: int
) -> frozenset[Slope]:
    """Slice through the geodesics whose weak-tight index is at most D."""
    if distance(a, b) <= 2:
        raise PreconditionViolation("weak-tight slices need endpoint distance > 2")
    out = set()
    for g in geodesics(a, b):
        if weak_tight_index(kind, g).index <= D:
            out.update(v for v in g.vertices if distance(v, c) <= delta)
    return frozenset(out)


@dataclass(frozen=True)
class SampledSlice:
    """A certified SUBSET of a radius slice; never the exact set.

    Radius balls in a locally infinite graph are infinite, so only
    sampled endpoint pairs contribute and the cardinality is a lower
    bound.
    """

    members: frozenset[Slope]
    pairs_sampled: int
    hypothesis_ok: bool


def _random_ball_point(rng: random.Random, center: Slope, r: int) -> Slope:
    v = center
    for _ in range(rng.randint(0, r)):
        v = random_neighbor(v, rng.randint(-3, 3))
    return v


def radius_slice_sample(
    kind: SurfaceKind,
    a: Slope,
    b: Slope,
    r: int,
    c: Slope,
    delta: int,
    budget: int,
    seed: int,
    delta_hyp: int = DEFAULT_DELTA_HYP,
) -> SampledSlice:
    """Union of tight slices over sampled endpoint pairs in N_r(a) x N_r(b).

    The distance hypothesis d(a, b) >= 2r + 2(3*delta_hyp + 2) + 1 is
    checked and recorded, never silently waived.
    """
    if budget < 0:
        raise PreconditionViolation("budget must be nonnegative")
    j = 3 * delta_hyp + 2
    hypothesis_ok = distance(a, b) >= 2 * r + 2 * j + 1
    if budget == 0:
        return SampledSlice(frozenset(), 0, hypothesis_ok)
    if r == 0:
        return SampledSlice(tight_slice(kind, a, b, c, delta), 1, hypothesis_ok)
    rng = random.Random(seed)
    members: set[Slope] = set()
    for _ in range(budget):
        a2 = _random_ball_point(rng, a, r)
        b2 = _random_ball_point(rng, b, r)
        members.update(tight_slice(kind, a2, b2, c, delta))
    return SampledSlice(frozenset(members), budget, hypothesis_ok)


@dataclass(frozen=True)
class SliceVerification:
    query: SliceQuery
    members: frozenset[Slope]
    exact: bool
    bound: BigBound
    margin_log10: float
    weak_D: Optional[int]

    def to_json(self) -> dict:
        return {
            "query": {
                "a": str(self.query.a),
                "b": str(self.query.b),
                "c": str(self.query.c),
                "delta": self.query.delta,
                "r": self.query.r,
            },
            "slice": sorted(str(v) for v in self.members),
            "size": len(self.members),
            "exact": self.exact,
            "weak_D": self.weak_D,
            "bound": str(self.bound),
            "margin_log10": self.margin_log10,
        }


def verify_slice_bounds(
    kind: SurfaceKind,
    query: SliceQuery,
    M: int,
    D: Optional[int] = None,
    budget: int = 32,
    seed: int = 0,
    delta_hyp: int = DEFAULT_DELTA_HYP,
) -> SliceVerification:
    """Compute a slice and check it against the matching surface bound.

    Raises HypothesisViolation naming the failed hypothesis: c must lie
    on some geodesic between a and b, and the radius form additionally
    needs the distance gap and c clear of both enlarged balls.
    """
    a, b, c = query.a, query.b, query.c
    if c not in geodesic_vertices(a, b):
        raise HypothesisViolation("c must lie on a geodesic between a and b")
    surface = surface_for_kind(kind)
    if D is not None and D < M:
        raise PreconditionViolation("weak-tight verification requires D >= M")
    if query.r == 0:
        if D is None:
            members = tight_slice(kind, a, b, c, query.delta)
            bound = slice_bound_tight(surface, M)[0]
        else:
            members = weak_tight_slice(kind, a, b, c, query.delta, D)
            bound = slice_bound_weak(surface, D, M)[0]
        exact = True
    else:
        j = 3 * delta_hyp + 2
        if distance(a, b) < 2 * query.r + 2 * j + 1:
            raise HypothesisViolation(
                "radius slice requires d(a, b) >= 2r + 2j + 1 with j = 3*delta + 2"
            )
        if distance(c, a) <= query.r + j or distance(c, b) <= query.r + j:
            raise HypothesisViolation("c must avoid the (r + j)-balls of a and b")
        sampled = radius_slice_sample(
            kind, a, b, query.r, c, query.delta, budget, seed, delta_hyp
        )
        members = sampled.members
        bound = (
            slice_bound_tight(surface, M)[1]
            if D is None
            else slice_bound_weak(surface, D, M)[1]
        )
        exact = False
    size_log10 = log10_upper(max(len(members), 1))
    margin = float(bound.log10_upper - size_log10)
    if len(members) > 0 and bound.exact is not None and len(members) > bound.exact:
        raise AssertionError("slice exceeds its computable bound")
    return SliceVerification(query, members, exact, bound, margin, D)
