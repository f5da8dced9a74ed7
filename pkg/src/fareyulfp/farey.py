"""Exact model of the genus-one curve graphs as the Farey graph.

Vertices are reduced slopes p/q (with 1/0 for the vertical curve), edges
join slopes whose determinant is +-1.  The graph is locally infinite, so
distance and geodesic queries run inside a finite candidate set built from
the Farey-tessellation triangles crossed by the hyperbolic line between
the endpoints; the companion :mod:`fareyulfp.boxgraph` oracle is used by
the test suite to certify that this restriction loses nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable

from .errors import PreconditionViolation


class SurfaceKind(Enum):
    TORUS_1_1 = "torus"
    SPHERE_0_4 = "sphere"

    @property
    def intersection_factor(self) -> int:
        # slopes on the four-holed sphere meet twice per lattice crossing
        return 1 if self is SurfaceKind.TORUS_1_1 else 2

    @property
    def twist_shift(self) -> int:
        # unit shears per full twist in the normalized chart
        return 1 if self is SurfaceKind.TORUS_1_1 else 2


@dataclass(frozen=True, order=True, slots=True)
class Slope:
    """A reduced rational p/q with q >= 0; 1/0 encodes infinity."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ValueError(f"denominator must be nonnegative: {self.p}/{self.q}")
        if self.q == 0:
            if self.p != 1:
                raise ValueError(f"infinity must be written 1/0, got {self.p}/0")
        elif math.gcd(self.p, self.q) != 1:
            raise ValueError(f"slope not reduced: {self.p}/{self.q}")

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse "p/q" (or a bare integer) into a canonical slope."""
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return canonical(int(num), int(den))
        return canonical(int(text), 1)


INFINITY = Slope(1, 0)


def canonical(p: int, q: int) -> Slope:
    """Reduce (p, q) to the canonical representative with q >= 0."""
    if p == 0 and q == 0:
        raise ValueError("(0, 0) does not represent a slope")
    if q < 0:
        p, q = -p, -q
    if q == 0:
        return INFINITY
    g = math.gcd(p, q)
    return Slope(p // g, q // g)


def det(x: Slope, y: Slope) -> int:
    return x.p * y.q - x.q * y.p


def intersection(kind: SurfaceKind, x: Slope, y: Slope) -> int:
    """Geometric intersection number of two slopes on the given surface."""
    return kind.intersection_factor * abs(det(x, y))


def adjacent(x: Slope, y: Slope) -> bool:
    """Farey adjacency; the same graph underlies both xi = 1 surfaces."""
    return abs(det(x, y)) == 1


@dataclass(frozen=True, slots=True)
class MobiusMap:
    """Integer 2x2 matrix of determinant +-1 acting on slopes."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c not in (1, -1):
            raise ValueError(f"determinant must be +-1: {self}")

    @property
    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """Matrix product self * other (apply other first)."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MobiusMap":
        # projectively correct for determinant -1 as well
        return MobiusMap(self.d, -self.b, -self.c, self.a)


IDENTITY = MobiusMap(1, 0, 0, 1)


def apply(m: MobiusMap, x: Slope) -> Slope:
    """Action of a Mobius map on a slope; a Farey-graph automorphism."""
    return canonical(m.a * x.p + m.b * x.q, m.c * x.p + m.d * x.q)


@lru_cache(maxsize=1 << 16)
def normalizer_to_infinity(x: Slope) -> MobiusMap:
    """The canonical map g with apply(g, x) = 1/0.

    For x = p/q with q > 0 the Bezout pair (u, v) with p*v - q*u = 1 is
    pinned down by 0 <= v < q (v = p^{-1} mod q), which makes every
    downstream twist coordinate reproducible.  The identity is returned
    for x = 1/0.
    """
    if x.is_infinity:
        return IDENTITY
    p, q = x.p, x.q
    v = pow(p, -1, q)
    u = (p * v - 1) // q
    return MobiusMap(v, -u, -q, p)


def _conjugated_shear(x: Slope, shift: int, y: Slope) -> Slope:
    g = normalizer_to_infinity(x)
    sheared = apply(g, y)
    sheared = canonical(sheared.p + shift * sheared.q, sheared.q)
    return apply(g.inverse(), sheared)


def dehn_twist(kind: SurfaceKind, x: Slope, n: int, y: Slope) -> Slope:
    """n-fold full twist along x applied to y."""
    return _conjugated_shear(x, n * kind.twist_shift, y)


def half_twist(x: Slope, n: int, y: Slope) -> Slope:
    """n-fold half twist along x; two half twists make one sphere twist."""
    return _conjugated_shear(x, n, y)


def _normalized_walk(t: Slope) -> tuple[list[Slope], list[tuple[Slope, Slope]]]:
    """Pivot vertices and triangle edges for the line from 1/0 to t.

    Works in the chart where the first endpoint is infinity.  The walk
    descends the Stern-Brocot tree by mediants; every vertex of every
    tessellation triangle crossed by the line shows up, together with the
    edges of those triangles.
    """
    p, q = t.p, t.q
    m = p // q
    pivots = [INFINITY]
    edges: list[tuple[Slope, Slope]] = []
    if q == 1:
        # adjacent endpoints: both triangles sharing the edge 1/0 -- t
        lo, me, hi = Slope(m - 1, 1), Slope(m, 1), Slope(m + 1, 1)
        pivots += [lo, me, hi]
        edges += [(INFINITY, lo), (INFINITY, me), (INFINITY, hi), (lo, me), (me, hi)]
        return pivots, edges
    lo = (m, 1)
    hi = (m + 1, 1)
    lo_s, hi_s = Slope(*lo), Slope(*hi)
    pivots += [lo_s, hi_s]
    edges += [(INFINITY, lo_s), (INFINITY, hi_s), (lo_s, hi_s)]
    while True:
        med = (lo[0] + hi[0], lo[1] + hi[1])
        med_s = Slope(*med)
        pivots.append(med_s)
        edges += [(Slope(*lo), med_s), (med_s, Slope(*hi))]
        if med == (p, q):
            return pivots, edges
        if med[0] * q < p * med[1]:
            lo = med
        else:
            hi = med


def pivot_candidates(x: Slope, y: Slope) -> frozenset[Slope]:
    """Vertices of all tessellation triangles crossed by the line x -- y."""
    if x == y:
        raise PreconditionViolation("pivot_candidates requires distinct slopes")
    g = normalizer_to_infinity(x)
    ginv = g.inverse()
    pivots, _ = _normalized_walk(apply(g, y))
    return frozenset(apply(ginv, v) for v in pivots)


def common_neighbors(u: Slope, w: Slope) -> frozenset[Slope]:
    """All slopes adjacent to both u and w; at most two exist."""
    if u == w:
        raise PreconditionViolation("common_neighbors requires distinct slopes")
    g = normalizer_to_infinity(u)
    ginv = g.inverse()
    t = apply(g, w)
    out = []
    for num in (t.p - 1, t.p + 1):
        if num % t.q == 0:
            out.append(apply(ginv, Slope(num // t.q, 1)))
    return frozenset(out)


def _bfs(adjacency: dict[Slope, list[Slope]], source: Slope) -> dict[Slope, int]:
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


@lru_cache(maxsize=1 << 17)
def _distance_normalized(t: Slope) -> int:
    """Distance from 1/0 to t along the pivot strip."""
    pivots, edges = _normalized_walk(t)
    adjacency: dict[Slope, list[Slope]] = {v: [] for v in pivots}
    for u, w in edges:
        adjacency[u].append(w)
        adjacency[w].append(u)
    dist = _bfs(adjacency, INFINITY)
    if t not in dist:
        raise RuntimeError(f"pivot strip failed to connect 1/0 to {t}")
    return dist[t]


def distance(x: Slope, y: Slope) -> int:
    """Curve-graph distance, computed inside the pivot candidate set.

    The locally infinite graph is searched only along the tessellation
    strip between the endpoints; the test suite certifies agreement with
    an exhaustive breadth-first oracle on denominator boxes.
    """
    if x == y:
        return 0
    if adjacent(x, y):
        return 1
    return _distance_normalized(apply(normalizer_to_infinity(x), y))


@dataclass(frozen=True, order=True, slots=True)
class Geodesic:
    """A certified geodesic: consecutive vertices adjacent, length minimal."""

    vertices: tuple[Slope, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 1:
            raise ValueError("a geodesic has at least one vertex")
        for u, w in zip(self.vertices, self.vertices[1:]):
            if not adjacent(u, w):
                raise ValueError(f"vertices not adjacent: {u}, {w}")
        if len(self.vertices) - 1 != distance(self.vertices[0], self.vertices[-1]):
            raise ValueError("sequence is longer than the endpoint distance")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> Slope:
        return self.vertices[0]

    @property
    def end(self) -> Slope:
        return self.vertices[-1]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.vertices)

    @classmethod
    def parse(cls, text: str) -> "Geodesic":
        return cls(tuple(Slope.parse(part) for part in text.split(",")))


def _closure_normalized(t: Slope) -> list[Slope]:
    """Pivots plus common neighbors of adjacent pivot pairs, in the chart."""
    pivots, edges = _normalized_walk(t)
    out = set(pivots)
    for u, w in edges:
        out |= common_neighbors(u, w)
    return sorted(out)


def _induced_adjacency(vertices: list[Slope]) -> dict[Slope, list[Slope]]:
    adjacency: dict[Slope, list[Slope]] = {v: [] for v in vertices}
    n = len(vertices)
    for i in range(n):
        vi = vertices[i]
        for j in range(i + 1, n):
            vj = vertices[j]
            if abs(vi.p * vj.q - vi.q * vj.p) == 1:
                adjacency[vi].append(vj)
                adjacency[vj].append(vi)
    return adjacency


@lru_cache(maxsize=1 << 13)
def _geodesics_normalized(t: Slope) -> tuple[tuple[Slope, ...], ...]:
    """All geodesics from 1/0 to t with vertices in the candidate closure."""
    closure = _closure_normalized(t)
    adjacency = _induced_adjacency(closure)
    to_target = _bfs(adjacency, t)
    d = to_target.get(INFINITY)
    if d is None or d != _distance_normalized(t):
        raise RuntimeError(f"candidate closure disagrees with strip distance for {t}")
    paths: list[tuple[Slope, ...]] = []

    def descend(v: Slope, prefix: list[Slope]) -> None:
        if v == t:
            paths.append(tuple(prefix))
            return
        level = to_target[v]
        for w in adjacency[v]:
            if to_target.get(w) == level - 1:
                prefix.append(w)
                descend(w, prefix)
                prefix.pop()

    descend(INFINITY, [INFINITY])
    return tuple(sorted(paths))


def geodesics(x: Slope, y: Slope) -> frozenset[Geodesic]:
    """All geodesics between x and y found in the candidate closure.

    Closure completeness is an engineering hypothesis, not a theorem; the
    test suite cross-validates against exhaustive path enumeration.
    """
    if x == y:
        return frozenset({Geodesic((x,))})
    g = normalizer_to_infinity(x)
    ginv = g.inverse()
    out = set()
    for path in _geodesics_normalized(apply(g, y)):
        out.add(Geodesic(tuple(apply(ginv, v) for v in path)))
    return frozenset(out)


def link_at_distance(x: Slope, target: Slope, d: int) -> frozenset[Slope]:
    """Neighbors of x, within the candidate closure, at distance d from target."""
    if d < 0:
        raise PreconditionViolation("distance must be nonnegative")
    if x == target:
        return frozenset()
    g = normalizer_to_infinity(x)
    ginv = g.inverse()
    t = apply(g, target)
    out = set()
    for v in _closure_normalized(t):
        if v.q == 1 and distance(v, t) == d:
            out.add(apply(ginv, v))
    return frozenset(out)


def geodesic_vertices(x: Slope, y: Slope) -> frozenset[Slope]:
    """Union of the vertex sets of all enumerated geodesics."""
    return frozenset(v for g in geodesics(x, y) for v in g.vertices)


def random_neighbor(x: Slope, offset: int) -> Slope:
    """The neighbor of x sitting at the given integer in its chart."""
    g = normalizer_to_infinity(x)
    return apply(g.inverse(), Slope(offset, 1))


def parse_slope_file(lines: Iterable[str]) -> list[Slope]:
    """Slope-list format: one "p/q" per line, "#" starts a comment."""
    out = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(Slope.parse(line))
    return out
