"""Brute-force Farey graph on a denominator box.

Independent oracle for the pivot-strip search in :mod:`fareyulfp.farey`:
vertices are all reduced slopes with |p|, q <= bound (plus 1/0), adjacency
is computed directly from the determinant condition, and distances come
from plain breadth-first search.  Disagreement between the two routes is
a hard failure, never silently resolved.
"""

from __future__ import annotations

import math

import numpy as np

from .farey import INFINITY, Slope


class BoxGraph:
    """Induced Farey subgraph on the box |p| <= bound, 0 <= q <= bound."""

    def __init__(self, bound: int):
        if bound < 1:
            raise ValueError("bound must be positive")
        self.bound = bound
        vertices = [INFINITY]
        for q in range(1, bound + 1):
            for p in range(-bound, bound + 1):
                if math.gcd(p, q) == 1:
                    vertices.append(Slope(p, q))
        self.vertices = vertices
        self.index = {v: i for i, v in enumerate(vertices)}
        self._adjacency = [self._solve_neighbors(v) for v in vertices]
        self._dist_cache: dict[int, np.ndarray] = {}

    def _solve_neighbors(self, v: Slope) -> list[int]:
        """All box slopes w with |det(v, w)| = 1, by the Bezout line."""
        bound = self.bound
        found = set()
        if v.is_infinity:
            for n in range(-bound, bound + 1):
                found.add(self.index[Slope(n, 1)])
            return sorted(found)
        p, q = v.p, v.q
        s0 = pow(p, -1, q) if q > 1 else 0
        r0 = (p * s0 - 1) // q
        # p*(s0 + t*q) - q*(r0 + t*p) = 1; both determinant signs arise
        # after canonicalizing the sign of the denominator.
        t_lo = -((bound + s0) // q)
        t_hi = (bound - s0) // q
        for t in range(t_lo, t_hi + 1):
            r, s = r0 + t * p, s0 + t * q
            if s < 0 or (s == 0 and r < 0):
                r, s = -r, -s
            if s == 0:
                found.add(self.index[INFINITY])
            elif abs(r) <= bound and s <= bound:
                found.add(self.index[Slope(r, s)])
        return sorted(found)

    def neighbors(self, v: Slope) -> list[Slope]:
        return [self.vertices[i] for i in self._adjacency[self.index[v]]]

    def distance_map(self, source: Slope) -> np.ndarray:
        """BFS distances from source to every box vertex (-1 if unreached)."""
        src = self.index[source]
        cached = self._dist_cache.get(src)
        if cached is not None:
            return cached
        dist = np.full(len(self.vertices), -1, dtype=np.int32)
        dist[src] = 0
        frontier = [src]
        adjacency = self._adjacency
        level = 0
        while frontier:
            level += 1
            nxt = []
            for i in frontier:
                for j in adjacency[i]:
                    if dist[j] < 0:
                        dist[j] = level
                        nxt.append(j)
            frontier = nxt
        self._dist_cache[src] = dist
        return dist

    def distance(self, x: Slope, y: Slope) -> int:
        d = int(self.distance_map(y)[self.index[x]])
        if d < 0:
            raise RuntimeError(f"box graph does not connect {x} to {y}")
        return d

    def geodesics(self, x: Slope, y: Slope) -> set[tuple[Slope, ...]]:
        """Exhaustive shortest-path enumeration inside the box."""
        if x == y:
            return {(x,)}
        to_target = self.distance_map(y)
        start = self.index[x]
        if to_target[start] < 0:
            raise RuntimeError(f"box graph does not connect {x} to {y}")
        paths: set[tuple[Slope, ...]] = set()
        adjacency = self._adjacency
        vertices = self.vertices

        def descend(i: int, prefix: list[Slope]) -> None:
            if to_target[i] == 0:
                paths.add(tuple(prefix))
                return
            for j in adjacency[i]:
                if to_target[j] == to_target[i] - 1:
                    prefix.append(vertices[j])
                    descend(j, prefix)
                    prefix.pop()

        descend(start, [x])
        return paths
