"""Property P(l, k, Z) checking and constructive local-finiteness search.

A curve set A satisfies P(l, k, Z) when it holds no k curves whose
projections to Z are pairwise more than l apart.  The subsurfaces worth
checking are the whole surface plus the annuli around vertices of
enumerated geodesics between members of A: a large annular gap forces the
core onto every geodesic between the offending pair, so no witness can
hide elsewhere.  That restriction is an oracle-tested hypothesis, not a
theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .annular import Annulus, annular_distance, projects
from .errors import PreconditionViolation
from .farey import Geodesic, Slope, SurfaceKind, distance, geodesics
from .graphcore import BallCoverCertificate  # noqa: F401  (re-export for covers)

MAX_CLIQUE_K = 8


@dataclass(frozen=True, slots=True)
class SubsurfaceRef:
    """Either the whole surface (annulus None) or an essential annulus."""

    annulus: Optional[Annulus] = None

    @property
    def is_whole(self) -> bool:
        return self.annulus is None

    def __str__(self) -> str:
        return "whole" if self.annulus is None else f"annulus:{self.annulus.core}"


WHOLE = SubsurfaceRef()


def annular_ref(core: Slope) -> SubsurfaceRef:
    return SubsurfaceRef(Annulus(core))


def projects_to(Z: SubsurfaceRef, y: Slope) -> bool:
    return Z.is_whole or projects(Z.annulus, y)


def proj_distance(kind: SurfaceKind, Z: SubsurfaceRef, y: Slope, z: Slope) -> int:
    """Distance between projections: graph distance for the whole surface,
    the twist model for annuli."""
    if Z.is_whole:
        return distance(y, z)
    return annular_distance(kind, Z.annulus, y, z)


def candidate_subsurfaces(
    kind: SurfaceKind, A: Iterable[Slope]
) -> tuple[SubsurfaceRef, ...]:
    """The whole surface plus annuli around all geodesic vertices of A-pairs.

    Deterministic order: whole surface first, then cores sorted by
    denominator and numerator.
    """
    members = sorted(set(A))
    if len(members) < 2:
        raise PreconditionViolation("candidate_subsurfaces needs at least 2 curves")
    cores: set[Slope] = set()
    for x, y in combinations(members, 2):
        for g in geodesics(x, y):
            cores.update(g.vertices)
    ordered = sorted(cores, key=lambda s: (s.q, s.p))
    return (WHOLE,) + tuple(annular_ref(core) for core in ordered)


@dataclass(frozen=True)
class PropertyPReport:
    holds: bool
    witness: Optional[tuple[frozenset[Slope], SubsurfaceRef]]
    checked_subsurfaces: int

    def __post_init__(self) -> None:
        if self.holds == (self.witness is not None):
            raise ValueError("witness present iff the property fails")


def _find_clique(
    members: Sequence[Slope], far: dict[Slope, set[Slope]], k: int
) -> Optional[frozenset[Slope]]:
    """Exact k-clique search on the far-pair graph (small k, small sets)."""

    def extend(clique: list[Slope], candidates: list[Slope]) -> Optional[frozenset[Slope]]:
        if len(clique) == k:
            return frozenset(clique)
        if len(clique) + len(candidates) < k:
            return None
        for i, v in enumerate(candidates):
            clique.append(v)
            narrowed = [w for w in candidates[i + 1 :] if w in far[v]]
            found = extend(clique, narrowed)
            if found is not None:
                return found
            clique.pop()
        return None

    return extend([], list(members))


def check_P(
    kind: SurfaceKind,
    A: Iterable[Slope],
    l: int,
    k: int,
    Z: SubsurfaceRef,
) -> PropertyPReport:
    """Decide P(l, k, Z) by clique search on the threshold graph.

    Curves with empty projection to Z are skipped.  Exact search only,
    bounded at k <= 8.
    """
    if l <= 0:
        raise PreconditionViolation("l must be positive")
    if not 1 < k <= MAX_CLIQUE_K:
        raise PreconditionViolation(f"k must lie in (1, {MAX_CLIQUE_K}]")
    members = sorted({a for a in set(A) if projects_to(Z, a)})
    far: dict[Slope, set[Slope]] = {a: set() for a in members}
    for x, y in combinations(members, 2):
        if proj_distance(kind, Z, x, y) > l:
            far[x].add(y)
            far[y].add(x)
    clique = _find_clique(members, far, k)
    if clique is None:
        return PropertyPReport(True, None, 1)
    return PropertyPReport(False, (clique, Z), 1)


def check_P_all(
    kind: SurfaceKind, A: Iterable[Slope], l: int, k: int
) -> PropertyPReport:
    """Conjunction of P(l, k, Z) over the candidate subsurfaces of A."""
    members = sorted(set(A))
    if len(members) < 2 or len(members) < k:
        return PropertyPReport(True, None, 0)
    checked = 0
    for Z in candidate_subsurfaces(kind, members):
        checked += 1
        report = check_P(kind, members, l, k, Z)
        if not report.holds:
            return PropertyPReport(False, report.witness, checked)
    return PropertyPReport(True, None, checked)


@dataclass(frozen=True)
class CoverEntry:
    subsurface: SubsurfaceRef
    centers: tuple[Slope, ...]
    radius: int


@dataclass(frozen=True)
class UlfpCertificate:
    """Either a k-set of far curves or per-subsurface ball covers of A."""

    witness: Optional[tuple[frozenset[Slope], SubsurfaceRef]] = None
    covers: Optional[tuple[CoverEntry, ...]] = None

    def __post_init__(self) -> None:
        if (self.witness is None) == (self.covers is None):
            raise ValueError("exactly one of witness/covers must be present")

    @property
    def kind(self) -> str:
        return "witness" if self.witness is not None else "covered"

    def to_json(self) -> dict:
        if self.witness is not None:
            curves, Z = self.witness
            return {
                "type": "witness",
                "subsurface": str(Z),
                "slopes": sorted(str(c) for c in curves),
            }
        return {
            "type": "covered",
            "covers": [
                {
                    "subsurface": str(entry.subsurface),
                    "centers": [str(c) for c in entry.centers],
                    "radius": entry.radius,
                }
                for entry in self.covers
            ],
        }


def _greedy_centers(
    kind: SurfaceKind, members: Sequence[Slope], l: int, Z: SubsurfaceRef
) -> tuple[Slope, ...]:
    """Maximal pairwise->l subset of the projecting members, ascending order."""
    centers: list[Slope] = []
    for v in members:
        if not projects_to(Z, v):
            continue
        if all(proj_distance(kind, Z, v, c) > l for c in centers):
            centers.append(v)
    return tuple(centers)


def ulfp_witness(
    kind: SurfaceKind, A: Iterable[Slope], l: int, k: int
) -> UlfpCertificate:
    """Constructive dichotomy: a far k-set, or greedy covers in every
    checked subsurface (at most k-1 centers each, by maximality)."""
    members = sorted(set(A))
    report = check_P_all(kind, members, l, k)
    if not report.holds:
        return UlfpCertificate(witness=report.witness)
    if len(members) < 2:
        covers = (CoverEntry(WHOLE, tuple(members), l),)
        return UlfpCertificate(covers=covers)
    entries = []
    for Z in candidate_subsurfaces(kind, members):
        entries.append(CoverEntry(Z, _greedy_centers(kind, members, l, Z), l))
    return UlfpCertificate(covers=tuple(entries))


def lemma_co_construct(
    kind: SurfaceKind, x: Slope, B: Iterable[Slope], i: int
) -> frozenset[Slope]:
    """First-step vertices toward x of one geodesic per element of B.

    Every b in B must sit at distance exactly i > 1 from x; the geodesic
    used is the lexicographically least one, so certificates reproduce.
    """
    if i <= 1:
        raise PreconditionViolation("i must exceed 1")
    out = set()
    for b in sorted(set(B)):
        if distance(x, b) != i:
            raise PreconditionViolation(f"{b} is not at distance {i} from {x}")
        chosen = min(geodesics(x, b))
        out.add(chosen.vertices[1])
    return frozenset(out)


@dataclass(frozen=True)
class BgitAudit:
    """Empirical maximum of min(d(x,v), d(v,y)) over audited geodesics."""

    value: int
    attaining: Optional[tuple[Slope, Slope, Slope, Slope]]  # (x, y, v, core)
    pairs_audited: int
    pairs_skipped: int

    def to_json(self) -> dict:
        record = {
            "m_emp": self.value,
            "pairs_audited": self.pairs_audited,
            "pairs_skipped": self.pairs_skipped,
        }
        if self.attaining is not None:
            x, y, v, core = self.attaining
            record["attaining"] = {
                "pair": [str(x), str(y)],
                "vertex": str(v),
                "core": str(core),
            }
        return record


def bgit_audit(
    kind: SurfaceKind, pair_corpus: Iterable[tuple[Slope, Slope]]
) -> BgitAudit:
    """Empirical bounded-geodesic-image constant over a pair corpus.

    For each pair at distance > 2, every interior vertex of every
    enumerated geodesic is measured against both endpoints in every
    candidate annulus; the audit records the largest min-side value seen.
    Pairs at distance <= 2 are skipped and counted.
    """
    best = 0
    attaining = None
    audited = skipped = 0
    for x, y in pair_corpus:
        if distance(x, y) <= 2:
            skipped += 1
            continue
        audited += 1
        annuli = [Z for Z in candidate_subsurfaces(kind, (x, y)) if not Z.is_whole]
        for g in geodesics(x, y):
            for v in g.vertices[1:-1]:
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
                        attaining = (x, y, v, Z.annulus.core)
    return BgitAudit(best, attaining, audited, skipped)
