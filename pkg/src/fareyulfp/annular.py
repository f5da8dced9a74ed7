"""Twist-coordinate model of annular subsurface projections.

The true annular-cover distance is replaced by an exactly computable
surrogate: transport the annulus core to 1/0 by its canonical normalizer,
read each curve as a rational twist coordinate, and compare the floors of
the coordinates measured in full-twist units.  On the torus this
reproduces the twist-distance identity d(y, T^n y) = |n| + 2 exactly; on
the four-holed sphere the half-twist count is recovered within +-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EmptyProjection
from .farey import MobiusMap, Slope, SurfaceKind, apply, normalizer_to_infinity

TwistCoord = Fraction


@dataclass(frozen=True, slots=True)
class Annulus:
    """Annular subsurface named by its core slope.

    The normalizer is always the canonical Bezout map sending the core to
    1/0, so twist coordinates are reproducible across runs.
    """

    core: Slope
    normalizer: MobiusMap = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.normalizer is None:
            object.__setattr__(self, "normalizer", normalizer_to_infinity(self.core))
        elif self.normalizer != normalizer_to_infinity(self.core):
            raise ValueError(f"non-canonical normalizer for core {self.core}")

    def __str__(self) -> str:
        return str(self.core)


def projects(Z: Annulus, y: Slope) -> bool:
    """True iff y has nonempty projection to Z, i.e. y is not the core."""
    return y != Z.core


def twist_coord(Z: Annulus, y: Slope) -> TwistCoord:
    """The normalized chart position of y as an exact rational."""
    if not projects(Z, y):
        raise EmptyProjection(f"{y} is the core of the annulus")
    t = apply(Z.normalizer, y)
    return Fraction(t.p, t.q)


def annular_distance(kind: SurfaceKind, Z: Annulus, y: Slope, z: Slope) -> int:
    """Model distance between the projections of y and z to Z.

    Equal curves project to a single set of diameter 1; otherwise the
    distance is the gap between floor-of-twist values plus 2, with the
    floor taken in full-twist units (1 on the torus, 2 on the sphere).
    """
    ty = twist_coord(Z, y)
    tz = twist_coord(Z, z)
    if y == z:
        return 1
    s = kind.twist_shift
    return abs((ty // s) - (tz // s)) + 2
