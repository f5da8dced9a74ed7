"""Exact evaluation of the recursive local-finiteness bounds.

The threshold N_S(l, k) is ((l+2M+2)k)^(l+1) on the once-holed torus,
(2(l+2M+2)k)^(l+1) on the four-holed sphere, and recursively
(2 N'(l+2M, k))^(l+1) in higher complexity, where N' is the maximum of
the bounds over strictly smaller complexity.  Values explode
superexponentially, so every result carries a rational upper bound on its
log10 and the exact integer is only materialized below a digit cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import PreconditionViolation
from .farey import SurfaceKind

# float log10 rounded up far enough to stay an upper bound after scaling
_LOG10_2_UPPER = Fraction(math.log10(2)) + Fraction(1, 10**15)
_SLACK = Fraction(1, 10**9)

DEFAULT_DIGIT_CAP = 10**6


@dataclass(frozen=True, slots=True)
class Surface:
    """Compact surface of genus g with n boundary components, xi >= 1."""

    g: int
    n: int

    def __post_init__(self) -> None:
        if self.g < 0 or self.n < 0:
            raise ValueError("genus and boundary count must be nonnegative")
        if 3 * self.g + self.n - 3 < 1:
            raise ValueError(f"surface S_{{{self.g},{self.n}}} has complexity < 1")

    def __str__(self) -> str:
        return f"S_{self.g},{self.n}"


TORUS_1_1 = Surface(1, 1)
SPHERE_0_4 = Surface(0, 4)


def surface_for_kind(kind: SurfaceKind) -> Surface:
    return TORUS_1_1 if kind is SurfaceKind.TORUS_1_1 else SPHERE_0_4


def complexity(s: Surface) -> int:
    return 3 * s.g + s.n - 3


@dataclass(frozen=True, slots=True)
class BoundParams:
    l: int
    k: int
    M: int

    def __post_init__(self) -> None:
        if self.l <= 0:
            raise PreconditionViolation("l must be positive")
        if self.k <= 1:
            raise PreconditionViolation("k must exceed 1")
        if self.M <= 0:
            raise PreconditionViolation("M must be positive")


@dataclass(frozen=True)
class BigBound:
    """A bound value: exact integer when feasible, log10 envelope always."""

    log10_upper: Fraction
    exact: Optional[int] = None

    @property
    def mode(self) -> str:
        return "exact" if self.exact is not None else "log10"

    def __str__(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        return f"10^{float(self.log10_upper):.6f}"


def log10_upper(value: int) -> Fraction:
    """A rational upper bound on log10(value), tight to well under 1e-6."""
    if value <= 0:
        raise ValueError("log10 of a nonpositive value")
    bits = value.bit_length()
    if bits <= 64:
        return Fraction(math.log10(value)) + _SLACK
    shift = bits - 64
    lead = value >> shift
    return Fraction(math.log10(lead + 1)) + shift * _LOG10_2_UPPER + _SLACK


@lru_cache(maxsize=None)
def _n_exact(xi: int, l: int, k: int, M: int, torus: bool) -> int:
    if xi == 1:
        base_len = l + 2 * M + 2
        base = base_len * k if torus else 2 * base_len * k
        return base ** (l + 1)
    L = l + 2 * M
    # the maximum over smaller complexity is surface-blind above xi = 1
    # and the sphere dominates the torus at xi = 1
    n_prime = max(_n_exact(c, L, k, M, False) for c in range(1, xi))
    return (2 * n_prime) ** (l + 1)


@lru_cache(maxsize=None)
def _n_log10(xi: int, l: int, k: int, M: int, torus: bool) -> Fraction:
    if xi == 1:
        base_len = l + 2 * M + 2
        base = base_len * k if torus else 2 * base_len * k
        return (l + 1) * log10_upper(base)
    L = l + 2 * M
    n_prime = max(_n_log10(c, L, k, M, False) for c in range(1, xi))
    return (l + 1) * (_LOG10_2_UPPER + _SLACK + n_prime)


def n_bound(
    s: Surface,
    p: BoundParams,
    mode: str = "auto",
    digit_cap: int = DEFAULT_DIGIT_CAP,
) -> BigBound:
    """The computable threshold N_S(l, k) for the given surface.

    mode "auto" materializes the exact integer whenever the predicted
    digit count stays below digit_cap, "exact" forces materialization,
    and "log10" returns only the envelope.
    """
    if mode not in ("auto", "exact", "log10"):
        raise ValueError(f"unknown mode {mode!r}")
    xi = complexity(s)
    torus = s == TORUS_1_1
    envelope = _n_log10(xi, p.l, p.k, p.M, torus)
    if mode == "log10":
        return BigBound(envelope)
    if mode == "auto" and envelope >= digit_cap:
        return BigBound(envelope)
    return BigBound(envelope, _n_exact(xi, p.l, p.k, p.M, torus))


def slice_bound_tight(s: Surface, M: int, **kw) -> tuple[BigBound, BigBound]:
    """Slice bounds N_S(2M, 3) (pointwise) and N_S(4M, 3) (radius form)."""
    return (
        n_bound(s, BoundParams(2 * M, 3, M), **kw),
        n_bound(s, BoundParams(4 * M, 3, M), **kw),
    )


def slice_bound_weak(s: Surface, D: int, M: int, **kw) -> tuple[BigBound, BigBound]:
    """Weak-tight slice bounds N_S(2D, 3) and N_S(2(D+M), 3); needs D >= M."""
    if D < M:
        raise PreconditionViolation("weak-tight bound requires D >= M")
    return (
        n_bound(s, BoundParams(2 * D, 3, M), **kw),
        n_bound(s, BoundParams(2 * (D + M), 3, M), **kw),
    )


def growth_upper(s: Surface, p: BoundParams) -> BigBound:
    """log10 of the closed-form envelope N_{S04}(xi*L, k)^((2*xi*L)^xi)."""
    xi = complexity(s)
    L = p.l + 2 * p.M
    inner = _n_log10(1, xi * L, p.k, p.M, False)
    return BigBound((2 * xi * L) ** xi * inner)
