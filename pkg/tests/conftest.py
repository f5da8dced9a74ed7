from __future__ import annotations

import math

import pytest

from fareyulfp.boxgraph import BoxGraph
from fareyulfp.farey import INFINITY, Slope


@pytest.fixture(scope="session")
def box16() -> BoxGraph:
    return BoxGraph(16)


@pytest.fixture(scope="session")
def box26() -> BoxGraph:
    return BoxGraph(26)


def slopes_with_denominator_up_to(limit: int) -> list[Slope]:
    """All reduced slopes with |p| <= limit and 0 <= q <= limit."""
    out = [INFINITY]
    for q in range(1, limit + 1):
        for p in range(-limit, limit + 1):
            if math.gcd(p, q) == 1:
                out.append(Slope(p, q))
    return out
