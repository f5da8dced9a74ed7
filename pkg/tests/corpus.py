"""Seeded corpora shared by the module tests and the acceptance suite."""

from __future__ import annotations

import random
from fractions import Fraction

from fareyulfp.farey import (
    INFINITY,
    IDENTITY,
    MobiusMap,
    Slope,
    apply,
    canonical,
    distance,
)


def random_slope(rng: random.Random, size: int = 20) -> Slope:
    while True:
        p = rng.randint(-size, size)
        q = rng.randint(0, size)
        if (p, q) != (0, 0):
            return canonical(p, q)


def random_mobius(rng: random.Random, words: int = 4, shift: int = 3) -> MobiusMap:
    m = IDENTITY
    for _ in range(words):
        n = rng.randint(-shift, shift)
        if rng.random() < 0.5:
            m = m.compose(MobiusMap(1, n, 0, 1))
        else:
            m = m.compose(MobiusMap(1, 0, n, 1))
    return m


def continued_fraction_slope(terms: list[int]) -> Slope:
    value = Fraction(0)
    for t in reversed(terms):
        value = Fraction(1, t + value)
    return canonical(value.numerator, value.denominator)


def far_pair_corpus(seed: int, count: int, lo: int = 3, hi: int = 6):
    """Random transported pairs with curve-graph distance in [lo, hi]."""
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        terms = [rng.randint(1, 3) for _ in range(rng.randint(4, 10))]
        y = continued_fraction_slope(terms)
        m = random_mobius(rng)
        a, b = apply(m, INFINITY), apply(m, y)
        if lo <= distance(a, b) <= hi:
            pairs.append((a, b))
    return pairs


# Frozen regression values for the seeded audit corpus below; recompute by
# running bgit_audit over far_pair_corpus(BGIT_CORPUS_SEED, 100).
BGIT_CORPUS_SEED = 7
M_EMP = 3  # same value on both surface kinds and on the 50-pair prefix
M_EMP_ATTAINING_VERTEX = "-13/4"
