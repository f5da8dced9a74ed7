"""Core Farey model: exact arithmetic, distances, geodesics, oracle checks."""

from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import random_mobius, random_slope
from conftest import slopes_with_denominator_up_to
from fareyulfp.errors import PreconditionViolation
from fareyulfp.farey import (
    INFINITY,
    IDENTITY,
    Geodesic,
    MobiusMap,
    Slope,
    SurfaceKind,
    adjacent,
    apply,
    canonical,
    common_neighbors,
    dehn_twist,
    det,
    distance,
    geodesic_vertices,
    geodesics,
    half_twist,
    intersection,
    link_at_distance,
    normalizer_to_infinity,
    parse_slope_file,
    pivot_candidates,
    random_neighbor,
)

slope_ints = st.integers(min_value=-40, max_value=40)


def slopes(draw_q_zero: bool = True):
    base = st.tuples(slope_ints, slope_ints).filter(lambda t: t != (0, 0))
    return base.map(lambda t: canonical(*t))


class TestSlope:
    def test_parse_and_str_round_trip(self):
        for text in ["1/0", "0/1", "-3/7", "22/7"]:
            assert str(Slope.parse(text)) == text

    def test_parse_bare_integer_and_unreduced(self):
        assert Slope.parse("5") == Slope(5, 1)
        assert Slope.parse("6/4") == Slope(3, 2)
        assert Slope.parse("3/-2") == Slope(-3, 2)

    def test_invalid_slopes_rejected(self):
        with pytest.raises(ValueError):
            Slope(2, 4)
        with pytest.raises(ValueError):
            Slope(2, 0)
        with pytest.raises(ValueError):
            Slope(1, -2)
        with pytest.raises(ValueError):
            canonical(0, 0)

    def test_canonical_normalizes_sign_and_gcd(self):
        assert canonical(-4, -6) == Slope(2, 3)
        assert canonical(-3, 0) == INFINITY
        assert INFINITY.is_infinity

    @given(slopes())
    def test_canonical_idempotent(self, x):
        assert canonical(x.p, x.q) == x


class TestAdjacency:
    def test_known_edges(self):
        assert adjacent(INFINITY, Slope(0, 1))
        assert adjacent(Slope(1, 2), Slope(1, 3))
        assert not adjacent(INFINITY, Slope(1, 2))
        assert not adjacent(Slope(0, 1), Slope(0, 1))

    def test_intersection_factor(self):
        x, y = INFINITY, Slope(1, 2)
        assert intersection(SurfaceKind.TORUS_1_1, x, y) == 2
        assert intersection(SurfaceKind.SPHERE_0_4, x, y) == 4

    @given(slopes(), slopes())
    def test_det_antisymmetric(self, x, y):
        assert det(x, y) == -det(y, x)


class TestMobius:
    def test_determinant_validated(self):
        with pytest.raises(ValueError):
            MobiusMap(2, 0, 0, 1)

    @given(slopes())
    def test_inverse_is_projective_inverse(self, x):
        rng = random.Random(x.p * 1000 + x.q)
        m = random_mobius(rng)
        assert apply(m.inverse(), apply(m, x)) == x
        assert apply(m, apply(m.inverse(), x)) == x

    @given(slopes())
    def test_normalizer_sends_slope_to_infinity(self, x):
        g = normalizer_to_infinity(x)
        assert apply(g, x) == INFINITY
        assert g.determinant in (1, -1)

    def test_normalizer_is_canonical_bezout(self):
        # For p/q the Bezout cofactor v = p^{-1} mod q pins the map down.
        g = normalizer_to_infinity(Slope(3, 5))
        assert (g.a, g.b, g.c, g.d) == (2, -1, -5, 3)
        assert normalizer_to_infinity(INFINITY) == IDENTITY

    @given(slopes(), slopes())
    def test_mobius_action_preserves_adjacency(self, x, y):
        rng = random.Random(hash((x, y)) & 0xFFFF)
        m = random_mobius(rng)
        assert adjacent(x, y) == adjacent(apply(m, x), apply(m, y))


class TestTwists:
    def test_basic_shear_at_infinity(self):
        # twisting along 1/0 shears the numerator
        kind = SurfaceKind.TORUS_1_1
        assert dehn_twist(kind, INFINITY, 3, Slope(0, 1)) in (
            Slope(3, 1),
            Slope(-3, 1),
        )

    def test_half_twist_squares_to_sphere_twist(self):
        rng = random.Random(5)
        for _ in range(50):
            x, y = random_slope(rng), random_slope(rng)
            n = rng.randint(-6, 6)
            assert half_twist(x, 2 * n, y) == dehn_twist(
                SurfaceKind.SPHERE_0_4, x, n, y
            )

    @given(slopes(), st.integers(min_value=-10, max_value=10))
    def test_twist_is_invertible(self, y, n):
        for kind in SurfaceKind:
            x = INFINITY if y != INFINITY else Slope(0, 1)
            z = dehn_twist(kind, x, n, y)
            assert dehn_twist(kind, x, -n, z) == y

    def test_twist_fixes_the_twisting_curve(self):
        x = Slope(3, 7)
        assert dehn_twist(SurfaceKind.TORUS_1_1, x, 4, x) == x


class TestDistance:
    def test_small_known_values(self):
        assert distance(INFINITY, INFINITY) == 0
        assert distance(INFINITY, Slope(0, 1)) == 1
        assert distance(INFINITY, Slope(1, 2)) == 2
        assert distance(Slope(0, 1), Slope(1, 2)) == 1
        # deeper continued fractions need more steps (oracle-verified)
        assert distance(INFINITY, Slope(5, 12)) == 4
        assert distance(INFINITY, Slope(2, 5)) == 3

    def test_oracle_equivalence_small_box(self, box26):
        slopes_small = slopes_with_denominator_up_to(13)
        for x, y in combinations(slopes_small, 2):
            assert distance(x, y) == box26.distance(x, y), (x, y)

    def test_geodesics_match_exhaustive_enumeration(self, box16):
        slopes_small = slopes_with_denominator_up_to(8)
        for x, y in combinations(slopes_small, 2):
            ours = {g.vertices for g in geodesics(x, y)}
            assert ours == box16.geodesics(x, y), (x, y)

    @given(slopes(), slopes())
    def test_symmetry_and_separation(self, x, y):
        d = distance(x, y)
        assert d == distance(y, x)
        assert (d == 0) == (x == y)
        assert (d == 1) == adjacent(x, y)

    @given(slopes(), slopes(), slopes())
    def test_triangle_inequality(self, x, y, z):
        assert distance(x, z) <= distance(x, y) + distance(y, z)

    @settings(max_examples=50)
    @given(slopes(), slopes(), st.integers(min_value=0, max_value=2**32))
    def test_mobius_invariance(self, x, y, seed):
        m = random_mobius(random.Random(seed))
        assert distance(x, y) == distance(apply(m, x), apply(m, y))


class TestGeodesics:
    def test_geodesic_validation(self):
        with pytest.raises(ValueError):
            Geodesic((INFINITY, Slope(1, 2)))  # not adjacent
        with pytest.raises(ValueError):
            # valid path but longer than the distance
            Geodesic((INFINITY, Slope(0, 1), Slope(1, 1), Slope(1, 0)))

    def test_geodesic_parse_round_trip(self):
        g = Geodesic.parse("1/0,0/1,1/2")
        assert g.length == 2 and g.start == INFINITY and g.end == Slope(1, 2)
        assert Geodesic.parse(str(g)) == g

    def test_trivial_and_edge_geodesics(self):
        assert geodesics(INFINITY, INFINITY) == {Geodesic((INFINITY,))}
        only = geodesics(INFINITY, Slope(0, 1))
        assert only == {Geodesic((INFINITY, Slope(0, 1)))}

    def test_spec_example_vertices(self):
        # Both geodesics from 1/0 to 1/2 pass through 0/1 or 1/1.
        verts = geodesic_vertices(INFINITY, Slope(1, 2))
        assert verts == {INFINITY, Slope(0, 1), Slope(1, 1), Slope(1, 2)}

    @given(slopes(), slopes())
    def test_geodesics_have_common_endpoints_and_length(self, x, y):
        d = distance(x, y)
        for g in geodesics(x, y):
            assert g.start == x and g.end == y and g.length == d


class TestCandidates:
    def test_pivot_candidates_contain_endpoints(self):
        x, y = Slope(3, 7), Slope(-5, 2)
        pivots = pivot_candidates(x, y)
        assert x in pivots and y in pivots

    def test_pivot_candidates_rejects_equal(self):
        with pytest.raises(PreconditionViolation):
            pivot_candidates(INFINITY, INFINITY)

    @given(slopes(), slopes())
    def test_common_neighbors_are_mutual(self, u, w):
        if u == w:
            return
        for v in common_neighbors(u, w):
            assert adjacent(v, u) and adjacent(v, w)
        assert len(common_neighbors(u, w)) <= 2

    def test_common_neighbors_of_adjacent_pair(self):
        both = common_neighbors(INFINITY, Slope(0, 1))
        assert both == {Slope(1, 1), Slope(-1, 1)}

    def test_link_at_distance(self):
        target = Slope(5, 12)
        d = distance(INFINITY, target)
        link = link_at_distance(INFINITY, target, d - 1)
        assert link
        for v in link:
            assert adjacent(INFINITY, v)
            assert distance(v, target) == d - 1

    def test_random_neighbor_is_adjacent(self):
        x = Slope(3, 5)
        seen = {random_neighbor(x, off) for off in range(-4, 5)}
        assert len(seen) == 9
        assert all(adjacent(x, v) for v in seen)


def test_parse_slope_file_with_comments():
    lines = ["# header", " 1/0 ", "", "2/3  # inline", "-1/1"]
    assert parse_slope_file(lines) == [INFINITY, Slope(2, 3), Slope(-1, 1)]
