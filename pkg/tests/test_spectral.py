"""The forward map: spectral data, strata, heat terms, Euler characteristic,
and per-facet bundle data."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delzant import (
    PoleError,
    Vec2,
    bundle_facet_data,
    donnelly_leading_term,
    euler_characteristic,
    evaluate_leading_coefficient,
    fixed_point_strata,
    random_delzant,
    spectral_data,
    vertex_count,
)

rational = st.fractions(min_value=-20, max_value=20, max_denominator=8)


class TestSpectralData:
    def test_unit_square(self, unit_square):
        data = spectral_data(unit_square)
        assert data.vertex_count == 4
        assert data.area == 1
        classes = {tuple(c.normal): (c.length_sum, c.edge_count) for c in data.classes}
        assert classes == {(0, 1): (2, 2), (1, 0): (2, 2)}

    def test_unit_triangle(self, unit_triangle):
        data = spectral_data(unit_triangle)
        assert data.vertex_count == 3
        assert data.area == Fraction(1, 2)
        classes = {tuple(c.normal): c.length_sum for c in data.classes}
        assert classes == {(0, 1): 1, (1, 0): 1, (1, 1): 1}

    def test_hirzebruch(self, hirzebruch_111):
        data = spectral_data(hirzebruch_111)
        classes = {tuple(c.normal): (c.length_sum, c.edge_count) for c in data.classes}
        assert classes == {(1, 0): (3, 2), (0, 1): (1, 1), (1, 1): (1, 1)}
        assert data.area == Fraction(3, 2)

    @given(seed=st.integers(0, 10**6), d=st.integers(3, 8), dx=rational, dy=rational)
    @settings(max_examples=40, deadline=None)
    def test_translation_invariant(self, seed, d, dx, dy):
        p = random_delzant(d, seed, 4)
        assert spectral_data(p.translate(Vec2(dx, dy))).matches(spectral_data(p), with_counts=True)


class TestFixedPointStrata:
    def test_zero_direction(self, unit_square):
        assert fixed_point_strata(unit_square, Vec2(0, 0)) == (
            ("polygon", None, 0),
        )

    def test_facet_normal_direction(self, unit_square):
        strata = fixed_point_strata(unit_square, Vec2(1, 0))
        edges = [s for s in strata if s.kind == "edge"]
        vertices = [s for s in strata if s.kind == "vertex"]
        assert {s.index for s in edges} == {1, 3}  # right and left edge
        assert all(s.codimension == 1 for s in edges)
        assert len(vertices) == 4 and all(s.codimension == 2 for s in vertices)

    def test_generic_direction(self, unit_square):
        strata = fixed_point_strata(unit_square, Vec2(1, 2))
        assert all(s.kind == "vertex" for s in strata)
        assert len(strata) == 4

    @given(seed=st.integers(0, 10**6), a=st.integers(-5, 5), b=st.integers(-5, 5))
    @settings(max_examples=40, deadline=None)
    def test_vertices_always_fixed(self, seed, a, b):
        if a == 0 and b == 0:
            return
        p = random_delzant(5, seed, 4)
        strata = fixed_point_strata(p, Vec2(a, b))
        assert sum(1 for s in strata if s.kind == "vertex") == p.edge_count


class TestDonnellyLeadingTerm:
    def test_zero_direction_volume_term(self, unit_square):
        (term,) = donnelly_leading_term(unit_square, Vec2(0, 0))
        assert term.codimension == 0
        assert term.t_exponent == -2
        assert term.two_pi_exponent == 2
        assert term.lattice_volume == 1
        value = evaluate_leading_coefficient(term, 0.7)
        assert value == pytest.approx((2 * math.pi) ** 2, rel=1e-12)

    def test_normal_direction_edge_terms(self, unit_square):
        terms = donnelly_leading_term(unit_square, Vec2(1, 0))
        edge_terms = [t for t in terms if t.codimension == 1]
        vertex_terms = [t for t in terms if t.codimension == 2]
        assert len(edge_terms) == 2 and len(vertex_terms) == 4
        for t in edge_terms:
            assert t.weights == (1,)
            assert t.t_exponent == -1
            assert t.lattice_volume == 1

    def test_rejects_non_primitive(self, unit_square):
        with pytest.raises(ValueError):
            donnelly_leading_term(unit_square, Vec2(2, 0))

    def test_evaluation_at_pi(self, unit_square):
        term = next(
            t for t in donnelly_leading_term(unit_square, Vec2(1, 0)) if t.codimension == 1
        )
        # 2 - 2cos(pi) = 4, so the coefficient is 2*pi/4.
        assert evaluate_leading_coefficient(term, math.pi) == pytest.approx(
            2 * math.pi / 4, rel=1e-12
        )
        assert evaluate_leading_coefficient(term, math.pi / 2) == pytest.approx(
            math.pi, rel=1e-12
        )

    def test_pole_raises(self, unit_square):
        term = next(
            t for t in donnelly_leading_term(unit_square, Vec2(1, 0)) if t.codimension == 1
        )
        with pytest.raises(PoleError):
            evaluate_leading_coefficient(term, 0.0)
        with pytest.raises(PoleError):
            evaluate_leading_coefficient(term, 1e-10)

    @given(seed=st.integers(0, 10**6), s=st.floats(0.3, 2.8), factor=st.integers(2, 5))
    @settings(max_examples=40, deadline=None)
    def test_weight_scaling_identity(self, seed, s, factor):
        p = random_delzant(5, seed, 4)
        terms = [t for t in donnelly_leading_term(p, Vec2(1, 2)) if t.codimension == 2]
        for term in terms:
            scaled = term._replace(weights=tuple(w * factor for w in term.weights))
            try:
                lhs = evaluate_leading_coefficient(term, factor * s)
                rhs = evaluate_leading_coefficient(scaled, s)
            except PoleError:
                continue
            assert lhs == pytest.approx(rhs, rel=1e-9)

    @given(seed=st.integers(0, 10**6), d=st.integers(3, 8))
    @settings(max_examples=30, deadline=None)
    def test_edge_volume_factor_matches_euclidean_length(self, seed, d):
        p = random_delzant(d, seed, 4)
        for i, edge in enumerate(p.edges):
            theta = edge.normal
            term = next(
                t
                for t in donnelly_leading_term(p, theta)
                if t.codimension == 1 and t.stratum.index == i
            )
            assert term.lattice_volume == edge.lattice_length
            start = p.vertices[i]
            end = p.vertices[(i + 1) % d]
            euclidean = math.dist(
                (float(start.x), float(start.y)), (float(end.x), float(end.y))
            )
            symbolic = float(term.lattice_volume) * term.direction.norm_float()
            assert symbolic == pytest.approx(euclidean, rel=1e-12)


class TestEulerCharacteristic:
    def test_values(self):
        assert euler_characteristic(3) == 1
        assert euler_characteristic(4) == 0
        assert euler_characteristic(7) == -3

    def test_inverse(self):
        assert vertex_count(1) == 3
        assert vertex_count(-3) == 7

    def test_domain(self):
        with pytest.raises(ValueError):
            euler_characteristic(2)
        with pytest.raises(ValueError):
            vertex_count(2)

    @given(d=st.integers(3, 40))
    @settings(max_examples=30, deadline=None)
    def test_round_trip(self, d):
        assert vertex_count(euler_characteristic(d)) == d


class TestBundleFacetData:
    def test_unit_triangle(self, unit_triangle):
        system = bundle_facet_data(unit_triangle)
        assert system.dim == 2
        entries = {e.normal: (e.offset, e.volume) for e in system.entries}
        assert entries == {(0, -1): (0, 1), (-1, 0): (0, 1), (1, 1): (1, 1)}

    def test_hirzebruch(self, hirzebruch_111):
        entries = {e.normal: (e.offset, e.volume) for e in bundle_facet_data(hirzebruch_111).entries}
        assert entries == {(0, -1): (0, 1), (1, 0): (1, 1), (1, 1): (2, 1), (-1, 0): (0, 2)}

    def test_cube(self, unit_cube):
        system = bundle_facet_data(unit_cube)
        assert system.dim == 3
        assert len(system.entries) == 6
        assert all(e.volume == 1 for e in system.entries)
        assert {e.offset for e in system.entries} == {0, 1}

    def test_offsets_are_support_values(self, hirzebruch_111):
        for entry in bundle_facet_data(hirzebruch_111).entries:
            normal = Vec2(*entry.normal)
            assert entry.offset == max(Fraction(v.dot(normal)) for v in hirzebruch_111.vertices)

    def test_halfspace_description_is_exact(self, three_pair_hexagon):
        system = bundle_facet_data(three_pair_hexagon)
        for v in three_pair_hexagon.vertices:
            assert all(v.dot(Vec2(*e.normal)) <= e.offset for e in system.entries)

    def test_integrality_flag(self, projective_triangle):
        bundle_facet_data(projective_triangle)  # rational vertices accepted by default
        with pytest.raises(ValueError):
            bundle_facet_data(projective_triangle, require_integral=True)
