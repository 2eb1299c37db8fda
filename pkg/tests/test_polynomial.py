from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tdipoly.harness import TrialConfig, random_polynomial
from tdipoly.linalg import rank
from tdipoly.multiindex import DimensionError
from tdipoly.polynomial import (
    Inconsistent,
    ParseError,
    Polynomial,
    SingularSystem,
    coefficient,
    evaluate,
    fit_from_values,
    format_poly,
    monomial,
    monomial_value,
    parse,
    scale,
    support,
    total_degree,
)
from tdipoly.rng import SplitMix64

from conftest import points, polynomials

F = Fraction


class TestMonomial:
    def test_constant_one(self):
        one = monomial((0, 0))
        assert one == Polynomial.constant(1, 2)
        assert evaluate(one, (0, 0)) == 1

    def test_examples(self):
        assert format_poly(monomial((2, 1))) == "x1^2*x2"
        assert format_poly(monomial((0, 3))) == "x2^3"


class TestArithmetic:
    def test_cancellation(self):
        x2 = parse("x^2")
        assert (x2 + (-x2)).is_zero()

    def test_difference_of_squares(self):
        assert parse("x1+x2") * parse("x1-x2") == parse("x1^2 - x2^2")

    def test_scale(self):
        assert scale(F(1, 2), parse("2*x")) == parse("x")

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            parse("x1") + parse("x1*x2")

    @settings(max_examples=60)
    @given(st.data())
    def test_ring_laws(self, data):
        d = data.draw(st.integers(1, 3))
        p, q, r = (data.draw(polynomials(d=d)) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert (p - p).is_zero()

    @settings(max_examples=60)
    @given(st.data())
    def test_eval_is_homomorphism(self, data):
        d = data.draw(st.integers(1, 3))
        p, q = data.draw(polynomials(d=d)), data.draw(polynomials(d=d))
        x = data.draw(points(d))
        assert evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x)
        assert evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x)


class TestEvaluate:
    def test_examples(self):
        assert evaluate(parse("x1^2 - x2"), (3, F(1, 2))) == F(17, 2)
        assert evaluate(Polynomial.zero(2), (5, 7)) == 0
        assert evaluate(monomial((1, 1)), (2, 3)) == 6

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            evaluate(parse("x1*x2"), (1,))

    def test_zero_to_the_zero(self):
        assert monomial_value((0, 2), (0, 3)) == 9


class TestAccessors:
    def test_support(self):
        assert support(parse("x^2 + 2*x + 1")) == {(2,), (1,), (0,)}

    def test_coefficient(self):
        p = parse("x1*x2")
        assert coefficient(p, (1, 1)) == 1
        assert coefficient(p, (2, 0)) == 0

    def test_total_degree(self):
        assert total_degree(Polynomial.zero(1)) is None
        assert total_degree(parse("x1^2*x2 + x3")) == 3


class TestFit:
    def test_line(self):
        assert fit_from_values([(0,), (1,)], [1, 3], [(0,), (1,)]) == parse("1 + 2*x")

    def test_inconsistent(self):
        with pytest.raises(Inconsistent):
            fit_from_values([(0,), (1,)], [1, 2], [(0,)])

    def test_plane(self):
        got = fit_from_values([(0, 0), (1, 0), (0, 1)], [0, 1, 2], [(0, 0), (1, 0), (0, 1)])
        assert got == parse("x1 + 2*x2")

    def test_singular(self):
        # the points all lie on x1 = x2, so x1 and x2 cannot be separated
        with pytest.raises(SingularSystem):
            fit_from_values([(0, 0), (1, 1), (2, 2)], [0, 1, 2], [(1, 0), (0, 1)])

    def test_too_few_points(self):
        with pytest.raises(SingularSystem):
            fit_from_values([(0,)], [0], [(0,), (1,)])

    def test_duplicate_points(self):
        with pytest.raises(ValueError):
            fit_from_values([(0,), (0,)], [0, 0], [(0,)])

    @settings(max_examples=40)
    @given(polynomials(max_terms=5), st.integers(0, 2**32))
    def test_fit_inverts_eval(self, p, seed):
        S = sorted(support(p)) or [(0,) * p.d]
        rng = SplitMix64(seed)
        pts = set()
        while len(pts) < len(S) + 2:
            pts.add(tuple(rng.rational(9) for _ in range(p.d)))
        pts = sorted(pts)
        assume(rank([[monomial_value(a, x) for a in S] for x in pts]) == len(S))
        assert fit_from_values(pts, [evaluate(p, x) for x in pts], S) == p


class TestText:
    def test_canonical_example(self):
        p = Polynomial(2, {(2, 1): 1, (0, 3): F(-1, 2), (0, 0): 1})
        assert format_poly(p) == "x1^2*x2 - 1/2*x2^3 + 1"

    def test_leading_minus_and_unit_coefficients(self):
        assert format_poly(parse("-x1 - 1")) == "-x1 - 1"
        assert format_poly(parse("-1")) == "-1"
        assert format_poly(Polynomial.zero(3)) == "0"

    def test_aliases(self):
        assert parse("x*y^2 + z") == parse("x1*x2^2 + x3")

    def test_permissive_input(self):
        assert parse(" 3 * x1 ^ 2 *x1 - 2/4  + x2*x1 ") == parse("3*x1^3 + x1*x2 - 1/2")

    def test_dimension_inference_and_override(self):
        assert parse("x2").d == 2
        assert parse("5").d == 1
        assert parse("x1", 3).d == 3
        with pytest.raises(ParseError):
            parse("x4", 2)

    @pytest.mark.parametrize(
        "text, pos",
        [("x1 +", 4), ("2*", 2), ("x1 ^ ", 5), ("x0", 1), ("1/0", 2), ("x1 x2", 3), ("", 0), ("w", 0)],
    )
    def test_errors_carry_position(self, text, pos):
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.pos == pos

    def test_roundtrip_500_random(self):
        for seed in range(500):
            cfg = TrialConfig(seed, 1, 1 + seed % 3, 5, 50)
            p = random_polynomial(cfg)
            assert parse(format_poly(p), p.d) == p

    @given(polynomials(height=1000))
    def test_roundtrip_property(self, p):
        assert parse(format_poly(p), p.d) == p
