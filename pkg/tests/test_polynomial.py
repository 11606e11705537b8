from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cmfields.polynomial import (
    IntegerPolynomial,
    ParseError,
    PolynomialError,
    bareiss_determinant,
    count_real_roots,
    discriminant,
    factor_degrees_mod_p,
    interpolate,
    is_square,
    parse_polynomial,
    polynomial_sqrt,
    primes,
    resultant,
    root_bound,
)

P = IntegerPolynomial


def poly_strategy(min_deg=1, max_deg=6, bound=9):
    return st.lists(st.integers(-bound, bound), min_size=min_deg + 1, max_size=max_deg + 1).filter(
        lambda c: c[-1] != 0
    ).map(lambda c: P(tuple(c)))


class TestParsing:
    @pytest.mark.parametrize(
        "text, coeffs",
        [
            ("x^4-x+1", (1, -1, 0, 0, 1)),
            ("x^4 - x + 1", (1, -1, 0, 0, 1)),
            ("1,-1,0,0,1", (1, -1, 0, 0, 1)),
            ("-x^2 + 3*x", (0, 3, -1)),
            ("2x^3+x", (0, 1, 0, 2)),
            ("7", (7,)),
            ("1/2x^2 + 1/3", (2, 0, 3)),
        ],
    )
    def test_accepts(self, text, coeffs):
        assert parse_polynomial(text).coeffs == coeffs

    @pytest.mark.parametrize("text", ["", "x^", "2 3", "2 x", "x^2 +", "y^2+1", "1,,2", "x^-1"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_polynomial(text)

    def test_str_roundtrip(self):
        f = P((3, 0, -2, 1))
        assert parse_polynomial(str(f)) == f


class TestArithmetic:
    def test_trim_and_degree(self):
        assert P((1, 2, 0, 0)).degree == 1
        assert P((0,)).degree == -1 and P((0,)).is_zero

    def test_mul_div(self):
        a, b = P((1, 1)), P((-2, 0, 1))
        assert (a * b).exact_div(b) == a
        q, r = P((1, 0, 0, 1)).divmod_int(P((1, 1)))
        assert r.is_zero and q == P((1, -1, 1))

    def test_exact_div_failure(self):
        with pytest.raises(PolynomialError):
            P((1, 0, 1)).exact_div(P((1, 1)))

    def test_compose_shift_scale(self):
        f = P((-2, 0, 1))
        assert f.shift(1) == P((-1, 2, 1))
        assert f.compose(P((0, 2))) == P((-2, 0, 4))
        assert f.scale_roots(3) == P((-18, 0, 1))

    def test_monic_normalization(self):
        f = P((1, 0, 2))  # 2x^2 + 1
        g, a = f.monic_normalization()
        assert a == 2 and g.is_monic and g == P((2, 0, 1))

    def test_content(self):
        f = P((6, -4, 2))
        assert f.content() == 2 and f.primitive_part() == P((3, -2, 1))

    @given(poly_strategy(0, 4), poly_strategy(0, 4), st.integers(-20, 20))
    def test_evaluation_is_ring_homomorphism(self, f, g, x):
        assert (f * g)(x) == f(x) * g(x)
        assert (f + g)(x) == f(x) + g(x)


class TestResultants:
    @pytest.mark.parametrize(
        "coeffs, disc",
        [
            ((1, 0, 1), -4),
            ((1, -1, 0, 0, 1), 229),
            ((-1, -1, 0, 1), -23),
            ((1, 1, 1, 1, 1, 1, 1), -16807),
            ((1, 1, 1, 1, 1), 125),
            ((-2, 0, 0, 1), -108),
            ((1, -1, 1, -2, 1, 0, 1), -14283),
        ],
    )
    def test_discriminant_values(self, coeffs, disc):
        assert discriminant(P(coeffs)) == disc

    def test_discriminant_zero_iff_repeated(self):
        assert discriminant(P((1, 2, 1))) == 0
        assert discriminant(P((1, 0, -2, 0, 1))) == 0

    def test_discriminant_of_zero_raises(self):
        with pytest.raises(PolynomialError):
            discriminant(P((0,)))

    @given(st.lists(st.integers(-6, 6), min_size=1, max_size=4), st.lists(st.integers(-6, 6), min_size=1, max_size=4))
    def test_resultant_of_root_products(self, a, b):
        # Res(prod (x - a_i), prod (x - b_j)) = prod (a_i - b_j)
        expected = 1
        for ai in a:
            for bj in b:
                expected *= ai - bj
        assert resultant(P.from_roots(a), P.from_roots(b)) == expected

    @given(poly_strategy(1, 4, 5), poly_strategy(1, 4, 5))
    def test_resultant_antisymmetry(self, f, g):
        sign = -1 if (f.degree * g.degree) % 2 else 1
        assert resultant(f, g) == sign * resultant(g, f)

    def test_bareiss(self):
        assert bareiss_determinant([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == 0 + 2 * (3 - 2) - 0 + 1 * (1 - 3)
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1


def bisection_count(f: IntegerPolynomial) -> int:
    """Sign changes on a grid refined until stable: an oracle independent of Sturm."""
    B = root_bound(f) + 1
    prev = None
    steps = 256
    while True:
        xs = [-B + 2 * B * Fraction(i, steps) for i in range(steps + 1)]
        vals = [f(x) for x in xs]
        roots = sum(1 for v in vals if v == 0)
        changes = sum(1 for u, v in zip(vals, vals[1:]) if u * v < 0)
        count = roots + changes
        if count == prev or steps > 2**14:
            return count
        prev, steps = count, steps * 4


class TestSturm:
    @pytest.mark.parametrize(
        "coeffs, r1",
        [((1, 0, 1), 0), ((-1, -1, 0, 1), 1), ((1, -1, 0, 0, 1), 0), ((-2, 0, 1), 2), ((0, -1, 0, 1), 3)],
    )
    def test_examples(self, coeffs, r1):
        assert count_real_roots(P(coeffs)) == r1

    def test_interval(self):
        f = P((0, -1, 0, 1))  # roots -1, 0, 1
        assert count_real_roots(f, Fraction(-1, 2), 2) == 2
        assert count_real_roots(f, 0, 1) == 1  # (0, 1]

    @settings(max_examples=60, deadline=None)
    @given(poly_strategy(2, 4, 6))
    def test_against_bisection(self, f):
        assume(discriminant(f) != 0)
        assert count_real_roots(f) == bisection_count(f)


class TestExactHelpers:
    def test_interpolate(self):
        f = P((3, -1, 0, 2))
        xs = list(range(-2, 3))
        assert interpolate(xs, [f(x) for x in xs]) == f

    def test_interpolate_non_integral(self):
        with pytest.raises(PolynomialError):
            interpolate([0, 2], [0, 1])

    def test_sqrt(self):
        g = P((1, -3, 0, 1))
        assert polynomial_sqrt(g * g) == g
        with pytest.raises(PolynomialError):
            polynomial_sqrt(P((2, 0, 1)))

    def test_is_square(self):
        assert is_square(0) and is_square(49) and not is_square(-4) and not is_square(50)


class TestModular:
    def test_examples(self):
        f = P((1, 0, 1))
        assert factor_degrees_mod_p(f, 3) == (2,)
        assert factor_degrees_mod_p(f, 5) == (1, 1)

    def test_cyclotomic_splitting(self):
        # Phi_7 mod p splits into factors of degree ord_7(p)
        f = P((1,) * 7)
        for p in (2, 13, 29, 43):
            order = next(k for k in range(1, 7) if pow(p, k, 7) == 1)
            assert factor_degrees_mod_p(f, p) == (order,) * (6 // order)

    def test_primes(self):
        gen = primes()
        assert [next(gen) for _ in range(10)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
