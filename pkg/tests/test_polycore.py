import random
from fractions import Fraction

import pytest

from htlab.polycore import (
    ParseError,
    PolyError,
    Polynomial,
    Ring,
    RingMismatchError,
    parse_polynomial,
)


def P(text, variables=("x", "y"), parameters=()):
    return parse_polynomial(text, variables, parameters)


class TestParser:
    def test_ideal_generator_shape(self):
        p = P("y^2 - x*y - x^3")
        ring = p.ring
        assert p.terms == {
            (0, 2): Fraction(1),
            (1, 1): Fraction(-1),
            (3, 0): Fraction(-1),
        }
        assert ring.variables == ("x", "y")

    def test_zero(self):
        p = P("0", variables=("x",))
        assert p.is_zero()
        assert str(p) == "0"

    def test_parameter_coefficient(self):
        p = P("y^2 - c*x^4", parameters=("c",))
        q = p.coefficient((4, 0))
        assert not q.is_constant()
        assert str(p) == "-c*x^4 + y^2"

    def test_rational_literals(self):
        p = P("1/2*x + 3", variables=("x",))
        assert p.coefficient((1,)) == Fraction(1, 2)
        assert p.coefficient((0,)) == 3

    def test_juxtaposition_and_whitespace(self):
        assert P("2x^2y") == P("2 * x^2 * y")
        assert P(" y ^ 2-x ") == P("y^2 - x")

    def test_unknown_identifier(self):
        with pytest.raises(ParseError, match="unknown identifier"):
            P("x + z")

    def test_negative_exponent(self):
        with pytest.raises(ParseError, match="negative exponent"):
            P("x^-2")

    def test_syntax_error_position(self):
        with pytest.raises(ParseError):
            P("x + * y")
        with pytest.raises(ParseError):
            P("")

    def test_roundtrip_is_identity(self):
        rng = random.Random(7)
        for _ in range(40):
            terms = {}
            for _ in range(rng.randint(1, 6)):
                m = (rng.randint(0, 3), rng.randint(0, 3))
                terms[m] = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
            p = Polynomial(Ring(("x", "y")), terms)
            assert P(str(p)) == p

    def test_roundtrip_with_params(self):
        p = P("3/2*c^2*x - c*y + x*y - 5", parameters=("c",))
        assert P(str(p), parameters=("c",)) == p


class TestArithmetic:
    def test_difference_of_squares(self):
        assert P("x + y") * P("x - y") == P("x^2 - y^2")

    def test_substitute_param(self):
        p = P("y^2 - c*x^4", parameters=("c",))
        assert p.substitute_param("c", 1) == P("y^2 - x^4", parameters=("c",))

    def test_square_of_linear_combination(self):
        # (z1*x + z2*x^2)^2 expanded by hand
        ring = Ring(("x",), ("z1", "z2"))
        p = parse_polynomial("z1*x + z2*x^2", ("x",), ("z1", "z2"))
        expect = parse_polynomial(
            "z1^2*x^2 + 2*z1*z2*x^3 + z2^2*x^4", ("x",), ("z1", "z2")
        )
        assert p * p == expect
        assert p**2 == expect

    def test_ring_axioms_randomized(self):
        rng = random.Random(2024)
        ring = Ring(("x", "y", "z"))

        def rand_poly():
            terms = {}
            for _ in range(rng.randint(0, 5)):
                m = tuple(rng.randint(0, 2) for _ in range(3))
                terms[m] = Fraction(rng.randint(-5, 5))
            return Polynomial(ring, terms)

        for _ in range(60):
            a, b, c = rand_poly(), rand_poly(), rand_poly()
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)

    def test_leading_monomial_multiplicative(self):
        rng = random.Random(5)
        ring = Ring(("x", "y"))
        for _ in range(40):
            a = Polynomial(
                ring,
                {
                    (rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(1, 4))
                    for _ in range(rng.randint(1, 4))
                },
            )
            b = Polynomial(
                ring,
                {
                    (rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(1, 4))
                    for _ in range(rng.randint(1, 4))
                },
            )
            lm = (a * b).leading_monomial()
            assert lm == tuple(
                s + t for s, t in zip(a.leading_monomial(), b.leading_monomial())
            )

    def test_mismatched_rings(self):
        with pytest.raises(RingMismatchError):
            P("x", variables=("x",)) + P("x", variables=("x", "y"))

    def test_scalar_division(self):
        assert P("x") / 2 == P("1/2*x")
        with pytest.raises(ZeroDivisionError):
            P("x") / 0


class TestSubstitution:
    def test_product_homomorphism(self):
        p = P("x*y")
        images = {"x": P("x + y"), "y": P("x - y")}
        assert p.substitute_vars(images) == P("x^2 - y^2")

    def test_respects_ring_operations(self):
        rng = random.Random(11)
        ring = Ring(("x", "y"))
        images = {"x": P("x + y^2"), "y": P("x - 2*y")}

        def rand_poly():
            return Polynomial(
                ring,
                {
                    (rng.randint(0, 2), rng.randint(0, 2)): Fraction(rng.randint(-4, 4))
                    for _ in range(rng.randint(1, 4))
                },
            )

        for _ in range(25):
            a, b = rand_poly(), rand_poly()
            sa, sb = a.substitute_vars(images), b.substitute_vars(images)
            assert (a + b).substitute_vars(images) == sa + sb
            assert (a * b).substitute_vars(images) == sa * sb

    def test_truncated_reparametrization(self):
        ring = Ring(("x",), ("a2",))
        x = Polynomial.variable(ring, "x")
        img = parse_polynomial("x + a2*x^2", ("x",), ("a2",))
        assert x.substitute_vars({"x": img}) == img

    def test_cube_under_linear_change(self):
        p = P("x^2*y")
        images = {"x": P("x + y"), "y": P("x - y")}
        assert p.substitute_vars(images) == P("x + y") ** 2 * P("x - y")


class TestPrinting:
    def test_canonical_order_decreasing(self):
        p = P("x + y^2 + 1")
        assert str(p) == "y^2 + x + 1"

    def test_unit_coefficients_suppressed(self):
        assert str(P("x - y")) == "-y + x"
        assert str(P("y^2 - x*y - x^3")) == "-x^3 + y^2 - x*y"

    def test_latex(self):
        p = P("1/2*x^2 - y", variables=("x", "y"))
        assert p.latex() == "\\frac{1}{2}x^2 - y"

    def test_latex_subscripts(self):
        ring = Ring(("z0", "z1", "z12"), significance=(0, 1, 2))
        p = Polynomial(ring, {(1, 2, 0): Fraction(1), (0, 0, 1): Fraction(-1, 3)})
        assert p.latex() == "z_0z_1^2 - \\frac{1}{3}z_{12}"

    def test_evaluate(self):
        p = P("x^2 + y")
        assert p.evaluate([Fraction(2), Fraction(3)]) == 7
