import random
from fractions import Fraction

import pytest

from htlab.groebner import (
    GroebnerBasis,
    Ideal,
    InfiniteQuotientError,
    SymbolicCoefficientError,
    buchberger,
    ideal,
    ideal_equal,
    ideal_member,
    normal_form,
    standard_monomials,
)
from htlab.linalg import rank
from htlab.polycore import Polynomial, Ring, parse_polynomial


def make_ideal(gen_texts, variables=("x", "y"), parameters=()):
    ring = Ring(tuple(variables), tuple(parameters))
    gens = tuple(parse_polynomial(t, variables, parameters) for t in gen_texts)
    return Ideal(ring, gens)


class TestBuchberger:
    def test_principal(self):
        gb = buchberger(make_ideal(["x"], variables=("x",)))
        assert [str(g) for g in gb] == ["x"]

    def test_cusp_like_quotient_has_dim_5(self):
        gb = buchberger(make_ideal(["x*y", "y^2 - x^3"]))
        assert len(standard_monomials(gb)) == 5

    def test_two_variable_family_dim_10(self):
        gb = buchberger(make_ideal(["y^2 - x^2*y - x^4", "x^3*y"]))
        assert len(standard_monomials(gb)) == 10

    def test_idempotent(self):
        gb = buchberger(make_ideal(["y^2 - x*y - x^3", "x^2*y"]))
        again = buchberger(Ideal(gb.ring, gb.elements))
        assert gb == again

    def test_reduced_property(self):
        gb = buchberger(make_ideal(["y^2 - x*y - x^3", "x^2*y"]))
        lms = gb.leading_monomials()
        for i, g in enumerate(gb):
            _, lc = g.leading_term()
            assert lc == 1
            for m in g.terms:
                for j, lm in enumerate(lms):
                    if i != j:
                        assert not all(b <= a for a, b in zip(m, lm))
                    elif m != g.leading_monomial():
                        assert not all(b <= a for a, b in zip(m, lm))

    def test_symbolic_leading_coefficient_refused(self):
        # leading monomial x^4 would carry coefficient -c
        with pytest.raises(SymbolicCoefficientError):
            buchberger(make_ideal(["y^2 - x^2*y - c*x^4", "x^3*y"], parameters=("c",)))

    def test_symbolic_trailing_coefficients_allowed(self):
        gb = buchberger(
            make_ideal(["y^2 - c*x^2", "x^3", "x*y"], parameters=("c",))
        )
        assert len(standard_monomials(gb)) == 4


class TestNormalForm:
    def test_generator_reduces_to_zero(self):
        gb = buchberger(make_ideal(["x*y", "y^2 - x^3"]))
        assert normal_form(parse_polynomial("x*y", ("x", "y")), gb).is_zero()

    def test_hand_reduction_y_cubed(self):
        # y^3 = y*y^2 == x^3*y == 0 in K[x,y]/(xy, y^2-x^3)
        gb = buchberger(make_ideal(["x*y", "y^2 - x^3"]))
        assert normal_form(parse_polynomial("y^3", ("x", "y")), gb).is_zero()

    def test_displayed_product_identity(self):
        # xy^2 and x^2*y + x^4 agree modulo (y^2 - xy - x^3, x^2*y)
        gb = buchberger(make_ideal(["y^2 - x*y - x^3", "x^2*y"]))
        lhs = normal_form(parse_polynomial("x*y^2", ("x", "y")), gb)
        rhs = normal_form(parse_polynomial("x^2*y + x^4", ("x", "y")), gb)
        assert lhs == rhs
        assert not lhs.is_zero()

    def test_no_term_divisible(self):
        gb = buchberger(make_ideal(["y^2 - x*y - x^3", "x^2*y"]))
        rng = random.Random(3)
        ring = gb.ring
        for _ in range(20):
            p = Polynomial(
                ring,
                {
                    (rng.randint(0, 5), rng.randint(0, 4)): Fraction(rng.randint(-4, 4))
                    for _ in range(rng.randint(1, 6))
                },
            )
            nf = normal_form(p, gb)
            for m in nf.terms:
                assert not any(
                    all(b <= a for a, b in zip(m, lm)) for lm in gb.leading_monomials()
                )
            # p - nf lies in the ideal
            assert normal_form(p - nf, gb).is_zero()

    def test_membership_on_random_combinations(self):
        I = make_ideal(["y^2 - x*y - x^3", "x^2*y"])
        gb = buchberger(I)
        rng = random.Random(17)
        ring = I.ring
        for _ in range(15):
            combo = Polynomial.zero(ring)
            for g in I.generators:
                m = (rng.randint(0, 2), rng.randint(0, 2))
                combo = combo + g.mul_monomial(m, Fraction(rng.randint(-3, 3)))
            assert ideal_member(combo, gb)

    def test_linear_over_coefficients(self):
        gb = buchberger(make_ideal(["x*y", "y^2 - x^3"]))
        ring = gb.ring
        a = parse_polynomial("x^2 + y", ("x", "y"))
        b = parse_polynomial("y^2 + x*y + 1", ("x", "y"))
        assert normal_form(a + 3 * b, gb) == normal_form(a, gb) + 3 * normal_form(b, gb)


class TestStandardMonomials:
    def test_single_variable(self):
        gb = buchberger(make_ideal(["x^4"], variables=("x",)))
        assert standard_monomials(gb) == [(0,), (1,), (2,), (3,)]

    def test_point(self):
        gb = buchberger(make_ideal(["x", "y"]))
        assert standard_monomials(gb) == [(0, 0)]

    def test_infinite_quotient_detected(self):
        gb = buchberger(make_ideal(["x*y"]))
        with pytest.raises(InfiniteQuotientError):
            standard_monomials(gb)

    def test_count_matches_bruteforce_rank(self):
        # dimension check: #standard monomials = #monomials(<=N) - rank of the
        # degree-truncated ideal span, using standard representations
        for gens in (["x*y", "y^2 - x^3"], ["y^2 - x*y - x^3", "x^2*y"], ["x^3", "y^2"]):
            I = make_ideal(gens)
            gb = buchberger(I)
            std = standard_monomials(gb)
            N = 2 + max(sum(m) for m in std) + max(g.degree() for g in gb)
            monos = [(i, j) for i in range(N + 1) for j in range(N + 1) if i + j <= N]
            index = {m: k for k, m in enumerate(monos)}
            rows = []
            for g in gb:
                d = g.degree()
                for m in monos:
                    if sum(m) + d > N:
                        continue
                    prod = g.mul_monomial(m)
                    row = [Fraction(0)] * len(monos)
                    for mm, c in prod.terms.items():
                        row[index[mm]] = c
                    rows.append(row)
            assert len(std) == len(monos) - rank(rows)


class TestIdealEqual:
    def test_displayed_simplification(self):
        # (y^2 - x^2 y - x^3, x^2 y) = (y^2 - x^3, x^2 y)
        assert ideal_equal(
            make_ideal(["y^2 - x^2*y - x^3", "x^2*y"]),
            make_ideal(["y^2 - x^3", "x^2*y"]),
        )

    def test_strict_inclusion_is_not_equality(self):
        assert not ideal_equal(
            make_ideal(["x"], variables=("x",)), make_ideal(["x^2"], variables=("x",))
        )

    def test_linear_change_of_variables(self):
        vars3 = ("x", "y", "z")
        src = make_ideal(["x*y", "x*z", "y*z", "y^3 - x^3", "z^2 - x^3"], vars3)
        images = {
            "x": parse_polynomial("x + y", vars3),
            "y": parse_polynomial("x - y", vars3),
            "z": parse_polynomial("2*z", vars3),
        }
        mapped = Ideal(src.ring, tuple(g.substitute_vars(images) for g in src.generators))
        target = make_ideal(["x^2*y", "y^2 - x^2", "x*z", "y*z", "z^2 - x^3"], vars3)
        assert ideal_equal(mapped, target)
