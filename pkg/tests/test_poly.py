from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quinticpoints.exact import GAUSSIAN_I, GaussianRational
from quinticpoints.poly import (
    FIELD_Q,
    FIELD_QI,
    DivisionByZeroPoly,
    FieldMismatch,
    MultiPoly,
    NotQuadratic,
    PoleAtPoint,
    RationalFunction,
    as_rational_function,
    discriminant_quadratic,
    is_identically_zero,
)


def small_polys(num_vars=3, degree=4):
    names = "xyzvw"[:num_vars]
    coeff = st.integers(-9, 9)
    exps = st.tuples(*[st.integers(0, degree) for _ in range(num_vars)])
    return st.dictionaries(exps, coeff, max_size=5).map(
        lambda terms: MultiPoly(FIELD_Q, tuple(names), dict(terms))
    )


class TestRingOps:
    def test_difference_of_squares(self):
        x, y = MultiPoly.variables("x y")
        assert (x + y) * (x - y) == x * x - y * y

    def test_binomial_coefficient(self):
        x, y = MultiPoly.variables("x y")
        p = (y - x) ** 5
        assert p.terms[(2, 3)] == 10

    def test_zeroth_power(self):
        x = MultiPoly.variable("x")
        assert (3 * x**2 - x) ** 0 == 1

    def test_field_mismatch(self):
        x = MultiPoly.variable("x", FIELD_Q)
        y = MultiPoly.variable("y", FIELD_QI)
        with pytest.raises(FieldMismatch):
            x + y

    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert p * (q + r) == p * q + p * r
        assert (p * q) * r == p * (q * r)
        assert p + q == q + p
        assert p * q == q * p

    @given(small_polys())
    @settings(max_examples=60, deadline=None)
    def test_canonical_equality_different_orders(self, p):
        x = MultiPoly.variable("x")
        left = (p + x) * (p - x)
        right = p * p - x * x
        assert left == right
        assert hash(left) == hash(right)


class TestSubstituteEval:
    def test_identity_binding(self):
        x = MultiPoly.variable("x")
        p = x**3 - 2 * x
        assert p.substitute({"x": x}) == as_rational_function(p)

    def test_inverse_binding(self):
        X, V = MultiPoly.variables("X V")
        rf = (X * X).substitute({"X": RationalFunction(MultiPoly.constant(1), V)})
        assert rf == RationalFunction(MultiPoly.constant(1), V * V)

    def test_zero_denominator_binding(self):
        x = MultiPoly.variable("x")
        with pytest.raises(DivisionByZeroPoly):
            x.substitute({"x": RationalFunction(x, MultiPoly.zero())})

    def test_eval_displayed_g(self):
        # direct expansion of 2b+3ay+5x^2y-5xy^2+5y^3-5y^2z+5yz^2 at
        # (x,y,z)=(0,1,-1), a=-1, b=0 gives -3+5+5+5 = 12
        x, y, z, a, b = MultiPoly.variables("x y z a b")
        G = 2*b + 3*a*y + 5*x**2*y - 5*x*y**2 + 5*y**3 - 5*y**2*z + 5*y*z**2
        assert G.eval({"x": 0, "y": 1, "z": -1, "a": -1, "b": 0}) == 12

    def test_eval_zero_poly(self):
        assert MultiPoly.zero().eval({}) == 0

    def test_pole(self):
        u, y = (MultiPoly.variable(n, FIELD_QI) for n in ("u", "y"))
        i5 = MultiPoly.constant(GaussianRational(0, 5), FIELD_QI)
        rf = RationalFunction(MultiPoly.constant(1, FIELD_QI), u - i5 * y * y)
        with pytest.raises(PoleAtPoint):
            rf.eval({"u": GaussianRational(0, 5), "y": 1})

    @given(small_polys(num_vars=2), st.integers(-5, 5), st.integers(-5, 5))
    @settings(max_examples=60, deadline=None)
    def test_substitute_then_eval(self, p, a, b):
        # composing with polynomial bindings then evaluating agrees with
        # evaluating the bindings first
        x, y = MultiPoly.variables("x y")
        bind = {"x": x + y, "y": x * y - 1}
        composed = p.substitute(bind)
        direct = p.eval({"x": a + b, "y": a * b - 1})
        assert composed.eval({"x": a, "y": b}) == direct


class TestDiscriminant:
    def test_displayed_delta(self):
        x, y, z, a, b = MultiPoly.variables("x y z a b")
        G = 2*b + 3*a*y + 5*x**2*y - 5*x*y**2 + 5*y**3 - 5*y**2*z + 5*y*z**2
        delta = -5 * y * (15 * y**3 + 20 * x * y * (x - y) + 12 * a * y + 8 * b)
        assert discriminant_quadratic(G, "z") == delta

    def test_constant_quadratic(self):
        z = MultiPoly.variable("z")
        assert discriminant_quadratic(z * z - 1, "z") == 4

    def test_parametric(self):
        z, t = MultiPoly.variables("z t")
        assert discriminant_quadratic(z * z + t * z, "z") == t * t

    def test_not_quadratic(self):
        z = MultiPoly.variable("z")
        with pytest.raises(NotQuadratic):
            discriminant_quadratic(z**3, "z")
        with pytest.raises(NotQuadratic):
            discriminant_quadratic(z, "z")

    @given(
        st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6)
    )
    @settings(max_examples=80)
    def test_matches_scalar_discriminant(self, a, b, c, x0):
        if a == 0:
            return
        z, x = MultiPoly.variables("z x")
        p = a * z * z + (b * x) * z + c
        d = discriminant_quadratic(p, "z")
        assert d.eval({"x": x0}) == (b * x0) ** 2 - 4 * a * c


class TestRationalFunction:
    def test_zero_test(self):
        x, y = MultiPoly.variables("x y")
        assert is_identically_zero(as_rational_function(x - x))
        assert not is_identically_zero(as_rational_function(x - y))

    def test_cross_multiplied_equality(self):
        x = MultiPoly.variable("x")
        one_plus = RationalFunction(x * x - 1, x - 1)
        assert one_plus == as_rational_function(x + 1)

    def test_division_by_zero_function(self):
        x = MultiPoly.variable("x")
        with pytest.raises(DivisionByZeroPoly):
            as_rational_function(x) / as_rational_function(x - x)

    def test_serialization_shape(self):
        x, y = MultiPoly.variables("x y")
        p = 3 * x**2 * y - y + 1
        assert str(p) == "3*x^2*y + -1*y + 1"
