from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quinticpoints.elliptic import (
    IDENTITY,
    CurvePoint,
    DegenerateSpecialization,
    PointNotOnCurve,
    SearchBounds,
    SingularCurve,
    WeierstrassCurve,
    add,
    conjecture2_search,
    integral_model,
    is_nontorsion,
    load_table,
    mul,
    negate,
    on_curve,
    rationals_by_height,
    search_points,
    specialization_curve,
    table_verify,
    verify_row,
)

D1_CURVE = specialization_curve(1, 0, Fraction(2, 45))
D1_POINT = CurvePoint(1, Fraction(403, 405))


class TestCurveBasics:
    def test_d1_spot_row(self):
        # both sides must equal 162409/164025 exactly
        assert D1_CURVE.a2 == Fraction(-16, 164025)
        assert D1_CURVE.a6 == Fraction(-1600, 164025)
        assert on_curve(D1_CURVE, D1_POINT)
        assert D1_POINT.y ** 2 == Fraction(162409, 164025)
        assert D1_CURVE.rhs(D1_POINT.x) == Fraction(162409, 164025)

    def test_identity_on_curve(self):
        assert on_curve(D1_CURVE, IDENTITY)

    def test_not_on_curve(self):
        c = WeierstrassCurve(0, 0, 0, 0, -1)
        assert not on_curve(c, CurvePoint(0, 0))

    def test_discriminant_never_zero_in_family(self):
        for t in (Fraction(1), Fraction(2, 45), Fraction(-3, 7)):
            assert not specialization_curve(5, 2, t).is_singular


class TestGroupLaw:
    def test_identity_element(self):
        assert add(D1_CURVE, D1_POINT, IDENTITY) == D1_POINT

    def test_inverse_element(self):
        assert add(D1_CURVE, D1_POINT, negate(D1_CURVE, D1_POINT)) == IDENTITY

    def test_closure_of_doubling(self):
        p2 = mul(D1_CURVE, 2, D1_POINT)
        assert on_curve(D1_CURVE, p2)
        assert not p2.is_identity

    def test_commutative_and_associative(self):
        p = D1_POINT
        q = mul(D1_CURVE, 2, p)
        r = mul(D1_CURVE, 3, p)
        assert add(D1_CURVE, p, q) == add(D1_CURVE, q, p)
        assert add(D1_CURVE, add(D1_CURVE, p, q), r) == add(
            D1_CURVE, p, add(D1_CURVE, q, r)
        )

    @given(st.integers(0, 8), st.integers(0, 8))
    @settings(max_examples=30, deadline=None)
    def test_mul_additive(self, m, n):
        curve = WeierstrassCurve(0, 0, 0, 0, 1)  # y^2 = x^3 + 1
        p = CurvePoint(2, 3)
        assert on_curve(curve, p)
        assert mul(curve, m + n, p) == add(curve, mul(curve, m, p), mul(curve, n, p))

    def test_singular_rejected(self):
        nodal = WeierstrassCurve(0, 0, 0, 0, 0)
        with pytest.raises(SingularCurve):
            add(nodal, CurvePoint(1, 1), CurvePoint(1, 1))

    def test_off_curve_rejected(self):
        with pytest.raises(PointNotOnCurve):
            add(D1_CURVE, CurvePoint(0, 0), D1_POINT)


class TestNontorsion:
    def test_table_point_nontorsion(self):
        assert is_nontorsion(D1_CURVE, D1_POINT)

    def test_two_torsion_detected(self):
        curve = WeierstrassCurve(0, 0, 0, 1, 0)  # y^2 = x^3 + x
        assert mul(curve, 2, CurvePoint(0, 0)).is_identity
        assert not is_nontorsion(curve, CurvePoint(0, 0))

    def test_d89_row(self):
        curve = specialization_curve(89, 0, Fraction(1))
        assert is_nontorsion(curve, CurvePoint(8381, 766104))

    def test_identity_is_torsion(self):
        assert not is_nontorsion(D1_CURVE, IDENTITY)


class TestIntegralModel:
    def test_round_trip_d1(self):
        model = integral_model(D1_CURVE)
        assert model.u == 405
        image = model.to_integral(D1_POINT)
        assert on_curve(model.curve, image)
        assert model.from_integral(image) == D1_POINT

    def test_already_integral(self):
        c = WeierstrassCurve(1, -2, 3, -4, 6)
        assert integral_model(c).u == 1

    def test_quarter_coefficient(self):
        c = WeierstrassCurve(0, 0, 0, Fraction(-1, 4), 0)
        model = integral_model(c)
        assert model.u == 2 and model.curve.a4 == -4


class TestSearch:
    def test_recovers_table_point(self):
        pts = search_points(D1_CURVE, SearchBounds(num_bound=165000, den_bound=1))
        assert D1_POINT in pts

    def test_empty_is_legal(self):
        c = WeierstrassCurve(0, 0, 0, 0, 7)
        assert search_points(c, SearchBounds(num_bound=3, den_bound=1)) == []

    def test_soundness_and_determinism(self):
        c = WeierstrassCurve(0, 0, 0, 0, 1)
        run1 = search_points(c, SearchBounds(num_bound=30, den_bound=2))
        run2 = search_points(c, SearchBounds(num_bound=30, den_bound=2))
        assert run1 == run2 and run1
        assert all(on_curve(c, p) for p in run1)


class TestSpecialization:
    def test_degenerate_t(self):
        with pytest.raises(DegenerateSpecialization):
            specialization_curve(1, 0, Fraction(0))

    def test_degenerate_cf(self):
        with pytest.raises(DegenerateSpecialization):
            specialization_curve(3, 3, Fraction(1))


class TestTable:
    def test_loads_100_rows(self):
        rows = load_table()
        assert len(rows) == 100
        assert [r.d for r in rows] == list(range(1, 101))

    def test_all_rows_verify(self):
        reports = table_verify(load_table())
        assert all(r.ok for r in reports)

    def test_corrupted_row_fails(self):
        row = load_table()[0]
        bad = type(row)(d=row.d, t=row.t, x=row.x, y=Fraction(404, 405))
        assert not verify_row(bad).on_curve

    def test_empty_report(self):
        assert table_verify([]) == []


class TestConjectureSearch:
    def test_d89_finds_paper_row(self):
        # t = 1 is the first enumerated rational and carries the paper's point
        found = conjecture2_search(
            89, 0, rationals_by_height(3), SearchBounds(num_bound=20000, den_bound=1)
        )
        assert found is not None
        t, point = found
        assert t == 1 and point == CurvePoint(8381, 766104)

    def test_exhausted(self):
        found = conjecture2_search(
            1, 0, rationals_by_height(1), SearchBounds(num_bound=10, den_bound=1)
        )
        assert found is None

    def test_enumeration_order(self):
        # height ascending, then denominator, then numerator
        seq = list(rationals_by_height(3))
        assert seq == [
            Fraction(1),
            Fraction(2), Fraction(1, 2),
            Fraction(3), Fraction(3, 2), Fraction(1, 3), Fraction(2, 3),
        ]
