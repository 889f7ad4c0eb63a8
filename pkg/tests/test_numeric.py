import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramloci.errors import (
    CannotDetermineValuationError,
    NotASquareError,
    PrecisionExhaustedError,
)
from ramloci.numeric import (
    ParamPoly,
    Series,
    UniPoly,
    bareiss_det,
    cofactor_det,
    poly_eval,
    poly_on_series,
    rat_normalize,
    rat_sqrt,
    series_invert,
    series_sqrt,
)

G = ParamPoly.g()
I = ParamPoly.i()

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=20
)


class TestRational:
    def test_normalize_reduces(self):
        assert rat_normalize(2, -4) == Fraction(-1, 2)
        assert str(rat_normalize(2, -4)) == "-1/2"

    def test_canonical_zero(self):
        z = rat_normalize(0, 7)
        assert z.numerator == 0 and z.denominator == 1

    def test_integer_case(self):
        q = rat_normalize(6, 3)
        assert q.numerator == 2 and q.denominator == 1

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            rat_normalize(1, 0)

    @given(rationals)
    def test_normalize_idempotent(self, q):
        assert rat_normalize(q.numerator, q.denominator) == q

    def test_rat_sqrt(self):
        assert rat_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rat_sqrt(Fraction(2)) is None
        assert rat_sqrt(Fraction(-1)) is None
        assert rat_sqrt(Fraction(0)) == 0


class TestParamPoly:
    def test_eval_weight_formula(self):
        # g(g+i)^2 at (2, 1)
        p = G * (G + I) ** 2
        assert poly_eval(p, 2, 1) == 18

    def test_eval_cubic_root(self):
        p = G**3 - G
        assert poly_eval(p, 1, 0) == 0

    def test_eval_moving_count_vanishes(self):
        p = G * (G - 1) * ((G + I + 1) ** 2 * (I + 1) ** 2 - (G + 1) ** 2)
        assert poly_eval(p, 2, 0) == 0

    def test_equality_is_term_map_equality(self):
        assert (G + I) * (G - I) == G**2 - I**2
        assert G * I != I

    def test_subs_i(self):
        p = (G + I) ** 2
        assert p.subs_i(0) == G**2
        assert p.subs_i(2) == G**2 + 4 * G + 4

    def test_degrees(self):
        assert (G**2 * I + I**3).degrees() == (2, 3)
        assert ParamPoly().degrees() == (0, 0)

    @given(st.integers(-5, 5), st.integers(-5, 5))
    def test_sum_of_evaluations(self, g, i):
        p = 2 * G**2 - I + 3
        q = G * I - Fraction(1, 2)
        assert poly_eval(p + q, g, i) == poly_eval(p, g, i) + poly_eval(q, g, i)
        assert poly_eval(p * q, g, i) == poly_eval(p, g, i) * poly_eval(q, g, i)


class TestUniPoly:
    def test_divmod_roundtrip(self):
        x = UniPoly.x()
        p = x**4 - 3 * x + 1
        d = x**2 + 1
        q, r = divmod(p, d)
        assert q * d + r == p
        assert r.degree < d.degree

    def test_exact_div_raises_on_remainder(self):
        x = UniPoly.x()
        with pytest.raises(ValueError):
            (x**2 + 1).exact_div(x + 1)

    def test_squarefree_part(self):
        x = UniPoly.x()
        p = (x - 1) ** 3 * (x + 2)
        assert p.squarefree_part() == ((x - 1) * (x + 2)).monic()

    def test_shift(self):
        x = UniPoly.x()
        p = x**3 - x
        assert p.shift(2) == (x + 2) ** 3 - (x + 2)

    def test_rational_roots(self):
        x = UniPoly.x()
        p = x**5 - 10 * x**4 + 35 * x**3 - 50 * x**2 + 24 * x
        assert p.rational_roots() == [(Fraction(k), 1) for k in range(5)]

    def test_rational_roots_with_fraction(self):
        x = UniPoly.x()
        p = (x - Fraction(1, 2)) ** 2 * (x + 3)
        assert p.rational_roots() == [(Fraction(-3), 1), (Fraction(1, 2), 2)]

    def test_root_multiplicity(self):
        x = UniPoly.x()
        p = (x - 1) ** 2 * (x + 1)
        assert p.root_multiplicity(1) == 2
        assert p.root_multiplicity(5) == 0

    @given(st.lists(rationals, max_size=6), st.lists(rationals, max_size=6))
    def test_mul_matches_evaluation(self, a, b):
        p, q = UniPoly(a), UniPoly(b)
        at = Fraction(3, 7)
        assert (p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at)


class TestSeries:
    def test_invert_geometric(self):
        s = Series(0, [1, -1], exact=True)  # 1 - t
        inv = series_invert(s, prec=5)
        assert [inv.coefficient(k) for k in range(5)] == [1, 1, 1, 1, 1]

    def test_invert_monomial(self):
        s = Series.monomial(2, 1)
        inv = series_invert(s)
        assert inv.lead == -2 and inv.exact

    def test_invert_two_plus_t(self):
        s = Series(0, [2, 1], exact=True)
        inv = series_invert(s, prec=3)
        assert [inv.coefficient(k) for k in range(3)] == [
            Fraction(1, 2),
            Fraction(-1, 4),
            Fraction(1, 8),
        ]
        # multiply back: must be 1 within the justified window
        prod = inv * Series(0, [2, 1, 0], exact=False)
        assert prod.coefficient(0) == 1
        assert prod.coefficient(1) == 0
        assert prod.coefficient(2) == 0

    def test_invert_zero_window_errors(self):
        with pytest.raises(CannotDetermineValuationError):
            series_invert(Series(3, ()))

    def test_sqrt_one_plus_t(self):
        s = Series(0, [1, 1], exact=True)
        r = series_sqrt(s, prec=4)
        assert r.coefficient(0) == 1
        assert r.coefficient(1) == Fraction(1, 2)
        assert r.coefficient(2) == Fraction(-1, 8)
        assert r.coefficient(3) == Fraction(1, 16)

    def test_sqrt_identity_and_monomial(self):
        assert series_sqrt(Series.constant(1)) == Series.constant(1)
        r = series_sqrt(Series.monomial(2, 1))
        assert r == Series.monomial(1, 1)

    def test_sqrt_odd_valuation(self):
        with pytest.raises(NotASquareError):
            series_sqrt(Series.monomial(1, 1))

    def test_sqrt_nonsquare_lead(self):
        with pytest.raises(NotASquareError):
            series_sqrt(Series(0, [2, 1], exact=True), prec=3)

    def test_sqrt_square_lead_scales(self):
        r = series_sqrt(Series(0, [Fraction(9, 4), 1], exact=True), prec=3)
        assert r.coefficient(0) == Fraction(3, 2)

    def test_precision_exhaustion_is_an_error(self):
        s = Series(0, [1, 2, 3])
        assert s.precision == 3
        with pytest.raises(PrecisionExhaustedError):
            s.coefficient(3)

    def test_add_tracks_min_window(self):
        a = Series(0, [1, 1, 1])  # known below t^3
        b = Series(0, [1, 1], exact=False)  # known below t^2
        c = a + b
        assert c.known_up_to == 2

    def test_cancellation_narrows_window(self):
        a = Series(0, [1, 5, 7])
        b = Series(0, [1, 4])
        c = a - b
        assert c.lead == 1 and c.coefficient(1) == 1
        with pytest.raises(PrecisionExhaustedError):
            c.coefficient(2)

    def test_zero_within_window(self):
        a = Series(0, [1, 5])
        d = a - a
        assert not d.coeffs and d.known_up_to == 2

    @given(
        st.lists(rationals, min_size=1, max_size=8),
        st.integers(-3, 3),
    )
    @settings(deadline=None, max_examples=60)
    def test_invert_roundtrip(self, coeffs, lead):
        s = Series(lead, coeffs)
        if not s.coeffs:
            return
        inv = series_invert(s)
        prod = inv * s
        for e in range(prod.lead, int(prod.known_up_to)):
            assert prod.coefficient(e) == (1 if e == 0 else 0)

    @given(st.lists(rationals, min_size=1, max_size=8), st.integers(0, 2))
    @settings(deadline=None, max_examples=60)
    def test_sqrt_roundtrip(self, coeffs, half_lead):
        s = Series(2 * half_lead, [Fraction(1)] + coeffs)
        r = series_sqrt(s)
        sq = r * r
        for e in range(sq.lead, int(sq.known_up_to)):
            assert sq.coefficient(e) == s.coefficient(e)

    def test_poly_on_series(self):
        x = UniPoly.x()
        p = x**2 - 2
        s = Series(1, [1, 1], exact=True)  # t + t^2
        out = poly_on_series(p, s)
        # (t + t^2)^2 - 2
        assert out.coefficient(0) == -2
        assert out.coefficient(2) == 1
        assert out.coefficient(3) == 2
        assert out.coefficient(4) == 1


def _random_matrix(rng, n):
    return [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
        for _ in range(n)
    ]


class TestBareiss:
    def test_2x2(self):
        assert bareiss_det([[1, 2], [3, 4]]) == -2

    def test_identity_5(self):
        m = [[Fraction(int(r == c)) for c in range(5)] for r in range(5)]
        assert bareiss_det(m) == 1

    def test_vandermonde(self):
        pts = [1, 2, 3]
        m = [[Fraction(p) ** k for k in range(3)] for p in pts]
        expected = Fraction(1)
        for a in range(3):
            for b in range(a):
                expected *= pts[a] - pts[b]
        assert bareiss_det(m) == expected == 2

    def test_singular(self):
        assert bareiss_det([[1, 2], [2, 4]]) == 0

    def test_integer_matrix_stays_integral(self):
        m = [[2, 4, 1], [6, 3, 9], [1, 1, 1]]
        det = bareiss_det([[Fraction(c) for c in row] for row in m])
        assert det.denominator == 1

    def test_against_cofactor_all_sizes(self):
        rng = random.Random(7)
        for n in (1, 2, 3, 4):
            for _ in range(25):
                m = _random_matrix(rng, n)
                assert bareiss_det(m) == cofactor_det(m)


def test_kernel_backends_agree():
    from ramloci._kernels import _pykernels, available_backends

    rng = random.Random(3)
    a = [rng.randint(-10**6, 10**6) for _ in range(40)]
    b = [rng.randint(-10**6, 10**6) for _ in range(33)]
    ref = [sum(a[i] * b[k - i] for i in range(len(a)) if 0 <= k - i < len(b)) for k in range(50)]
    assert _pykernels.convolve(a, b, 50) == ref
    if "cython" in available_backends():
        from ramloci._kernels import _cykernels

        assert _cykernels.convolve(a, b, 50) == ref
    assert _pykernels.convolve([], b, 5) == [0] * 5
