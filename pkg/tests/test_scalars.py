"""Scalar layer: Gaussian rationals and polynomials/fractions in h."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weylmin.scalars import (
    GR_I,
    GR_ONE,
    GR_ZERO,
    GaussRational,
    HbarPoly,
    HbarRat,
    hp_exact_div,
    hp_gcd,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)
gauss = st.builds(GaussRational, rationals, rationals)
gauss_nonzero = gauss.filter(lambda g: not g.is_zero())


class TestGaussRational:
    def test_basics(self):
        a = GaussRational(Fraction(1, 2), Fraction(-3, 4))
        assert a.re == Fraction(1, 2) and a.im == Fraction(-3, 4)
        assert complex(a) == 0.5 - 0.75j
        assert str(GR_I) == "1*i"
        assert str(a) == "(1/2 - 3/4*i)"
        assert GaussRational(2) + GaussRational(0, 3) == GaussRational(2, 3)

    @given(gauss, gauss, gauss)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + GR_ZERO == a
        assert a * GR_ONE == a
        assert a - a == GR_ZERO

    @given(gauss_nonzero)
    def test_field_inverse(self, a):
        assert a * a.inverse() == GR_ONE
        assert a**-1 == a.inverse()

    @given(gauss, gauss)
    def test_conjugation(self, a, b):
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert a.conjugate().conjugate() == a
        norm = a * a.conjugate()
        assert norm.im == 0 and norm.re >= 0

    def test_i_squares_to_minus_one(self):
        assert GR_I * GR_I == GaussRational(-1)

    def test_coerce(self):
        assert GaussRational.coerce(Fraction(2, 3)) == GaussRational(Fraction(2, 3))
        assert GaussRational.coerce(5) == GaussRational(5)
        with pytest.raises(TypeError):
            GaussRational.coerce(1.5)

    def test_foreign_operand_is_rejected(self):
        assert GaussRational(1).__add__("x") is NotImplemented


hbar_polys = st.builds(
    lambda items: HbarPoly(items),
    st.lists(st.tuples(st.integers(0, 4), gauss), max_size=4),
)


class TestHbarPoly:
    def test_canonical_form(self):
        p = HbarPoly([(2, GaussRational(1)), (0, GaussRational(3)), (2, GaussRational(-1))])
        assert p == HbarPoly({0: GaussRational(3)})
        assert p.degree() == 0
        assert HbarPoly().is_zero()

    @given(hbar_polys, hbar_polys, hbar_polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)

    @given(hbar_polys, hbar_polys)
    def test_evaluation_is_a_homomorphism(self, a, b):
        x = 0.73
        assert abs((a * b).evaluate(x) - a.evaluate(x) * b.evaluate(x)) < 1e-9
        assert abs((a + b).evaluate(x) - (a.evaluate(x) + b.evaluate(x))) < 1e-9

    def test_shift(self):
        p = HbarPoly({1: GaussRational(2), 3: GaussRational(1)})
        assert p.shift(2) == HbarPoly({3: GaussRational(2), 5: GaussRational(1)})
        assert p.shift(-1) == HbarPoly({0: GaussRational(2), 2: GaussRational(1)})
        with pytest.raises(ValueError):
            HbarPoly({0: GaussRational(1)}).shift(-1)

    @given(hbar_polys, hbar_polys.filter(lambda p: not p.is_zero()))
    def test_divmod(self, a, b):
        q, r = a.divmod_poly(b)
        assert q * b + r == a
        assert r.is_zero() or r.degree() < b.degree()

    @given(hbar_polys.filter(lambda p: not p.is_zero()),
           hbar_polys.filter(lambda p: not p.is_zero()))
    def test_gcd_divides_both(self, a, b):
        g = hp_gcd(a, b)
        for p in (a, b):
            q = hp_exact_div(p, g)
            assert q * g == p

    def test_conjugate(self):
        p = HbarPoly({1: GaussRational(0, 2)})
        assert p.conjugate() == HbarPoly({1: GaussRational(0, -2)})


class TestHbarRat:
    def test_reduction(self):
        h = HbarPoly({1: GaussRational(1)})
        r = HbarRat(h * h, h)
        assert r == HbarRat(h)
        assert r.is_polynomial()

    def test_monic_denominator(self):
        two_h = HbarPoly({1: GaussRational(2)})
        r = HbarRat(HbarPoly({0: GaussRational(1)}), two_h)
        assert r.den.leading() == GR_ONE

    def test_inverse(self):
        h = HbarPoly({1: GaussRational(1)})
        r = HbarRat(HbarPoly({0: GaussRational(3)}), h)
        assert r * r.inverse() == HbarRat(HbarPoly({0: GaussRational(1)}))

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            HbarRat(HbarPoly({0: GaussRational(1)}), HbarPoly())
