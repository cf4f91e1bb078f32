"""Polynomial kit tests: exact division, gcd, root counting, resultants."""

from fractions import Fraction as F

import pytest

from equiarea.polynomial import (
    BivariatePoly,
    UnivariatePoly,
    count_real_roots,
    lagrange_interpolate,
    poly_gcd,
    rational_roots,
    rational_roots_with_multiplicity,
    squarefree_part,
    sylvester_resultant_y,
)


def from_roots(*roots):
    p = UnivariatePoly([1])
    for r in roots:
        p = p * UnivariatePoly([-F(r), 1])
    return p


class TestUnivariateBasics:
    def test_divmod_roundtrip(self):
        a = UnivariatePoly([1, -2, 0, 5, 3])
        b = UnivariatePoly([2, 1, 1])
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_gcd(self):
        a = from_roots(1, 2)
        b = from_roots(1, 3)
        assert poly_gcd(a, b) == from_roots(1)

    def test_squarefree(self):
        p = from_roots(1, 1, -2)
        assert squarefree_part(p) == from_roots(1, -2).primitive()

    def test_primitive(self):
        p = UnivariatePoly([F(2, 3), F(4, 3)])
        assert p.primitive() == UnivariatePoly([1, 2])


class TestRealRootCounting:
    def test_distinct_roots(self):
        assert count_real_roots(from_roots(1, 2, -3)) == 3

    def test_no_real_roots(self):
        assert count_real_roots(UnivariatePoly([1, 0, 1])) == 0

    def test_mixed(self):
        p = UnivariatePoly([1, 0, 1]) * from_roots(5)
        assert count_real_roots(p) == 1

    def test_multiplicity_collapses(self):
        assert count_real_roots(from_roots(2, 2, 2)) == 1

    def test_degree_nine(self):
        p = from_roots(*range(-4, 5))
        assert count_real_roots(p) == 9


class TestRationalRoots:
    def test_simple(self):
        p = from_roots(F(1, 2), -3, 7)
        assert rational_roots(p) == [-3, F(1, 2), 7]

    def test_irrational_filtered(self):
        p = UnivariatePoly([-2, 0, 1])  # x^2 - 2
        assert rational_roots(p) == []

    def test_large_denominator(self):
        p = UnivariatePoly([-1, 100003]) * UnivariatePoly([-2, 0, 1])
        assert rational_roots(p) == [F(1, 100003)]

    def test_zero_root(self):
        p = UnivariatePoly([0, 0, 1, 1])  # x^2 (x + 1)
        assert rational_roots(p) == [-1, 0]

    def test_multiplicities(self):
        p = from_roots(1, 1, -2)
        assert rational_roots_with_multiplicity(p) == [(-2, 1), (1, 2)]

    def test_close_roots_separated(self):
        p = from_roots(F(1, 3), F(1, 3) + F(1, 1000))
        assert rational_roots(p) == [F(1, 3), F(1, 3) + F(1, 1000)]


class TestBivariate:
    def test_product_and_substitute(self):
        x_plus_y = BivariatePoly.linear(1, 1, 0)
        sq = x_plus_y * x_plus_y
        assert sq.coeff(2, 0) == 1 and sq.coeff(1, 1) == 2 and sq.coeff(0, 2) == 1
        swapped = sq.substitute(BivariatePoly.linear(0, 1, 0), BivariatePoly.linear(1, 0, 0))
        assert swapped == sq

    def test_divide_by_linear(self):
        u = BivariatePoly.linear(1, 1, 1)
        v = BivariatePoly.linear(1, -1, 0)
        f = u * v + BivariatePoly.constant(5)
        q, r = f.divide_by_linear(1, 1, 1)
        assert q == v
        assert r == BivariatePoly.constant(5)

    def test_divide_by_vertical_form(self):
        u = BivariatePoly.linear(0, 2, -1)
        f = u * BivariatePoly.linear(3, 1, 0)
        q, r = f.divide_by_linear(0, 2, -1)
        assert q == BivariatePoly.linear(3, 1, 0)
        assert r.is_zero()

    def test_shear_fixes_y_leading_term(self):
        f = BivariatePoly({(3, 0): 1, (1, 2): 1})  # x^3 + x y^2: no y^3 term
        sheared = f.shear_x(1)
        assert sheared.coeff(0, 3) != 0
        assert sheared.total_degree() == 3

    def test_section(self):
        f = BivariatePoly({(2, 1): 3, (0, 2): 1, (1, 0): -1})
        section = f.section_at_x(2)
        assert section == UnivariatePoly([-2, 12, 1])


class TestResultant:
    def test_line_against_circle(self):
        circle = BivariatePoly({(2, 0): 1, (0, 2): 1, (0, 0): -1})
        diagonal = BivariatePoly.linear(1, -1, 0)
        res = sylvester_resultant_y(circle, diagonal)
        # The elimination of y from y = x must leave 2x^2 - 1 up to sign.
        assert res.primitive() in (
            UnivariatePoly([-1, 0, 2]),
            UnivariatePoly([1, 0, -2]),
        )
        assert count_real_roots(res) == 2

    def test_common_root_detected(self):
        f = BivariatePoly.linear(1, 1, -3) * BivariatePoly.linear(2, -1, 0)
        g = BivariatePoly.linear(1, 1, -3) * BivariatePoly.linear(1, 1, 5)
        res = sylvester_resultant_y(f, g)
        assert res.is_zero()  # the shared line kills the resultant

    def test_rejects_missing_y(self):
        f = BivariatePoly({(2, 0): 1})
        g = BivariatePoly.linear(0, 1, 0)
        with pytest.raises(ValueError):
            sylvester_resultant_y(f, g)


class TestInterpolation:
    def test_recovers_cubic(self):
        target = UnivariatePoly([F(1, 2), -3, 0, 4])
        samples = [(F(k), target.evaluate(k)) for k in range(5)]
        assert lagrange_interpolate(samples) == target
