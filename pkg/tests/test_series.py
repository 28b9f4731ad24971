import math

import numpy as np
import pytest

from semishift.errors import DivisionByZeroSeriesError, InsufficientOrderError
from semishift.poly import Poly
from semishift.series import Series, small_root_series, sqrt_shifted_series


def test_reciprocal_of_minus_one_over_w():
    s = Series.from_tail([-1.0])
    r = s.reciprocal()
    assert r.coefficient(1) == -1.0
    # order bookkeeping: input order 1 with leading exponent -1 leaves
    # only the w-term trusted
    assert r.order == -1


def test_reciprocal_with_constant_term():
    a = 2.5
    s = Series.from_tail([-1.0, -a], order=2)
    r = s.reciprocal()
    assert abs(r.coefficient(1) + 1.0) < 1e-15
    assert abs(r.coefficient(0) - a) < 1e-15
    prod = s * r
    assert abs(prod.coefficient(0) - 1.0) < 1e-15
    for k in range(1, int(prod.order) + 1):
        assert abs(prod.tail_coeff(k)) < 1e-15


def test_mul_add_trivial():
    inv_w = Series.from_tail([-1.0], order=5)
    sq = inv_w * inv_w
    assert abs(sq.tail_coeff(2) - 1.0) < 1e-15
    zero = inv_w + (-inv_w)
    assert zero.is_zero()
    w = Series.from_poly(Poly([0.0, 1.0]))
    one = w * Series.from_tail([1.0], order=4)
    assert abs(one.coefficient(0) - 1.0) < 1e-15


def test_reciprocal_of_small_root_series():
    c = 1.0
    rho_over_c = small_root_series(c, 12) * (1.0 / c)
    r = rho_over_c.reciprocal()
    # leading behavior -w with zero constant term
    assert abs(r.coefficient(1) + 1.0) < 1e-12
    assert abs(r.coefficient(0)) < 1e-12
    back = (rho_over_c * r - 1.0)
    for k in range(0, int(back.order) + 1):
        assert abs(back.coefficient(-k)) < 1e-12


def test_involution_up_to_truncation():
    s = small_root_series(0.7, 13)
    rr = s.reciprocal().reciprocal()
    for k in range(1, int(rr.order) + 1):
        assert abs(rr.tail_coeff(k) - s.tail_coeff(k)) < 1e-12


def test_sqrt_series_matches_pointwise():
    c = 1.3
    s = sqrt_shifted_series(c, 14)
    w = 60.0 + 11.0j
    val = sum(
        s.coefficient(k) * w**k for k in range(s.hi, -int(s.order) - 1, -1)
    )
    import cmath

    exact = cmath.sqrt(w - 2 * math.sqrt(c)) * cmath.sqrt(w + 2 * math.sqrt(c))
    assert abs(val - exact) < 1e-12 * abs(exact)


def test_zero_leading_raises():
    with pytest.raises(DivisionByZeroSeriesError):
        Series.from_tail([0.0, 0.0], order=2).reciprocal()


def test_untrusted_coefficient_raises():
    s = Series.from_tail([-1.0, 0.5], order=2)
    with pytest.raises(InsufficientOrderError):
        s.tail_coeff(3)


def test_order_propagation_mul():
    a = Series.from_tail([-1.0, 0.3, 0.1], order=3)  # leading exponent -1
    b = Series.from_poly(Poly([2.0, 1.0]))  # exact, leading exponent 1
    prod = a * b
    # order = min(inf - (-1), 3 - 1) = 2
    assert prod.order == 2


def test_exact_poly_reciprocal_needs_order():
    g = Series.from_poly(Poly([1.0, 2.0]))
    with pytest.raises(ValueError):
        g.reciprocal()
    r = g.reciprocal(order=6)
    check = g * r
    assert abs(check.coefficient(0) - 1.0) < 1e-14
    for k in range(1, 6):
        assert abs(check.coefficient(-k)) < 1e-14
