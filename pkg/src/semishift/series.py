"""Truncated series at infinity: p(w) + sum_{k>=1} s_k w^{-k}.

A series carries a trust horizon `order`: coefficients of exponents
>= -order are exact consequences of the inputs; everything below is
unknown (error O(w^{-order-1})).  Arithmetic propagates the horizon:

    add:        order' = min(order1, order2)
    mul:        order' = min(order2 - e1, order1 - e2)
    reciprocal: order' = order + 2*e

where e is the leading exponent (for a series that is zero on its whole
trusted range, e = -order - 1, the exponent at which error may start).
An exact polynomial has order = inf.
"""

import math

import numpy as np

from .errors import DivisionByZeroSeriesError, InsufficientOrderError
from .poly import Poly

INF = math.inf


class Series:
    """Coefficients ascending by exponent: c[i] is the w**(lo+i) term."""

    __slots__ = ("c", "lo", "order")

    def __init__(self, coeffs, lo, order):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        # strip exact leading zeros
        hi_idx = c.size - 1
        while hi_idx > 0 and c[hi_idx] == 0:
            hi_idx -= 1
        c = c[: hi_idx + 1]
        if order is INF:
            lo_idx = 0
            while lo_idx < c.size - 1 and c[lo_idx] == 0:
                lo_idx += 1
            self.c = c[lo_idx:].copy()
            self.lo = lo + lo_idx
            self.order = INF
            return
        order = int(order)
        hi = lo + c.size - 1
        target_lo = -order
        if hi < target_lo:
            # everything stored sits below the horizon: trusted part is zero
            self.c = np.zeros(1, dtype=complex)
            self.lo = target_lo
            self.order = order
            return
        padded = np.zeros(hi - target_lo + 1, dtype=complex)
        for i, cv in enumerate(c):
            e = lo + i
            if e >= target_lo:
                padded[e - target_lo] = cv
        self.c = padded
        self.lo = target_lo
        self.order = order

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_poly(cls, p, order=INF):
        coeffs = p.c if isinstance(p, Poly) else np.asarray(p, dtype=complex)
        return cls(coeffs, 0, order)

    @classmethod
    def from_tail(cls, tail, order=None):
        """Series sum_k tail[k-1] * w**(-k) with no polynomial part."""
        tail = np.asarray(tail, dtype=complex)
        if order is None:
            order = tail.size
        return cls(tail[::-1], -tail.size, order)

    @classmethod
    def constant(cls, value, order=INF):
        return cls([value], 0, order)

    @classmethod
    def zero(cls, order=INF):
        return cls([0.0], 0, order)

    # -- structure ------------------------------------------------------

    @property
    def hi(self):
        return self.lo + self.c.size - 1

    def leading_exponent(self):
        """Highest exponent with nonzero coefficient; None if trusted-zero."""
        nz = np.nonzero(self.c)[0]
        if nz.size == 0:
            return None
        return self.lo + int(nz[-1])

    def _eff_exponent(self):
        e = self.leading_exponent()
        if e is not None:
            return e
        if self.order is INF:
            return None  # exact zero
        return -self.order - 1

    def is_zero(self):
        return self.leading_exponent() is None

    def coefficient(self, k):
        """Coefficient of w**k; raises below the trust horizon."""
        if self.order is not INF and k < -self.order:
            raise InsufficientOrderError(
                f"coefficient of w**{k} is below the trust horizon {-self.order}"
            )
        if k > self.hi or k < self.lo:
            return 0j
        return complex(self.c[k - self.lo])

    def tail_coeff(self, k):
        """s_k, the coefficient of w**(-k) (k >= 1)."""
        return self.coefficient(-k)

    def poly_part(self):
        if self.order is not INF and self.order < 0:
            raise InsufficientOrderError("no trusted nonnegative exponents")
        if self.hi < 0:
            return Poly.zero()
        start = max(self.lo, 0)
        coeffs = np.zeros(start, dtype=complex)
        return Poly(np.concatenate([coeffs, self.c[start - self.lo :]]))

    def tail_array(self):
        """[s_1, ..., s_order]; only for finite nonnegative order."""
        if self.order is INF:
            raise ValueError("exact series has unbounded tail; truncate first")
        k = int(self.order)
        out = np.zeros(max(k, 0), dtype=complex)
        for j in range(1, k + 1):
            if self.lo <= -j <= self.hi:
                out[j - 1] = self.c[-j - self.lo]
        return out

    def truncate(self, order):
        return Series(self.c, self.lo, min(self.order, order))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Series):
            other = Series.constant(other)
        order = min(self.order, other.order)
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        c = np.zeros(hi - lo + 1, dtype=complex)
        c[self.lo - lo : self.lo - lo + self.c.size] += self.c
        c[other.lo - lo : other.lo - lo + other.c.size] += other.c
        return Series(c, lo, order)

    __radd__ = __add__

    def __neg__(self):
        return Series(-self.c, self.lo, self.order)

    def __sub__(self, other):
        if not isinstance(other, Series):
            other = Series.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            if other == 0:
                return Series.zero(INF)
            return Series(self.c * other, self.lo, self.order)
        if self.order is INF and self.is_zero():
            return Series.zero(INF)
        if other.order is INF and other.is_zero():
            return Series.zero(INF)
        e1, e2 = self._eff_exponent(), other._eff_exponent()
        if self.order is INF and other.order is INF:
            order = INF
        else:
            terms = []
            if other.order is not INF:
                terms.append(other.order - e1)
            if self.order is not INF:
                terms.append(self.order - e2)
            order = min(terms)
        c = np.convolve(self.c, other.c)
        return Series(c, self.lo + other.lo, order)

    __rmul__ = __mul__

    def reciprocal(self, order=None):
        """Series R with self * R = 1 up to the surviving order.

        For an exact (order=inf) input, `order` selects the result's
        trust horizon; for truncated input it is capped at order + 2e.
        """
        e = self.leading_exponent()
        if e is None:
            raise DivisionByZeroSeriesError("reciprocal of a zero series")
        if self.order is INF:
            if order is None:
                raise ValueError("reciprocal of an exact series needs a target order")
            result_order = order
        else:
            result_order = self.order + 2 * e
            if order is not None:
                result_order = min(result_order, order)
        n_max = result_order - e  # result exponents -e-n trusted for n <= order+e
        if n_max < 0:
            return Series([0.0], -result_order, result_order)
        lead = self.c[e - self.lo]
        u = np.zeros(n_max + 1, dtype=complex)  # u[m] coeff of w**(-m) in S/(lead w^e)
        for m in range(1, n_max + 1):
            k = e - m
            if self.lo <= k <= self.hi:
                u[m] = self.c[k - self.lo] / lead
        r = np.zeros(n_max + 1, dtype=complex)
        r[0] = 1.0
        for n in range(1, n_max + 1):
            r[n] = -np.dot(u[1 : n + 1], r[n - 1 :: -1])
        # result coeff of w**(-e-n) is r[n]/lead
        return Series(r[::-1] / lead, -e - n_max, result_order)


def binom_half(k):
    """Binomial coefficient (1/2 choose k)."""
    b = 1.0
    for j in range(1, k + 1):
        b *= (0.5 - (j - 1)) / j
    return b


def sqrt_shifted_series(c, order):
    """Expansion of the square root of w**2 - 4c at infinity, w*(1 - 2c/w**2 - ...)."""
    k_max = (order + 1) // 2
    coeffs = np.zeros(2 * k_max + 2, dtype=complex)  # exponents 1 down to 1-2k_max-1
    for k in range(k_max + 1):
        coeffs[2 * k] = binom_half(k) * (-4.0 * c) ** k
    return Series(coeffs[::-1], 1 - (coeffs.size - 1), order)


def small_root_series(c, order):
    """Expansion of the small quadratic root (-w + sqrt(w**2-4c))/2 = -c/w - ..."""
    s = sqrt_shifted_series(c, order)
    return (s - Series.from_poly(Poly([0.0, 1.0]))) * 0.5
