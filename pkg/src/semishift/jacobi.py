"""Jacobi parameters: extraction from series, continued fractions, matrices.

The extraction algorithm is pure coefficient algebra on a series at
infinity.  With S normalized to -1/w + O(1/w^2), each level reads

    1/S = -w + a_n + O(1/w),
    1/(w - a_n + 1/S) = alpha + beta*w + O(1/w),
    b_n^2 = 1/beta,    next S = -beta*(w - a_n + 1/S),

and consumes two series orders, so depth n needs order >= 2n + 2.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from .branch import check_variance, semicircle_root
from .errors import (
    InsufficientOrderError,
    NotPositiveError,
    NotRealError,
    PoleNearError,
    SingularError,
    ZeroBetaError,
    DegenerateError,
    DivisionByZeroSeriesError,
)
from .poly import Poly
from .series import Series, small_root_series

REAL_TOL = 1e-9


@dataclass(frozen=True)
class JacobiParams:
    """Diagonal entries a, squared off-diagonals bsq, and the tail.

    tail_c = c closes the continued fraction with the constant
    semicircular tail of variance c; tail_c = None truncates it.  For a
    semicircular tail a and bsq have equal length; truncated parameters
    use bsq[k] to couple level k to level k+1, so only the first
    len(a)-1 entries act.
    """

    a: tuple
    bsq: tuple
    tail_c: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(x) for x in self.a))
        object.__setattr__(self, "bsq", tuple(float(x) for x in self.bsq))
        if self.tail_c is not None:
            check_variance(self.tail_c)
            if len(self.bsq) != len(self.a):
                raise ValueError("semicircular tail needs len(bsq) == len(a)")
        elif len(self.a) and len(self.bsq) < len(self.a) - 1:
            raise ValueError("truncated parameters need len(bsq) >= len(a) - 1")

    @property
    def depth(self):
        return len(self.a)

    @property
    def positive(self):
        return all(b > 0 for b in self.bsq)


@dataclass(frozen=True)
class TriJacobi:
    """Real symmetric tridiagonal matrix (diagonal, off-diagonal)."""

    diag: tuple
    offdiag: tuple

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(float(x) for x in self.diag))
        object.__setattr__(self, "offdiag", tuple(float(x) for x in self.offdiag))
        if len(self.offdiag) != max(len(self.diag) - 1, 0):
            raise ValueError("off-diagonal length must be dimension - 1")

    @property
    def n(self):
        return len(self.diag)

    def dense(self):
        m = np.diag(np.asarray(self.diag))
        off = np.asarray(self.offdiag)
        if off.size:
            m += np.diag(off, 1) + np.diag(off, -1)
        return m


def extract_jacobi(series, depth, real_tol=REAL_TOL):
    """Read Jacobi parameters (a_0..a_{depth-1}, b_0^2..b_{depth-1}^2).

    The series must carry a normalized leading tail s_1 = -1 and order
    at least 2*depth + 2.  Genuinely complex parameters (imaginary part
    beyond real_tol) raise NotRealError; a vanishing beta coefficient
    means the continued fraction terminates and raises ZeroBetaError.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if series.order < 2 * depth + 2:
        raise InsufficientOrderError(
            f"need series order >= {2 * depth + 2}, have {series.order}"
        )
    s1 = series.tail_coeff(1)
    if abs(s1 + 1.0) > 1e-10:
        raise ValueError(f"series is not normalized: s_1 = {s1}, expected -1")

    w_poly = Series.from_poly(Poly([0.0, 1.0]))
    a_out, bsq_out = [], []
    S = series
    for level in range(depth):
        R = S.reciprocal()
        head = R.poly_part()
        if head.degree > 1 or abs(head.coeff(1) + 1.0) > 1e-8:
            raise ZeroBetaError(level, "reciprocal series lost the -w leading term")
        a_n = head.coeff(0)
        T = R + (w_poly - a_n)
        # the polynomial part cancels identically; drop its roundoff debris
        # so the pure-tail structure survives the next reciprocal
        T = Series.from_tail(T.tail_array(), order=T.order)
        try:
            U = T.reciprocal()
        except DivisionByZeroSeriesError:
            raise ZeroBetaError(level) from None
        beta = U.poly_part().coeff(1)
        if abs(beta) < 1e-12:
            raise ZeroBetaError(level)
        a_out.append(a_n)
        bsq_out.append(1.0 / beta)
        if level + 1 == depth:
            break
        S = T * (-1.0 / bsq_out[-1])

    a_arr = np.asarray(a_out)
    b_arr = np.asarray(bsq_out)
    if np.max(np.abs(a_arr.imag)) > real_tol or np.max(np.abs(b_arr.imag)) > real_tol:
        raise NotRealError("extracted parameters have nonreal entries")
    return JacobiParams(a=a_arr.real, bsq=b_arr.real, tail_c=None)


def eval_cfrac(J, w):
    """Evaluate the continued fraction bottom-up.

    A semicircular tail contributes the closed-form innermost value
    (small root)/c; a truncated chain ends at its last level.  For
    positive parameters the value maps the upper half-plane into itself.
    """
    w = complex(w)
    a, bsq = J.a, J.bsq
    if J.tail_c is not None:
        v = semicircle_root(w, J.tail_c) / J.tail_c
        levels = range(len(a) - 1, -1, -1)
        for k in levels:
            den = a[k] - w - bsq[k] * v
            if abs(den) < 1e-13 * (1.0 + abs(w) + abs(a[k])):
                raise PoleNearError(f"vanishing denominator at level {k}, w={w}")
            v = 1.0 / den
        return v
    if not a:
        raise ValueError("truncated chain needs at least one level")
    den = a[-1] - w
    if abs(den) < 1e-13 * (1.0 + abs(w)):
        raise PoleNearError(f"vanishing denominator at level {len(a) - 1}, w={w}")
    v = 1.0 / den
    for k in range(len(a) - 2, -1, -1):
        den = a[k] - w - bsq[k] * v
        if abs(den) < 1e-13 * (1.0 + abs(w) + abs(a[k])):
            raise PoleNearError(f"vanishing denominator at level {k}, w={w}")
        v = 1.0 / den
    return v


def cfrac_series(J, order):
    """Series at infinity of the continued fraction, trusted through w**-order.

    Built bottom-up with the same recursion as eval_cfrac; each level
    gains two trusted orders, so the tail is expanded at the target
    order directly.
    """
    w_poly = Series.from_poly(Poly([0.0, 1.0]))
    if J.tail_c is not None:
        v = small_root_series(J.tail_c, order) * (1.0 / J.tail_c)
        start = len(J.a) - 1
    else:
        if not J.a:
            raise ValueError("truncated chain needs at least one level")
        v = (Series.constant(J.a[-1]) - w_poly).reciprocal(order=order)
        start = len(J.a) - 2
    for k in range(start, -1, -1):
        den = (Series.constant(J.a[k]) - w_poly) - v * J.bsq[k]
        v = den.reciprocal()
    return v.truncate(order)


def jacobi_matrix(J, n):
    """Leading n-by-n truncation of the Jacobi matrix.

    Requires strictly positive bsq (entries are b = +sqrt(bsq)); a
    semicircular tail fills the remaining diagonal with 0 and
    off-diagonal with sqrt(c).
    """
    if not J.positive:
        raise NotPositiveError("bsq entries must be strictly positive")
    depth = len(J.a)
    if J.tail_c is None and n > depth:
        raise ValueError("truncated parameters cannot fill a larger matrix")
    diag = [J.a[k] if k < depth else 0.0 for k in range(n)]
    off = []
    tail_b = None if J.tail_c is None else float(J.tail_c) ** 0.5
    for k in range(n - 1):
        if k < len(J.bsq):
            off.append(float(J.bsq[k]) ** 0.5)
        else:
            off.append(tail_b)
    return TriJacobi(diag=diag, offdiag=off)


def resolvent00(T, w):
    """Entry (0,0) of the resolvent (T - w)^{-1} via a tridiagonal solve."""
    w = complex(w)
    n = T.n
    ab = np.zeros((3, n), dtype=complex)
    ab[1, :] = np.asarray(T.diag) - w
    if n > 1:
        off = np.asarray(T.offdiag)
        ab[0, 1:] = off
        ab[2, :-1] = off
    rhs = np.zeros(n, dtype=complex)
    rhs[0] = 1.0
    try:
        x = solve_banded((1, 1), ab, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularError(str(exc)) from None
    if not np.all(np.isfinite(x)):
        raise SingularError("resolvent solve produced non-finite entries")
    return complex(x[0])


def affine_transform(J, a, b):
    """Jacobi data of the pushforward t -> b*t + a.

    Diagonals map to b*a_n + a, squared off-diagonals to b^2 * bsq, and
    a semicircular tail of variance c to variance b^2 c.
    """
    b = float(b)
    if b == 0.0:
        raise DegenerateError("affine scale must be nonzero")
    a = float(a)
    tail = None if J.tail_c is None else b * b * J.tail_c
    return JacobiParams(
        a=tuple(b * x + a for x in J.a),
        bsq=tuple(b * b * x for x in J.bsq),
        tail_c=tail,
    )
