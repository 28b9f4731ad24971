"""Square-root branch cut along the support interval, and the quadratic roots.

For c > 0 the support interval is I_c = [-2*sqrt(c), 2*sqrt(c)].  The
branch of sqrt(w**2 - 4c) used everywhere is analytic off I_c and
asymptotic to w at infinity; it is computed as the product of principal
square roots of (w - 2*sqrt(c)) and (w + 2*sqrt(c)), whose cuts cancel
off I_c.  Boundary values on the cut are +/- i*sqrt(4c - x**2) from
above/below.
"""

import cmath

from .errors import EndpointError, OnCutError


def check_variance(c):
    c = float(c)
    if not c > 0.0:
        raise ValueError(f"variance parameter must be positive, got {c}")
    return c


def support_halfwidth(c):
    """Half-width 2*sqrt(c) of the support interval."""
    return 2.0 * (check_variance(c) ** 0.5)


def on_cut(w, c):
    """True when w lies on the open cut (-2*sqrt(c), 2*sqrt(c))."""
    w = complex(w)
    return w.imag == 0.0 and abs(w.real) < support_halfwidth(c)


def cut_sqrt(w, c):
    """Branch of sqrt(w**2 - 4c) analytic off the support, asymptotic to w.

    Real arguments beyond the support give +sqrt(x**2-4c) on the right
    and -sqrt(x**2-4c) on the left; endpoints give 0 (the continuous
    extension).  Points on the open cut raise OnCutError.
    """
    h = support_halfwidth(c)
    w = complex(w)
    if w.imag == 0.0:
        # strip the sign of a negative zero so both factors agree on the side
        w = complex(w.real, 0.0)
        if abs(w.real) < h:
            raise OnCutError(f"w={w} lies on the branch cut")
    return cmath.sqrt(w - h) * cmath.sqrt(w + h)


def cut_sqrt_boundary(x, c):
    """Upper and lower boundary values (+i*sqrt(4c-x**2), -i*sqrt(4c-x**2)).

    x must lie strictly inside the support interval.
    """
    h = support_halfwidth(c)
    x = float(x)
    if abs(x) >= h:
        raise EndpointError(f"x={x} is not interior to (-{h}, {h})")
    v = 1j * ((4.0 * float(c) - x * x) ** 0.5)
    return v, -v


def semicircle_root(w, c):
    """Small root of z**2 + w z + c = 0, the one with |z| < sqrt(c).

    Computed in the cancellation-free form -2c / (w + sqrt(w**2-4c));
    the denominator modulus never drops below 2*sqrt(c).
    """
    s = cut_sqrt(w, c)
    return -2.0 * float(c) / (complex(w) + s)


def semicircle_root_conj(w, c):
    """Large root; chosen so the two roots sum to -w exactly."""
    return -complex(w) - semicircle_root(w, c)
