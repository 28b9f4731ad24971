"""Dense complex polynomials and a simultaneous-iteration root finder.

Coefficients are stored in ascending degree order.  Degrees stay small
(<= 8 throughout the library), so the Aberth-Ehrlich iteration on the
monic normalization is both fast and robust, and double roots are
recovered by clustering.
"""

from dataclasses import dataclass

import numpy as np
import numpy.polynomial.polynomial as npoly

from .errors import ConvergenceError, NoRootsError

RESIDUAL_TOL = 1e-10
MERGE_TOL = 1e-7
MAX_ITER = 200


def _as_coeffs(c):
    a = np.atleast_1d(np.asarray(c, dtype=complex))
    if a.ndim != 1:
        raise ValueError("coefficient array must be one-dimensional")
    return a


class Poly:
    """Polynomial with complex coefficients, ascending degree.

    The zero polynomial is stored as the single coefficient 0; otherwise
    the leading coefficient is nonzero (exact trailing zeros are trimmed
    at construction).
    """

    __slots__ = ("c",)

    def __init__(self, coeffs):
        a = _as_coeffs(coeffs)
        k = a.size - 1
        while k > 0 and a[k] == 0:
            k -= 1
        self.c = a[: k + 1].copy()

    @classmethod
    def zero(cls):
        return cls([0.0])

    @classmethod
    def one(cls):
        return cls([1.0])

    @classmethod
    def x(cls):
        return cls([0.0, 1.0])

    @classmethod
    def from_roots(cls, roots, leading=1.0):
        if len(roots) == 0:
            return cls([leading])
        return cls(leading * npoly.polyfromroots(np.asarray(roots, dtype=complex)))

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        if self.is_zero():
            return -1
        return self.c.size - 1

    def is_zero(self, tol=0.0):
        return bool(np.all(np.abs(self.c) <= tol))

    def __call__(self, w):
        return npoly.polyval(w, self.c)

    def __add__(self, other):
        other = other if isinstance(other, Poly) else Poly([other])
        return Poly(npoly.polyadd(self.c, other.c))

    __radd__ = __add__

    def __sub__(self, other):
        other = other if isinstance(other, Poly) else Poly([other])
        return Poly(npoly.polysub(self.c, other.c))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly(-self.c)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly(npoly.polymul(self.c, other.c))
        return Poly(self.c * other)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly.one()
        for _ in range(int(n)):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.c.size == other.c.size and bool(np.all(self.c == other.c))

    def __repr__(self):
        return f"Poly({self.c.tolist()})"

    def deriv(self):
        return Poly(npoly.polyder(self.c))

    def divmod(self, other):
        q, r = npoly.polydiv(self.c, other.c)
        return Poly(q), Poly(r)

    def div_exact(self, other, tol=1e-9):
        """Divide by an exact factor; raise if the remainder is not tiny."""
        q, r = self.divmod(other)
        scale = max(1.0, float(np.max(np.abs(self.c))))
        if not r.is_zero(tol * scale):
            raise ValueError("division is not exact: remainder too large")
        return q

    def monic(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no monic form")
        return Poly(self.c / self.c[-1])

    def trim(self, rel_tol):
        """Drop trailing coefficients below rel_tol * max|coeff|."""
        scale = float(np.max(np.abs(self.c)))
        if scale == 0.0:
            return Poly.zero()
        a = self.c.copy()
        k = a.size - 1
        while k > 0 and abs(a[k]) <= rel_tol * scale:
            k -= 1
        return Poly(a[: k + 1])

    def max_imag(self):
        return float(np.max(np.abs(self.c.imag)))

    def real_poly(self, tol=1e-9):
        """Return the real-coefficient version; raise if imag parts exceed tol."""
        scale = max(1.0, float(np.max(np.abs(self.c))))
        if self.max_imag() > tol * scale:
            raise ValueError("polynomial has genuinely complex coefficients")
        return Poly(self.c.real)

    def coeff(self, k):
        """Coefficient of w**k (0 beyond the stored degree)."""
        if 0 <= k < self.c.size:
            return complex(self.c[k])
        return 0j


@dataclass(frozen=True)
class RootSet:
    """Roots with multiplicities; multiplicities sum to the source degree."""

    roots: tuple  # of (location, multiplicity)

    @property
    def total_multiplicity(self):
        return sum(m for _, m in self.roots)

    def locations(self):
        return [r for r, _ in self.roots]

    def expanded(self):
        """Every root repeated by its multiplicity."""
        out = []
        for r, m in self.roots:
            out.extend([r] * m)
        return out


def _aberth(monic, max_iter=MAX_ITER):
    n = len(monic) - 1
    dcoef = npoly.polyder(monic)
    radius = 1.0 + float(np.max(np.abs(monic[:-1])))
    # asymmetric offset breaks symmetric traps (pure-real / pure-imaginary orbits)
    angles = 2.0 * np.pi * (np.arange(n) + 0.37) / n
    z = radius * np.exp(1j * angles)

    norm = float(np.max(np.abs(monic)))
    converged = False
    for _ in range(max_iter):
        pv = npoly.polyval(z, monic)
        dv = npoly.polyval(z, dcoef)
        dv = np.where(np.abs(dv) < 1e-300, 1e-300, dv)
        newton = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        denom = 1.0 - newton * s
        denom = np.where(np.abs(denom) < 1e-300, 1e-300, denom)
        step = newton / denom
        z = z - step
        # iterate to stagnation so clustered (multiple) roots tighten well
        # below the merge tolerance, not just below the residual target
        if np.all(np.abs(step) <= 1e-14 * (1.0 + np.abs(z))):
            converged = True
            break
    if not converged:
        pv = npoly.polyval(z, monic)
        bound = RESIDUAL_TOL * norm * np.maximum(1.0, np.abs(z)) ** n
        if not np.all(np.abs(pv) <= bound):
            raise ConvergenceError(
                f"root iteration did not converge in {max_iter} steps"
            )
    return z


def _cluster(roots):
    """Greedy merge of roots closer than the multiplicity tolerance."""
    remaining = list(roots)
    clusters = []
    while remaining:
        seed = remaining.pop(0)
        members = [seed]
        changed = True
        while changed:
            changed = False
            center = np.mean(members)
            tol = MERGE_TOL * (1.0 + abs(center))
            for r in remaining[:]:
                if abs(r - center) < tol:
                    members.append(r)
                    remaining.remove(r)
                    changed = True
        clusters.append((complex(np.mean(members)), len(members)))
    clusters.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    return clusters


def _polish_multiple(monic, root, mult):
    """Newton steps on the (mult-1)-th derivative, where the root is simple."""
    d = monic
    for _ in range(mult - 1):
        d = npoly.polyder(d)
    dd = npoly.polyder(d)
    z = root
    for _ in range(8):
        dv = npoly.polyval(z, dd)
        if abs(dv) < 1e-300:
            break
        step = npoly.polyval(z, d) / dv
        z = z - step
        if abs(step) < 1e-15 * (1.0 + abs(z)):
            break
    return z


def poly_roots(p):
    """All roots of p with multiplicities from clustering.

    Every returned root r satisfies
    |p(r)| <= 1e-10 * max|coeff| * max(1, |r|)**deg.
    """
    if not isinstance(p, Poly):
        p = Poly(p)
    if p.is_zero() or p.degree == 0:
        raise NoRootsError("polynomial of degree < 1 has no roots to find")
    monic = p.c / p.c[-1]
    if p.degree == 1:
        z = np.array([-monic[0]])
    else:
        z = _aberth(monic)
    clusters = [
        ((_polish_multiple(monic, r, m) if m > 1 else r), m)
        for r, m in _cluster(z)
    ]
    return RootSet(roots=tuple(clusters))
