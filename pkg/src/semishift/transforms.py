"""Algebraic Stieltjes functions (F + kappa*sqrt(w**2-4c))/G and their measures.

A transform of this shape decomposes into a continuum density
kappa*sqrt(4c-t**2)/(pi*G(t)) on the support interval plus one atom per
real simple denominator root outside it.  `stieltjes_numeric` is the
independent quadrature oracle used to cross-check every closed form.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .branch import check_variance, cut_sqrt, support_halfwidth
from .errors import (
    ConvergenceError,
    DomainError,
    HigherOrderRealPoleError,
    NotRealError,
    PoleAtError,
    RootOnCutError,
)
from .poly import Poly, poly_roots
from .series import Series, sqrt_shifted_series

QUAD_TOL = 1e-10
REAL_TOL = 1e-9
ATOM_DROP_TOL = 1e-10


class AlgebraicStieltjes:
    """Function (F(w) + kappa*sqrt(w**2 - 4c)) / G(w).

    Representations with kappa = 0 are reduced to lowest terms by
    cancelling common roots of F and G; for kappa != 0 no polynomial
    factor can be shared with the root term, so F and G are kept as
    given.
    """

    __slots__ = ("F", "kappa", "G", "c")

    def __init__(self, F, kappa, G, c):
        F = F if isinstance(F, Poly) else Poly(F)
        G = G if isinstance(G, Poly) else Poly(G)
        if G.is_zero():
            raise ValueError("denominator polynomial must be nonzero")
        self.c = check_variance(c)
        kappa = complex(kappa)
        if kappa == 0 and G.degree >= 1 and not F.is_zero():
            F, G = _cancel_common_roots(F, G)
        self.F = F
        self.kappa = kappa
        self.G = G

    @classmethod
    def semicircle(cls, c):
        """Transform of the semicircle law of variance c (density sqrt(4c-t^2)/(2 pi c))."""
        return cls(Poly([0.0, -1.0]), 1.0, Poly([2.0 * float(c)]), c)

    @classmethod
    def shift_base(cls, c):
        """The base function for shift chains: twice the small quadratic root."""
        return cls(Poly([0.0, -1.0]), 1.0, Poly([1.0]), c)

    def eval(self, w):
        w = complex(w)
        gv = self.G(w)
        pol_tol = 1e-12 * (1.0 + abs(w) ** max(self.G.degree, 0))
        if abs(gv) < pol_tol:
            raise PoleAtError(w)
        return (self.F(w) + self.kappa * cut_sqrt(w, self.c)) / gv

    __call__ = eval

    def series(self, order):
        """Expansion at infinity, trusted through w**(-order)."""
        g = max(self.G.degree, 0)
        work = order + g + max(self.F.degree, 1) + 2
        num = Series.from_poly(self.F) + sqrt_shifted_series(self.c, work) * self.kappa
        inv_g = Series.from_poly(self.G).reciprocal(order=work)
        return (num * inv_g).truncate(order)

    def mass(self):
        """Total mass, read off as -s_1 of the expansion at infinity."""
        return complex(-self.series(2).tail_coeff(1))

    def is_real(self, tol=REAL_TOL):
        scale = max(
            1.0,
            float(np.max(np.abs(self.F.c))),
            float(np.max(np.abs(self.G.c))),
            abs(self.kappa),
        )
        return (
            self.F.max_imag() <= tol * scale
            and self.G.max_imag() <= tol * scale
            and abs(self.kappa.imag) <= tol * scale
        )

    def scaled(self, k):
        """The transform multiplied by the scalar k."""
        return AlgebraicStieltjes(self.F * k, self.kappa * k, self.G, self.c)

    def __repr__(self):
        return (
            f"AlgebraicStieltjes(F={self.F!r}, kappa={self.kappa!r}, "
            f"G={self.G!r}, c={self.c!r})"
        )


def _cancel_common_roots(F, G):
    """Remove shared roots of F and G (used only for kappa = 0)."""
    if G.degree < 1:
        return F, G
    changed = True
    while changed and G.degree >= 1 and not F.is_zero():
        changed = False
        for g, m in poly_roots(G).roots:
            scale = max(1.0, float(np.max(np.abs(F.c))))
            if abs(F(g)) < 1e-10 * scale * max(1.0, abs(g)) ** max(F.degree, 0):
                lin = Poly([-g, 1.0])
                F = F.divmod(lin)[0]
                G = G.div_exact(lin, tol=1e-8)
                changed = True
                break
    return F, G


@dataclass(frozen=True)
class DensitySpec:
    """Measure with continuum density sqrt(4c-t**2)/Q(t) plus point atoms.

    Q is None for purely atomic specs.  In probability mode (signed is
    False) Q must be positive on the open support interval and weights
    nonnegative; signed mode relaxes both.
    """

    c: float
    Q: Poly | None
    atoms: tuple = ()
    signed: bool = False
    total_mass: float | None = field(default=None, compare=False)

    def __post_init__(self):
        check_variance(self.c)
        h = support_halfwidth(self.c)
        edge = 1e-9 * (1.0 + h)
        for loc, weight in self.atoms:
            if abs(loc) < h - edge:
                raise RootOnCutError(f"atom at {loc} lies inside the support")
            if not self.signed and weight < -ATOM_DROP_TOL:
                raise ValueError(f"negative atom weight {weight} in probability mode")
        if self.Q is not None and not self.signed:
            grid = np.linspace(-h, h, 403)[1:-1]
            vals = self.Q(grid)
            if np.max(np.abs(vals.imag)) > 1e-9 * max(1.0, np.max(np.abs(vals))):
                raise NotRealError("density denominator is not real on the support")
            if np.any(vals.real <= 0):
                raise ValueError("density denominator must be positive on the support")

    def density(self, t):
        """Continuum density at t (vectorized); zero outside the support."""
        if self.Q is None:
            return np.zeros_like(np.asarray(t, dtype=float))
        t = np.asarray(t, dtype=float)
        inside = np.abs(t) < support_halfwidth(self.c)
        out = np.zeros_like(t)
        ti = t[inside]
        out[inside] = np.sqrt(4.0 * self.c - ti * ti) / self.Q(ti).real
        return out


def decompose_measure(S):
    """Split an algebraic transform into continuum density and atoms.

    The continuum density is kappa*sqrt(4c-t**2)/(pi*G(t)); every real
    simple root g of G outside the open support contributes an atom of
    weight -(F(g) + kappa*sqrt(g**2-4c))/G'(g).  Denominator roots inside
    the open support, or non-simple real roots, are rejected.
    """
    if not S.is_real():
        raise NotRealError("transform is not conjugation-symmetric")
    F = Poly(S.F.c.real)
    G = Poly(S.G.c.real)
    kappa = S.kappa.real
    c = S.c
    h = support_halfwidth(c)
    edge = 1e-9 * (1.0 + h)

    atoms = []
    if G.degree >= 1:
        dG = G.deriv()
        for g, m in poly_roots(G).roots:
            is_real_root = abs(g.imag) <= REAL_TOL * (1.0 + abs(g))
            if is_real_root and abs(g.real) < h - edge:
                raise RootOnCutError(
                    f"denominator root {g} inside the open support interval"
                )
            if is_real_root:
                x = g.real
                # a root within tolerance of an endpoint has vanishing root term
                sq = 0j if abs(abs(x) - h) <= edge else cut_sqrt(x, c)
                if m == 2:
                    # a double root where the numerator also vanishes is a
                    # removable factor: the pole is simple, weight by l'Hopital
                    num = F(x) + kappa * sq
                    scale = max(1.0, abs(F(x)), abs(kappa) * (1.0 + abs(x)))
                    if abs(num) > 1e-7 * scale or abs(abs(x) - h) <= edge:
                        raise HigherOrderRealPoleError(
                            f"real denominator root {x} has multiplicity 2"
                        )
                    dnum = F.deriv()(x) + kappa * x / sq
                    weight = -2.0 * dnum / G.deriv().deriv()(x)
                elif m > 2:
                    raise HigherOrderRealPoleError(
                        f"real denominator root {g} has multiplicity {m}"
                    )
                else:
                    weight = -(F(x) + kappa * sq) / dG(x)
                if abs(weight.imag) > REAL_TOL * (1.0 + abs(weight)):
                    raise NotRealError(f"atom weight at {x} is not real")
                if abs(weight.real) > ATOM_DROP_TOL:
                    atoms.append((float(x), float(weight.real)))
            else:
                residue = (F(g) + kappa * cut_sqrt(g, c)) / dG(g)
                if abs(residue) > 1e-8 * (1.0 + abs(g)):
                    raise NotRealError(
                        f"complex pole at {g} with nonzero residue {residue}"
                    )

    if kappa == 0.0:
        Q = None
    else:
        Q = Poly((math.pi / kappa) * G.c.real)
    total = float((-S.series(2).tail_coeff(1)).real)
    signed = any(wgt < 0 for _, wgt in atoms)
    if Q is not None:
        grid = np.linspace(-h, h, 403)[1:-1]
        if np.any(Q(grid).real <= 0):
            signed = True
    return DensitySpec(c=c, Q=Q, atoms=tuple(atoms), signed=signed, total_mass=total)


def stieltjes_numeric(spec, w, tol=QUAD_TOL):
    """Quadrature oracle: integral of 1/(t-w) against the measure.

    The continuum part is integrated after the substitution
    t = 2*sqrt(c)*sin(theta), which absorbs the endpoint square-root
    behavior; atoms contribute weight/(location - w).
    """
    w = complex(w)
    h = support_halfwidth(spec.c)
    if w.imag == 0.0:
        if abs(w.real) <= h:
            raise DomainError("evaluation point on the support interval")
        for loc, _ in spec.atoms:
            if abs(w.real - loc) < 1e-12 * (1.0 + abs(loc)):
                raise DomainError("evaluation point at an atom")
    total = 0j
    if spec.Q is not None:
        Q = spec.Q
        c4 = 4.0 * spec.c

        def integrand(theta):
            t = h * math.sin(theta)
            cos2 = math.cos(theta) ** 2
            return c4 * cos2 / ((t - w) * Q(t))

        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            val, err = integrate.quad(
                integrand,
                -math.pi / 2.0,
                math.pi / 2.0,
                complex_func=True,
                epsabs=tol,
                epsrel=tol,
                limit=400,
            )
        if abs(err) > 1e-6:
            raise ConvergenceError(f"quadrature error estimate {err} too large")
        total += val
    for loc, weight in spec.atoms:
        total += weight / (loc - w)
    return total


def haagerup_transform(r, lam):
    """Two-level deformation of the semicircle law from the (r, lam) family.

    Returns the algebraic transform with c = r(1-r), numerator
    (1-w**2) + (lam-1/lam)(2r-1)w/2 + ((lam-1/lam)/2)*sqrt(w**2-4c) and
    denominator (1-w**2)(r*lam + (1-r)/lam - w).
    """
    r = float(r)
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie strictly between 0 and 1")
    lam = complex(lam)
    if lam == 0:
        raise ValueError("lam must be nonzero")
    if lam.imag == 0.0:
        lam = lam.real
    c = r * (1.0 - r)
    half_span = (lam - 1.0 / lam) / 2.0
    one_minus_w2 = Poly([1.0, 0.0, -1.0])
    F = one_minus_w2 + Poly([0.0, half_span * (2.0 * r - 1.0)])
    G = one_minus_w2 * Poly([r * lam + (1.0 - r) / lam, -1.0])
    return AlgebraicStieltjes(F, half_span, G, c)
