"""Residue-calculus Stieltjes transforms of densities sqrt(4c-t**2)/Q(t).

The transform assembles as

    S(w) = pi*sqrt(w**2-4c)/Q(w) + pi * sum_j q_j(w)/(zeta_j - w)^{m_j}
           - pi * R_Q(w),

where zeta_j are the roots of Q outside the support with multiplicities
m_j, q_j collects the local Taylor data of sqrt(z**2-4c)/(deflated Q),
and R_Q is the residue at infinity: the 1/z coefficient of
sqrt(z**2-4c)/(z-w) * 1/Q(z), a polynomial in w.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .branch import check_variance, cut_sqrt, support_halfwidth
from .errors import (
    BadAtomSiteError,
    EndpointHigherOrderError,
    InconsistentError,
    NotNormalizableError,
    RootInsideCutError,
)
from .inversion import (
    OneShiftSolutionSet,
    classify_positivity,
    one_shift_from_roots,
    one_shift_polys,
)
from .poly import Poly, poly_roots
from .series import Series, binom_half
from .transforms import AlgebraicStieltjes, DensitySpec, decompose_measure

EDGE_TOL = 1e-9


def _sqrt_cut_moment(m, c):
    """Polynomial E_m(w): the z**(-m) coefficient of sqrt(z**2-4c)/(z-w)."""
    coeffs = np.zeros(m + 1, dtype=complex)
    for k in range(m // 2 + 1):
        coeffs[m - 2 * k] = binom_half(k) * (-4.0 * c) ** k
    return Poly(coeffs)


def residue_polynomial(Q, c):
    """Residue at infinity of sqrt(z**2-4c)/((z-w)Q(z)), as a polynomial in w.

    For polynomial Q this is 0 (deg >= 2), 1/b (Q = a + b*z) or w/a
    (Q = a).
    """
    c = check_variance(c)
    Q = Q if isinstance(Q, Poly) else Poly(Q)
    if Q.is_zero():
        raise ValueError("Q must be nonzero")
    inv = Series.from_poly(Q).reciprocal(order=2)
    out = Poly.zero()
    for exp in range(inv.lo, inv.hi + 1):
        m = 1 + exp  # pairs z**exp of 1/Q with z**(-m) of the expansion
        if m < 0:
            continue
        u = inv.coefficient(exp)
        if u != 0:
            out = out + _sqrt_cut_moment(m, c) * u
    return out


def _taylor_shift(p, center, order):
    """First `order` Taylor coefficients of p at the center."""
    coeffs = []
    cur = p
    lin = Poly([-center, 1.0])
    for _ in range(order):
        q, r = cur.divmod(lin)
        coeffs.append(r.coeff(0))
        cur = q
    return coeffs


def _sqrt_taylor(center, c, order):
    """Taylor coefficients of sqrt(z**2-4c) at a center off the support."""
    s0 = cut_sqrt(center, c)
    out = [s0]
    p = {1: 2.0 * center, 2: 1.0 + 0.0j}
    for n in range(1, order):
        acc = p.get(n, 0.0)
        acc -= sum(out[i] * out[n - i] for i in range(1, n))
        out.append(acc / (2.0 * s0))
    return out


def pole_terms(Q, c):
    """Pole data (zeta_j, m_j, q_j) for every root of Q outside the support.

    Simple roots exactly at the endpoints contribute nothing (the root
    factor vanishes there) and are dropped; endpoint roots of higher
    multiplicity are unsupported; roots strictly inside the open support
    are rejected.
    """
    c = check_variance(c)
    Q = Q if isinstance(Q, Poly) else Poly(Q)
    if Q.degree < 1:
        return []
    h = support_halfwidth(c)
    edge = EDGE_TOL * (1.0 + h)
    out = []
    for zeta, m in poly_roots(Q).roots:
        is_real = abs(zeta.imag) <= 1e-9 * (1.0 + abs(zeta))
        if is_real and abs(zeta.real) < h - edge:
            raise RootInsideCutError(
                f"density denominator root {zeta} inside the support"
            )
        if is_real and abs(abs(zeta.real) - h) <= edge:
            if m == 1:
                continue  # root term vanishes at the endpoint
            raise EndpointHigherOrderError(
                f"endpoint root {zeta} of multiplicity {m} unsupported"
            )
        if is_real:
            zeta = complex(zeta.real, 0.0)
        deflated = Q.div_exact(Poly([-zeta, 1.0]) ** m, tol=1e-7)
        t = _series_quotient(_sqrt_taylor(zeta, c, m), _taylor_shift(deflated, zeta, m))
        qj = Poly.zero()
        lin = Poly([zeta, -1.0])  # (zeta - w)
        for i in range(m):
            qj = qj + lin**i * (t[i] * (-1.0) ** (m - 1 - i))
        out.append((zeta, m, qj))
    return out


def _series_quotient(num, den):
    """Power-series division to the common length of the coefficient lists."""
    n = len(num)
    out = []
    for k in range(n):
        acc = num[k] - sum(out[i] * den[k - i] for i in range(k))
        out.append(acc / den[0])
    return out


def stieltjes_from_density(Q, c):
    """Closed-form transform of the density sqrt(4c-t**2)/Q(t).

    Returns the algebraic form (F + pi*sqrt(w**2-4c))/Q with
    F = pi*(sum_j (-1)^{m_j} q_j * Q/(w-zeta_j)^{m_j} - R_Q*Q).
    """
    c = check_variance(c)
    Q = Q if isinstance(Q, Poly) else Poly(Q)
    if Q.is_zero():
        raise ValueError("Q must be nonzero")
    F = (-1.0) * residue_polynomial(Q, c) * Q
    for zeta, m, qj in pole_terms(Q, c):
        deflated = Q.div_exact(Poly([-zeta, 1.0]) ** m, tol=1e-7)
        F = F + qj * deflated * ((-1.0) ** m)
    F = (F * math.pi).trim(1e-13)
    if Q.max_imag() == 0.0 and F.max_imag() < 1e-10 * max(
        1.0, float(np.max(np.abs(F.c)))
    ):
        F = Poly(F.c.real)
    return AlgebraicStieltjes(F, math.pi, Q, c)


def contour_residue_poly(Q, c, w, r_multiplier=10.0, nodes=2048):
    """Trapezoid contour integral for the residue polynomial value at w.

    Integrates sqrt(z**2-4c)/((z-w)Q(z))/(2 pi i) over a circle enclosing
    the support, every root of Q, and w; the periodic trapezoid rule is
    spectrally accurate here.
    """
    c = check_variance(c)
    Q = Q if isinstance(Q, Poly) else Poly(Q)
    max_root = 0.0
    if Q.degree >= 1:
        max_root = max(abs(z) for z in poly_roots(Q).locations())
    radius = r_multiplier * (1.0 + max(max_root, support_halfwidth(c), abs(complex(w))))
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    z = radius * np.exp(1j * theta)
    vals = np.array([cut_sqrt(zz, c) for zz in z]) / ((z - complex(w)) * Q(z))
    integrand = vals * 1j * z  # dz = i z dtheta
    return complex(integrand.mean() / (2j * np.pi) * 2.0 * np.pi)


def normalize_deg1(a, c):
    """Constant N = -a + sqrt(a**2-4c) for a degree-one denominator.

    The probability-normalized density is sqrt(4c-t**2)/(pi*N*(t-a));
    the pi sits outside N in this convention.
    """
    c = check_variance(c)
    a = float(a)
    if a * a < 4.0 * c:
        raise RootInsideCutError("degree-one root must satisfy a**2 >= 4c")
    return float((-a + cut_sqrt(a, c)).real)


def deg1_transform(a, c):
    """Mass-one transform with continuum density sqrt(4c-t**2)/(pi*N*(t-a))."""
    n = normalize_deg1(a, c)
    return stieltjes_from_density(Poly([-a * n * math.pi, n * math.pi]), c)


def normalize_deg2(a, b, c):
    """(N, sigma, tau) for a degree-two denominator N*(w-a)(w-b).

    sigma = (sqrt(b**2-4c) - sqrt(a**2-4c))/(b-a) and
    tau = (a*sqrt(b**2-4c) - b*sqrt(a**2-4c))/(b-a), both with the cut
    branch (real for real pairs and for conjugate pairs); mass one holds
    with N = pi*(sigma - 1).
    """
    c = check_variance(c)
    a, b = complex(a), complex(b)
    if abs(a - b) < 1e-9 * (1.0 + abs(a)):
        sa = cut_sqrt(a, c)
        sigma = a / sa
        tau = 4.0 * c / sa
    else:
        sa, sb = cut_sqrt(a, c), cut_sqrt(b, c)
        sigma = (sb - sa) / (b - a)
        tau = (a * sb - b * sa) / (b - a)
    if abs(sigma.imag) > 1e-9 * (1.0 + abs(sigma)):
        raise NotNormalizableError("sigma is not real for this root pair")
    n = math.pi * (sigma.real - 1.0)
    return n, sigma.real, tau.real


def deg2_transform(a, b, c):
    """Mass-one transform with density sqrt(4c-t**2)/(N*(t-a)(t-b))."""
    n, _, _ = normalize_deg2(a, b, c)
    Q = Poly.from_roots([a, b], leading=n)
    if Q.max_imag() < 1e-9 * max(1.0, float(np.max(np.abs(Q.c)))):
        Q = Poly(Q.c.real)
    return stieltjes_from_density(Q, c)


def normalize_general(Q, c):
    """Scale N making the density sqrt(4c-t**2)/(N*Q(t)) a probability.

    Read off as -s_1 from the series of the assembled transform of Q.  A
    negative N flips the sign of Q (as in the degree-one convention);
    vanishing or complex mass cannot be normalized.
    """
    c = check_variance(c)
    Q = Q if isinstance(Q, Poly) else Poly(Q)
    mass = -stieltjes_from_density(Q, c).series(2).tail_coeff(1)
    if abs(mass) < 1e-12 or abs(mass.imag) > 1e-9 * (1.0 + abs(mass)):
        raise NotNormalizableError(f"total mass {mass} cannot be rescaled to one")
    return float(mass.real)


@dataclass(frozen=True)
class MeasureMatch:
    """Outcome of matching one-shift solutions against a density transform."""

    matched: object  # OneShiftSolution
    sigma: float
    tau: float
    transform: AlgebraicStieltjes
    others_positive: tuple
    others_atoms: tuple  # per other solution: tuple of (location, weight)


def one_shift_transform(alpha, beta, c):
    """Algebraic transform of the one-step shift with the given parameters."""
    F0, kappa, G0 = one_shift_polys(alpha, beta, c)
    return AlgebraicStieltjes(F0, kappa, G0, c)


def one_shift_measure_match(a, b, c, tol=1e-8):
    """Identify the unique positive one-shift solution equal to the density
    transform with denominator roots (a, b).

    Among all positive recovered solutions exactly one matches the
    mass-one transform pointwise; its sigma agrees with the density's
    sigma constant.  The remaining positive solutions carry atoms in
    their decompositions (reported alongside).
    """
    c = check_variance(c)
    _, sigma_mu, tau_mu = normalize_deg2(a, b, c)
    target = deg2_transform(a, b, c)
    sols = one_shift_from_roots(a, b, c)
    report = classify_positivity(sols, c)
    positive = [
        s for s, (_, pos, _) in zip(sols.solutions, report.per_solution) if pos
    ]
    probes = [2j, 0.31 + 1.7j, -1.2 + 0.45j, 3.7 + 0.2j, -0.8 - 1.3j]
    matched, others = [], []
    for s in positive:
        cand = one_shift_transform(s.alpha, s.beta, c)
        err = max(abs(cand.eval(w) - target.eval(w)) for w in probes)
        (matched if err < tol else others).append(s)
    if len(matched) != 1:
        raise InconsistentError(
            f"expected exactly one pointwise match, found {len(matched)}"
        )
    if abs(complex(matched[0].sigma) - sigma_mu) > 1e-7 * (1.0 + abs(sigma_mu)):
        raise InconsistentError(
            f"matched sigma {matched[0].sigma} disagrees with constant {sigma_mu}"
        )
    atoms = []
    for s in others:
        spec = decompose_measure(one_shift_transform(s.alpha, s.beta, c))
        atoms.append(spec.atoms)
    return MeasureMatch(
        matched=matched[0],
        sigma=sigma_mu,
        tau=tau_mu,
        transform=target,
        others_positive=tuple(others),
        others_atoms=tuple(atoms),
    )


def atom_extension(Q, c, weights, signed=False):
    """Extend the density of Q by atoms at its real roots.

    Q fixes the continuum shape; the transform is
    (1 - sum(weights)) * S_norm + sum_j weights[j]/(site_j - w), with
    S_norm the mass-one transform of the Q-density and the atom sites the
    real simple roots of Q outside the support, in increasing order.
    Probability mode requires nonnegative weights summing below one.
    Returns (DensitySpec, AlgebraicStieltjes).
    """
    c = check_variance(c)
    Q = Q if isinstance(Q, Poly) else Poly(Q)
    h = support_halfwidth(c)
    edge = EDGE_TOL * (1.0 + h)
    sites = []
    if Q.degree >= 1:
        for z, m in poly_roots(Q).roots:
            if abs(z.imag) > 1e-9 * (1.0 + abs(z)):
                continue
            if abs(z.real) <= h + edge:
                continue
            if m != 1:
                raise BadAtomSiteError(f"atom site {z} is not a simple root")
            sites.append(float(z.real))
    sites.sort()
    weights = [float(p) for p in weights]
    if len(weights) != len(sites):
        raise BadAtomSiteError(
            f"{len(weights)} weights given for {len(sites)} real root sites"
        )
    total_atoms = sum(weights)
    scale = 1.0 - total_atoms
    if not signed:
        if any(p < 0 for p in weights):
            raise BadAtomSiteError("negative atom weight in probability mode")
        if scale <= 0.0:
            raise NotNormalizableError("atom weights absorb the whole mass")
    n = normalize_general(Q, c)
    Qn = Q * n
    base = stieltjes_from_density(Qn, c)
    F = base.F * scale
    for site, p in zip(sites, weights):
        F = F - Qn.div_exact(Poly([-site, 1.0]), tol=1e-7) * p
    transform = AlgebraicStieltjes(F.trim(1e-13), scale * math.pi, Qn, c)
    spec = DensitySpec(
        c=c,
        Q=None if scale == 0.0 else Qn * (1.0 / scale),
        atoms=tuple(zip(sites, weights)),
        signed=signed,
        total_mass=scale + total_atoms,
    )
    return spec, transform
