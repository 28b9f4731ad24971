"""Randomized self-verification suites behind the command-line `verify`.

Each suite exercises one pillar of the library against an independent
oracle (boundary limits, closed-form coefficient identities, adaptive
quadrature, truncated resolvents, combinatorial recurrences) and returns
a pass flag with a worst-case figure.
"""

import math

import numpy as np

from .branch import cut_sqrt, cut_sqrt_boundary, semicircle_root
from .inversion import (
    classify_positivity,
    one_shift_from_roots,
    two_shift_deg3,
    two_shift_even_quartic,
)
from .jacobi import JacobiParams, eval_cfrac, extract_jacobi, jacobi_matrix, resolvent00
from .perturb import apply_steps, n_shift_perturbation, semicircle_matrix
from .poly import Poly
from .residues import one_shift_measure_match, stieltjes_from_density
from .series import small_root_series
from .shifts import shift_chain, two_shift_closed
from .transforms import (
    AlgebraicStieltjes,
    decompose_measure,
    haagerup_transform,
    stieltjes_numeric,
)


def _sample_upper(rng, n, scale=2.0):
    re = rng.normal(scale=scale, size=n)
    im = rng.uniform(0.3, 2.5, size=n)
    return [complex(a, b) for a, b in zip(re, im)]


def check_branch(rng, tol=1e-3):
    """Boundary limits match +-i*sqrt(4c-x^2); exterior signs match."""
    worst = 0.0
    for c in (1.0, 2.3):
        h = 2.0 * c**0.5
        xs = np.linspace(-h, h, 202)[1:-1]
        for x in xs:
            up, lo = cut_sqrt_boundary(x, c)
            worst = max(worst, abs(cut_sqrt(x + 1e-7j, c) - up))
            worst = max(worst, abs(cut_sqrt(x - 1e-7j, c) - lo))
        sign_ok = cut_sqrt(h + 1.0, c).real > 0 and cut_sqrt(-h - 1.0, c).real < 0
        if not sign_ok:
            return False, "exterior sign table violated"
    return worst < tol, f"max boundary-limit error {worst:.3e}"


def check_jacobi_example(rng, tol=1e-8, n=50):
    """Closed-form b_0 and a_1 for (b - w + sqrt(w^2-4c))/(b(a-w))."""
    worst = 0.0
    done = 0
    while done < n:
        a = float(rng.normal(scale=3))
        b = float(rng.normal(scale=3))
        c = float(rng.uniform(0.2, 2.0))
        if abs(b) < 0.2 or abs(a * b - 2 * c) < 0.1:
            continue
        S = AlgebraicStieltjes(Poly([1.0, -1.0 / b]), 1.0 / b, Poly([a, -1.0]), c)
        J = extract_jacobi(S.series(8), 2)
        b0sq = 2.0 * c * (a * b - 2.0 * c) / b**2
        a1 = -(b * b - 2.0 * a * b + 4.0 * c) * c / ((a * b - 2.0 * c) * b)
        worst = max(
            worst,
            abs(J.bsq[0] - b0sq) / max(1.0, abs(b0sq)),
            abs(J.a[1] - a1) / max(1.0, abs(a1)),
        )
        done += 1
    return worst < tol, f"max relative error {worst:.3e}"


def check_haagerup(rng, tol=1e-9, n=20):
    """Closed form equals the depth-2 continued fraction with tail."""
    worst = 0.0
    for _ in range(n):
        r = float(rng.uniform(0.05, 0.95))
        lam = float(rng.uniform(0.3, 3.0)) * (1 if rng.random() < 0.5 else -1)
        if abs(abs(lam) - 1.0) < 0.05:
            continue
        c = r * (1 - r)
        H = haagerup_transform(r, lam)
        J = JacobiParams(
            a=[1 / lam, -r / lam],
            bsq=[r * (1 - lam**-2), r * (1 - r)],
            tail_c=c,
        )
        for w in _sample_upper(rng, 50):
            worst = max(worst, abs(H.eval(w) - eval_cfrac(J, w)))
    return worst < tol, f"max closed-vs-cfrac error {worst:.3e}"


def check_one_shift(rng, tol=1e-8, n=120):
    """Roundtrip recovery plus the positive-solution counts."""
    worst = 0.0
    from .poly import poly_roots
    from .inversion import one_shift_polys

    for _ in range(n):
        c = float(rng.uniform(0.3, 2.0))
        alpha = float(rng.normal(scale=2))
        beta = float(rng.uniform(0.1, 2.0))
        if abs(beta - 0.5) < 0.02:
            continue
        _, _, G0 = one_shift_polys(alpha, beta, c)
        roots = poly_roots(G0).expanded()
        sols = one_shift_from_roots(roots[0], roots[1], c)
        best = min(
            abs(s.alpha - alpha) + abs(s.beta - beta)
            for s in sols.valid_solutions()
        )
        worst = max(worst, best)
    counts_ok = True
    for _ in range(n // 3):
        c = float(rng.uniform(0.3, 1.5))
        h = 2 * c**0.5
        a = float(rng.uniform(h + 0.1, h + 3))
        b = float(rng.uniform(h + 0.1, h + 3))
        rep = classify_positivity(one_shift_from_roots(a, b, c), c)
        if abs(a - b) > 1e-6 and rep.counts[0] != 2:
            counts_ok = False
        rep = classify_positivity(one_shift_from_roots(-a, b, c), c)
        if abs(a - b) > 1e-6 and rep.counts[0] != 4:
            counts_ok = False
        z = complex(rng.normal(), rng.uniform(0.2, 2))
        rep = classify_positivity(one_shift_from_roots(z, z.conjugate(), c), c)
        if rep.counts[0] != 1:
            counts_ok = False
    return (worst < tol and counts_ok), f"max roundtrip error {worst:.3e}"


def check_two_shift(rng, tol=1e-8, n=40):
    """Family reconstructions place +-zeta among the denominator roots."""
    worst = 0.0
    for _ in range(n):
        c = float(rng.uniform(0.3, 1.2))
        zeta = float(rng.uniform(2.2 * c**0.5, 5.0))
        beta = float(rng.uniform(0.15, 1.2))
        if abs(beta - 0.5) < 0.02:
            beta += 0.05
        alpha = float(rng.normal(scale=1.5)) or 0.3
        lam = float(rng.uniform(0.4, 3.0))
        sols = []
        sols += two_shift_even_quartic(zeta, c, beta=beta, family="symmetric")
        sols += two_shift_even_quartic(zeta, c, alpha=alpha, family="beta-locked")
        sols += two_shift_even_quartic(zeta, c, beta=beta, family="alpha-locked")
        sols += two_shift_deg3(zeta, c, "lambda", lam=lam)
        sols += two_shift_deg3(zeta, c, "lambda-inverse", lam=lam)
        for s in sols:
            if not s.valid:
                continue
            G = s.transform(c).G
            scale = max(1.0, float(np.max(np.abs(G.c)))) * max(1.0, zeta) ** G.degree
            worst = max(worst, abs(G(zeta)) / scale, abs(G(-zeta)) / scale)
    return worst < tol, f"max |G(+-zeta)| {worst:.3e}"


def check_residue(rng, tol=1e-7):
    """Closed-form transforms agree with adaptive quadrature."""
    worst = 0.0
    corpus = []
    c = 1.0
    corpus.append(Poly([2 * math.pi]))
    corpus.append(Poly([4.0, 0.0, -1.0]))
    corpus.append(Poly([-3 * (-3 + 5**0.5) * math.pi, (-3 + 5**0.5) * math.pi]))
    n2, _, _ = _deg2_constants(-3.0, 3.0, c)
    corpus.append(Poly.from_roots([-3.0, 3.0], leading=n2))
    n3, _, _ = _deg2_constants(1 + 2j, 1 - 2j, c)
    corpus.append(Poly(Poly.from_roots([1 + 2j, 1 - 2j], leading=n3).c.real))
    corpus.append(Poly.from_roots([3.0, 3.0]))
    corpus.append(Poly(Poly.from_roots([2.5, -2.7, 1 + 2.2j, 1 - 2.2j]).c.real))
    for Q in corpus:
        S = stieltjes_from_density(Q, c)
        spec = decompose_measure(S)
        for w in _sample_upper(rng, 6):
            worst = max(worst, abs(S.eval(w) - stieltjes_numeric(spec, w)))
    return worst < tol, f"max closed-vs-quadrature error {worst:.3e}"


def _deg2_constants(a, b, c):
    from .residues import normalize_deg2

    return normalize_deg2(a, b, c)


def check_normalization(rng, tol=1e-7, n=25):
    """Probability transforms have s_1 = -1 and unit decomposed mass."""
    worst = 0.0
    for _ in range(n):
        c = float(rng.uniform(0.3, 1.5))
        h = 2 * c**0.5
        a, b = (
            float(rng.uniform(h + 0.1, h + 3)),
            -float(rng.uniform(h + 0.1, h + 3)),
        )
        match = one_shift_measure_match(a, b, c)
        worst = max(worst, abs(match.transform.mass() - 1.0))
        spec = decompose_measure(match.transform)
        worst = max(worst, abs(spec.total_mass - 1.0))
    return worst < tol, f"max mass error {worst:.3e}"


def check_perturbation(rng, tol=1e-4, n=10):
    """Resolvents of perturbed truncations converge to the closed forms."""
    worst = 0.0
    for _ in range(n):
        c = float(rng.uniform(0.4, 1.5))
        chain = [
            (float(rng.normal()), float(rng.uniform(0.2, 1.5)))
            for _ in range(int(rng.integers(1, 4)))
        ]
        S = shift_chain(c, chain)
        steps = n_shift_perturbation(c, chain)
        T = apply_steps(semicircle_matrix(c, 400), steps)
        worst = max(worst, abs(resolvent00(T, 2j) - S.eval(2j)))
    return worst < tol, f"max resolvent error at N=400: {worst:.3e}"


def check_moments(rng, tol=1e-10):
    """Small-root series moments match the Catalan recurrence."""
    cat = [1]
    for k in range(8):
        cat.append(sum(cat[i] * cat[k - i] for i in range(k + 1)))
    worst = 0.0
    for c in (1.0, 0.7):
        s = small_root_series(c, 15) * (1.0 / c)
        for k in range(7):
            worst = max(worst, abs(-s.tail_coeff(2 * k + 1) - c**k * cat[k]))
            if k >= 1:
                worst = max(worst, abs(s.tail_coeff(2 * k)))
    return worst < tol, f"max moment error {worst:.3e}"


SUITES = {
    "branch": check_branch,
    "jacobi-example": check_jacobi_example,
    "haagerup": check_haagerup,
    "one-shift": check_one_shift,
    "two-shift": check_two_shift,
    "residue": check_residue,
    "normalization": check_normalization,
    "perturbation": check_perturbation,
    "moments": check_moments,
}


def run_suites(names=None, seed=0):
    """Run the named suites (all by default) with a seeded generator."""
    names = list(SUITES) if names is None else list(names)
    results = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown verification suite {name!r}")
        rng = np.random.default_rng(seed)
        ok, detail = SUITES[name](rng)
        results.append((name, bool(ok), detail))
    return results
