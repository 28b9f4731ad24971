"""Recovery of shift parameters from denominator roots, and positivity.

One-step recovery: a quadratic denominator proportional to (w-a)(w-b)
pins sigma = (1-beta)/beta through the biquadratic

    (a-b)^2 sigma^4 - 2(a^2+b^2-8c) sigma^2 + (a+b)^2 = 0,

whose four branches are sigma = +-(sqrt(a^2-4c) +- sqrt(b^2-4c))/(a-b);
then alpha = (a+b)(sigma-1)/(2*sigma), beta = 1/(sigma+1).  Degenerate
configurations (a = b, a + b = 0, degree-1 denominators) have their own
closed forms.

Two-step recovery is implemented for the two families the algebra
supports: an even quartic denominator factoring through w^2 - zeta^2
(beta != 1/2) and a cubic denominator factoring through w^2 - zeta^2
(beta = 1/2), each with its exceptional branches.

A solution is positive exactly when alpha is real and beta > 0 (plus
delta > 0 for two-step solutions); positive solutions correspond to
probability measures.
"""

import cmath
from dataclasses import dataclass, field

import numpy as np

from .branch import check_variance, cut_sqrt
from .errors import (
    InconsistentError,
    InfeasibleError,
    NotAShiftError,
    WrongFamilyError,
)
from .poly import Poly
from .shifts import two_shift_closed

REAL_TOL = 1e-9
GATE = 1e-9  # near-degenerate routing threshold


def _is_real(z, tol=REAL_TOL):
    z = complex(z)
    return abs(z.imag) <= tol * (1.0 + abs(z))


def one_shift_polys(alpha, beta, c):
    """Numerator, root weight and denominator of the one-step shift."""
    alpha, beta = complex(alpha), complex(beta)
    F0 = Poly([alpha, -(1.0 - beta)])
    G0 = Poly(
        [
            alpha * alpha + 4.0 * c * beta * beta,
            -2.0 * alpha * (1.0 - beta),
            1.0 - 2.0 * beta,
        ]
    )
    return F0, beta, G0


@dataclass(frozen=True)
class OneShiftSolution:
    alpha: complex
    beta: complex
    sigma: complex
    branch: str
    valid: bool = True
    reason: str | None = None
    merged: int = 1  # number of coincident branches collapsed into this entry

    def polys(self, c):
        return one_shift_polys(self.alpha, self.beta, c)

    def multiplier(self):
        """Leading proportionality constant 1 - 2*beta of the denominator."""
        return 1.0 - 2.0 * complex(self.beta)


@dataclass(frozen=True)
class OneShiftSolutionSet:
    a: complex
    b: complex
    c: float
    solutions: tuple
    degenerate: bool = False

    def valid_solutions(self):
        return [s for s in self.solutions if s.valid]


def _sigma_of(beta):
    beta = complex(beta)
    return (1.0 - beta) / beta


def _verify_g0(sol, a, b, c):
    if not sol.valid:
        return sol
    _, _, G0 = sol.polys(c)
    target = Poly.from_roots([a, b], leading=sol.multiplier())
    scale = max(1.0, float(np.max(np.abs(target.c))))
    if float(np.max(np.abs((G0 - target).c))) > 1e-8 * scale:
        raise InconsistentError(
            f"recovered parameters {sol.alpha, sol.beta} do not reproduce the roots"
        )
    return sol


def one_shift_from_roots(a, b, c):
    """All shift parameters whose denominator is proportional to (w-a)(w-b).

    Dispatches on the root configuration: four sigma branches for a
    generic pair, the limit solutions for a + b = 0, and the double-root
    closed form for a = b (no valid shift when additionally a^2 = 4c,
    since beta degenerates to zero).
    """
    c = check_variance(c)
    a, b = complex(a), complex(b)
    sols = []
    degenerate = False

    if abs(a - b) < GATE * (1.0 + abs(a)):
        ra = cmath.sqrt(a * a - 4.0 * c)
        if abs(a * a - 4.0 * c) < GATE * (1.0 + abs(a) ** 2):
            sols.append(
                OneShiftSolution(
                    alpha=a,
                    beta=0.0,
                    sigma=cmath.inf,
                    branch="double:tangent",
                    valid=False,
                    reason="beta = 0 at a double root with a^2 = 4c (not a shift)",
                )
            )
            degenerate = True
        else:
            for sign, tag in ((1.0, "double:+"), (-1.0, "double:-")):
                alpha = a + sign * ra
                beta = (4.0 * c - a * a - sign * a * ra) / (4.0 * c)
                sols.append(
                    OneShiftSolution(
                        alpha=alpha, beta=beta, sigma=_sigma_of(beta), branch=tag
                    )
                )
    elif abs(a + b) < GATE * (1.0 + abs(a)):
        ra = cmath.sqrt(a * a - 4.0 * c)
        if abs(a * a - 4.0 * c) < GATE * (1.0 + abs(a) ** 2):
            sols.append(
                OneShiftSolution(
                    alpha=0.0, beta=1.0, sigma=0.0, branch="symmetric:tangent", merged=4
                )
            )
            degenerate = True
        else:
            for sign, tag in ((1.0, "+"), (-1.0, "-")):
                sols.append(
                    OneShiftSolution(
                        alpha=sign * ra,
                        beta=1.0,
                        sigma=0.0,
                        branch=f"symmetric:beta1:{tag}",
                    )
                )
            for sign, tag in ((1.0, "+"), (-1.0, "-")):
                beta = a / (a + sign * ra)
                sols.append(
                    OneShiftSolution(
                        alpha=0.0,
                        beta=beta,
                        sigma=_sigma_of(beta),
                        branch=f"symmetric:alpha0:{tag}",
                    )
                )
    else:
        ra = cmath.sqrt(a * a - 4.0 * c)
        rb = cmath.sqrt(b * b - 4.0 * c)
        for s1, s2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            sigma = s1 * (ra + s2 * rb) / (a - b)
            tag = f"({'+' if s1 > 0 else '-'},{'+' if s2 > 0 else '-'})"
            if abs(sigma + 1.0) < 1e-12:
                sols.append(
                    OneShiftSolution(
                        alpha=cmath.nan,
                        beta=cmath.inf,
                        sigma=sigma,
                        branch=tag,
                        valid=False,
                        reason="sigma = -1 leaves beta undefined",
                    )
                )
                continue
            if abs(sigma - 1.0) < 1e-12:
                sols.append(
                    OneShiftSolution(
                        alpha=cmath.nan,
                        beta=0.5,
                        sigma=sigma,
                        branch=tag,
                        valid=False,
                        reason="sigma = 1 forces beta = 1/2 (degree-1 denominator)",
                    )
                )
                continue
            beta = 1.0 / (sigma + 1.0)
            alpha = (a + b) * (sigma - 1.0) / (2.0 * sigma)
            sols.append(
                OneShiftSolution(alpha=alpha, beta=beta, sigma=sigma, branch=tag)
            )
        # merge coincident branches (degenerate discriminants)
        merged = []
        for s in sols:
            hit = None
            for i, t in enumerate(merged):
                if (
                    s.valid
                    and t.valid
                    and abs(s.sigma - t.sigma) < 1e-12 * (1.0 + abs(s.sigma))
                ):
                    hit = i
                    break
            if hit is None:
                merged.append(s)
            else:
                t = merged[hit]
                merged[hit] = OneShiftSolution(
                    alpha=t.alpha,
                    beta=t.beta,
                    sigma=t.sigma,
                    branch=t.branch + "|" + s.branch,
                    merged=t.merged + s.merged,
                )
                degenerate = True
        sols = merged

    sols = [_verify_g0(s, a, b, c) for s in sols]
    return OneShiftSolutionSet(
        a=a, b=b, c=c, solutions=tuple(sols), degenerate=degenerate
    )


def one_shift_deg1(root, c):
    """Both alpha with alpha + c/alpha equal to the given denominator root.

    The two candidates multiply to c (the exchange alpha <-> c/alpha);
    beta is 1/2 for degree-1 denominators.
    """
    c = check_variance(c)
    root = complex(root)
    disc = cmath.sqrt(root * root - 4.0 * c)
    return ((root + disc) / 2.0, (root - disc) / 2.0)


@dataclass(frozen=True)
class TwoShiftSolution:
    alpha: complex
    beta: complex
    gamma: complex
    delta: complex
    family: str
    zeta: complex
    free_param: tuple | None = None
    r: complex | None = None
    valid: bool = True
    reason: str | None = None

    @property
    def Delta(self):
        return -complex(self.delta) + complex(self.alpha) * complex(self.gamma)

    def transform(self, c):
        return two_shift_closed(self.alpha, self.beta, self.gamma, self.delta, c)


def _check_zeta_roots(sol, c):
    if not sol.valid:
        return sol
    G = sol.transform(c).G
    scale = max(1.0, float(np.max(np.abs(G.c)))) * max(1.0, abs(sol.zeta)) ** max(
        G.degree, 0
    )
    if abs(G(sol.zeta)) > 1e-8 * scale or abs(G(-sol.zeta)) > 1e-8 * scale:
        raise InconsistentError(
            f"family {sol.family}: rebuilt denominator does not vanish at "
            f"+-{sol.zeta}"
        )
    return sol


def _flag_delta(sol):
    if sol.valid and abs(complex(sol.delta)) < 1e-12:
        return TwoShiftSolution(
            alpha=sol.alpha,
            beta=sol.beta,
            gamma=sol.gamma,
            delta=sol.delta,
            family=sol.family,
            zeta=sol.zeta,
            free_param=sol.free_param,
            r=sol.r,
            valid=False,
            reason="delta = 0 does not constitute a shift",
        )
    return sol


def two_shift_even_quartic(zeta, c, beta=None, alpha=None, family=None):
    """Parameter families for an even quartic denominator vanishing at +-zeta.

    Three families exist (beta != 1/2 throughout):

      'symmetric'    alpha = gamma = 0, beta free:
                     Delta = -(1-beta)*zeta^2 +- beta*zeta*sqrt(zeta^2-4c).
      'beta-locked'  alpha free, beta = -(zeta^2-4c +- zeta*sqrt(zeta^2-4c))/4c,
                     gamma = -alpha(1-beta)/(1-2beta), Delta = -4c(1-beta).
      'alpha-locked' beta free, alpha = +-sqrt(zeta^2-4c)(1-2beta)/beta,
                     gamma = -+sqrt(zeta^2-4c)(1-beta)/beta, Delta = -4c(1-beta).

    Families whose free parameter was supplied are emitted; `family`
    restricts to one of them.
    """
    c = check_variance(c)
    zeta = complex(zeta)
    sq = cmath.sqrt(zeta * zeta - 4.0 * c)
    out = []
    wanted = (
        ("symmetric", "beta-locked", "alpha-locked") if family is None else (family,)
    )
    for fam in wanted:
        if fam not in ("symmetric", "beta-locked", "alpha-locked"):
            raise WrongFamilyError(f"unknown even-quartic family {fam!r}")

    if "symmetric" in wanted and beta is not None:
        b = complex(beta)
        if abs(b - 0.5) < 1e-12:
            raise WrongFamilyError("even quartic requires beta != 1/2")
        for sign in (1.0, -1.0):
            Delta = -(1.0 - b) * zeta * zeta + sign * b * zeta * sq
            delta = -Delta  # alpha*gamma = 0
            out.append(
                TwoShiftSolution(
                    alpha=0.0,
                    beta=b,
                    gamma=0.0,
                    delta=delta,
                    family="symmetric",
                    zeta=zeta,
                    free_param=("beta", b),
                )
            )
    if "beta-locked" in wanted and alpha is not None:
        al = complex(alpha)
        if al == 0:
            raise WrongFamilyError("beta-locked family needs alpha != 0")
        for sign in (1.0, -1.0):
            b = -(zeta * zeta - 4.0 * c + sign * zeta * sq) / (4.0 * c)
            if abs(b) < 1e-12 or abs(b - 0.5) < 1e-12:
                out.append(
                    TwoShiftSolution(
                        alpha=al,
                        beta=b,
                        gamma=cmath.nan,
                        delta=cmath.nan,
                        family="beta-locked",
                        zeta=zeta,
                        free_param=("alpha", al),
                        valid=False,
                        reason="locked beta degenerates (0 or 1/2)",
                    )
                )
                continue
            Delta = -4.0 * c * (1.0 - b)
            gm = -al * (1.0 - b) / (1.0 - 2.0 * b)
            delta = -Delta + al * gm
            out.append(
                TwoShiftSolution(
                    alpha=al,
                    beta=b,
                    gamma=gm,
                    delta=delta,
                    family="beta-locked",
                    zeta=zeta,
                    free_param=("alpha", al),
                )
            )
    if "alpha-locked" in wanted and beta is not None:
        b = complex(beta)
        if abs(b - 0.5) < 1e-12:
            raise WrongFamilyError("even quartic requires beta != 1/2")
        for sign in (1.0, -1.0):
            al = sign * sq * (1.0 - 2.0 * b) / b
            gm = -sign * sq * (1.0 - b) / b
            Delta = -4.0 * c * (1.0 - b)
            delta = -Delta + al * gm
            out.append(
                TwoShiftSolution(
                    alpha=al,
                    beta=b,
                    gamma=gm,
                    delta=delta,
                    family="alpha-locked",
                    zeta=zeta,
                    free_param=("beta", b),
                )
            )
    out = [_flag_delta(s) for s in out]
    return [_check_zeta_roots(s, c) for s in out]


def _r_branches(zeta, c):
    """Both r with c = zeta^2 r (1 - r)."""
    zeta = complex(zeta)
    if zeta == 0:
        raise WrongFamilyError("zeta = 0 has no r parameterization")
    disc = cmath.sqrt(1.0 - 4.0 * c / (zeta * zeta))
    return ((1.0 + disc) / 2.0, (1.0 - disc) / 2.0)


def two_shift_deg3(zeta, c, family, lam=None, alpha=None, gamma=None):
    """Parameter families for a cubic denominator vanishing at +-zeta.

    beta = 1/2 throughout.  Families:

      'gamma0'          alpha = +-sqrt(zeta^2-4c)/2, gamma = 0, delta = zeta^2/2.
      'tangent'         zeta^2 = 4c: alpha free, gamma = -2*alpha,
                        delta = 2(c - alpha^2).
      'zeta0'           zeta = 0: gamma free, (alpha + gamma/2)^2 = -c,
                        delta = -gamma^2/2.
      'lambda'          gamma = lam free; with c = zeta^2 r(1-r):
                        alpha = -lam/2 + zeta(r-1/2),
                        delta = (zeta^2 - lam^2)/2.
      'lambda-inverse'  gamma = zeta^2/lam:
                        alpha = -zeta^2 r/lam, delta = r zeta^2 (lam^2-zeta^2)/lam^2.

    The lambda families emit one solution per r branch.
    """
    c = check_variance(c)
    zeta = complex(zeta)
    out = []

    if family == "gamma0":
        if abs(zeta) < 1e-12:
            raise NotAShiftError("gamma0 family needs zeta != 0 for delta != 0")
        sq = cmath.sqrt(zeta * zeta - 4.0 * c)
        for sign in (1.0, -1.0):
            out.append(
                TwoShiftSolution(
                    alpha=sign * sq / 2.0,
                    beta=0.5,
                    gamma=0.0,
                    delta=zeta * zeta / 2.0,
                    family="gamma0",
                    zeta=zeta,
                )
            )
    elif family == "tangent":
        if abs(zeta * zeta - 4.0 * c) > 1e-9 * (1.0 + abs(zeta) ** 2):
            raise WrongFamilyError("tangent family requires zeta^2 = 4c")
        if alpha is None or complex(alpha) == 0:
            raise WrongFamilyError("tangent family needs a nonzero free alpha")
        al = complex(alpha)
        out.append(
            TwoShiftSolution(
                alpha=al,
                beta=0.5,
                gamma=-2.0 * al,
                delta=2.0 * (c - al * al),
                family="tangent",
                zeta=zeta,
                free_param=("alpha", al),
            )
        )
    elif family == "zeta0":
        if abs(zeta) > 1e-12:
            raise WrongFamilyError("zeta0 family requires zeta = 0")
        if gamma is None or complex(gamma) == 0:
            raise WrongFamilyError("zeta0 family needs a nonzero free gamma")
        gm = complex(gamma)
        root = 1j * cmath.sqrt(c)
        for sign in (1.0, -1.0):
            out.append(
                TwoShiftSolution(
                    alpha=-gm / 2.0 + sign * root,
                    beta=0.5,
                    gamma=gm,
                    delta=-gm * gm / 2.0,
                    family="zeta0",
                    zeta=0.0,
                    free_param=("gamma", gm),
                )
            )
    elif family == "lambda":
        if lam is None:
            raise WrongFamilyError("lambda family needs the free parameter lam")
        lv = complex(lam)
        for r in _r_branches(zeta, c):
            e = zeta * (r - 0.5)
            out.append(
                TwoShiftSolution(
                    alpha=-lv / 2.0 + e,
                    beta=0.5,
                    gamma=lv,
                    delta=(zeta * zeta - lv * lv) / 2.0,
                    family="lambda",
                    zeta=zeta,
                    free_param=("lam", lv),
                    r=r,
                )
            )
    elif family == "lambda-inverse":
        if lam is None or complex(lam) == 0:
            raise WrongFamilyError(
                "lambda-inverse family needs a nonzero free parameter lam"
            )
        lv = complex(lam)
        for r in _r_branches(zeta, c):
            out.append(
                TwoShiftSolution(
                    alpha=-zeta * zeta * r / lv,
                    beta=0.5,
                    gamma=zeta * zeta / lv,
                    delta=r * zeta * zeta * (lv * lv - zeta * zeta) / (lv * lv),
                    family="lambda-inverse",
                    zeta=zeta,
                    free_param=("lam", lv),
                    r=r,
                )
            )
    else:
        raise WrongFamilyError(f"unknown cubic family {family!r}")

    out = [_flag_delta(s) for s in out]
    return [_check_zeta_roots(s, c) for s in out]


def cubic_remaining_root(sol, c):
    """Third root of the cubic denominator, alpha + gamma + (c + Delta)/alpha.

    The cubic factors as -alpha*(w - R)(w^2 - zeta^2) with this R; the
    value is verified against the rebuilt denominator for valid
    solutions.
    """
    al, gm = complex(sol.alpha), complex(sol.gamma)
    return al + gm + (c + sol.Delta) / al


def remaining_root_to_lambda(root, zeta, c, family, r=None):
    """Free parameters lam whose family member has the given third root.

    For 'lambda-inverse' the third denominator root is
    r*lam + zeta^2(1-r)/lam, giving the quadratic
    r*lam^2 - root*lam + zeta^2(1-r) = 0; the 'lambda' family leads to
    lam = 2e + root +- sqrt(root^2 - 4c) with e = zeta(r - 1/2).
    Candidates are returned as (lam, r) pairs for each r branch (or the
    supplied r), deduplicated, and each verified to reproduce the root.
    Candidates with lam = +-zeta solve the algebra but degenerate to
    delta = 0 when instantiated as shifts.
    """
    c = check_variance(c)
    root, zeta = complex(root), complex(zeta)
    branches = (complex(r),) if r is not None else _r_branches(zeta, c)
    candidates = []
    for rv in branches:
        if family == "lambda-inverse":
            if abs(rv) < 1e-14:
                continue
            disc = cmath.sqrt(root * root - 4.0 * rv * zeta * zeta * (1.0 - rv))
            lams = ((root + disc) / (2.0 * rv), (root - disc) / (2.0 * rv))
        elif family == "lambda":
            e = zeta * (rv - 0.5)
            disc = cmath.sqrt(root * root - 4.0 * c)
            lams = (2.0 * e + root + disc, 2.0 * e + root - disc)
        else:
            raise WrongFamilyError(f"family {family!r} has no lambda parameter")
        for lv in lams:
            # double-root (zero-discriminant) candidates coincide only to
            # sqrt(eps); merge at the same scale as root clustering
            if any(
                abs(lv - l0) < 1e-7 * (1.0 + abs(lv)) and abs(rv - r0) < 1e-7
                for l0, r0 in candidates
            ):
                continue
            candidates.append((lv, rv))

    verified = []
    for lv, rv in candidates:
        if abs(lv) < 1e-14:
            continue
        for s in two_shift_deg3(zeta, c, family, lam=lv):
            if s.r is None or abs(s.r - rv) > 1e-9 * (1.0 + abs(rv)):
                continue
            got = cubic_remaining_root(s, c)
            if abs(got - root) <= 1e-9 * (1.0 + abs(root)):
                verified.append((lv, rv))
            break
    if not verified:
        raise InfeasibleError(
            f"no lambda reproduces the root {root} in family {family!r}"
        )
    return verified


@dataclass(frozen=True)
class PositivityReport:
    per_solution: tuple  # of (is_real, is_positive, reasons)
    counts: tuple  # (positive, real, total)
    expected_positive: int | None = field(default=None, compare=False)

    @property
    def n_positive(self):
        return self.counts[0]


def _classify_one(sol):
    reasons = []
    if not sol.valid:
        return (False, False, (sol.reason or "invalid branch",))
    a_real = _is_real(sol.alpha)
    b_real = _is_real(sol.beta)
    if not a_real:
        reasons.append("alpha not real")
    if not b_real:
        reasons.append("beta not real")
    is_real = a_real and b_real
    is_positive = is_real and complex(sol.beta).real > 0.0
    if is_real and not is_positive:
        reasons.append("beta <= 0")
    return (is_real, is_positive, tuple(reasons))


def _classify_two(sol):
    reasons = []
    if not sol.valid:
        return (False, False, (sol.reason or "invalid branch",))
    flags = {
        "alpha": _is_real(sol.alpha),
        "beta": _is_real(sol.beta),
        "gamma": _is_real(sol.gamma),
        "delta": _is_real(sol.delta),
    }
    for name, ok in flags.items():
        if not ok:
            reasons.append(f"{name} not real")
    is_real = all(flags.values())
    is_positive = (
        is_real and complex(sol.beta).real > 0.0 and complex(sol.delta).real > 0.0
    )
    if is_real and not is_positive:
        if complex(sol.beta).real <= 0.0:
            reasons.append("beta <= 0")
        if complex(sol.delta).real <= 0.0:
            reasons.append("delta <= 0")
    return (is_real, is_positive, tuple(reasons))


def expected_positive_count(a, b, c):
    """Positive-solution count predicted by the root configuration.

    Real root pairs with both squares >= 4c: two positive solutions when
    a*b > 0, four when a*b < 0.  Conjugate non-real pairs: exactly one.
    Returns None where no count is pinned.
    """
    a, b = complex(a), complex(b)
    if _is_real(a) and _is_real(b):
        ar, br = a.real, b.real
        if abs(ar - br) < GATE * (1.0 + abs(ar)):
            return None
        if ar * ar >= 4.0 * c and br * br >= 4.0 * c and abs(ar * br) > 0:
            return 2 if ar * br > 0 else 4
        return None
    if abs(a - b.conjugate()) < REAL_TOL * (1.0 + abs(a)):
        return 1
    return None


def classify_positivity(solutions, c):
    """Reality and positivity flags for recovered solutions.

    Accepts a OneShiftSolutionSet, a sequence of OneShiftSolution, or a
    sequence of TwoShiftSolution.  A one-step solution is positive iff
    alpha is real and beta > 0 (equivalently sigma > -1); two-step
    solutions additionally need delta > 0.
    """
    check_variance(c)
    expected = None
    if isinstance(solutions, OneShiftSolutionSet):
        expected = expected_positive_count(solutions.a, solutions.b, c)
        items = list(solutions.solutions)
    else:
        items = list(solutions)
    per = []
    for sol in items:
        if isinstance(sol, TwoShiftSolution):
            per.append(_classify_two(sol))
        else:
            per.append(_classify_one(sol))
    n_pos = sum(1 for _, p, _ in per if p)
    n_real = sum(1 for r, _, _ in per if r)
    return PositivityReport(
        per_solution=tuple(per),
        counts=(n_pos, n_real, len(per)),
        expected_positive=expected,
    )


def symmetric_positive_delta_count(zeta, c, beta):
    """Predicted number of positive-delta sign choices in the symmetric family.

    For a real zeta = s (s^2 >= 4c) the condition is
    (1-beta)/beta > +-sqrt(s^2-4c)/s; for purely imaginary zeta = i*s
    exactly one sign can be positive and it is iff
    beta > (s*sqrt(s^2+4c) - s^2)/(4c).
    """
    check_variance(c)
    zeta = complex(zeta)
    beta = float(beta)
    sig = (1.0 - beta) / beta
    if _is_real(zeta):
        s = abs(zeta.real)
        if s * s < 4.0 * c:
            return 0
        t = (s * s - 4.0 * c) ** 0.5 / s
        if sig > t:
            return 2
        if sig > -t:
            return 1
        return 0
    if abs(zeta.real) < REAL_TOL * (1.0 + abs(zeta)):
        s = abs(zeta.imag)
        return 1 if beta > (s * (s * s + 4.0 * c) ** 0.5 - s * s) / (4.0 * c) else 0
    return 0


def beta_locked_alpha_interval(zeta, c):
    """Open alpha interval giving delta > 0 in the beta-locked family (real zeta).

    For zeta = s > 2*sqrt(c) the positive-beta branch has delta > 0 iff
    -s + sqrt(s^2-4c) < alpha < s - sqrt(s^2-4c); for purely imaginary
    zeta every nonzero real alpha works (returns None).
    """
    check_variance(c)
    zeta = complex(zeta)
    if _is_real(zeta):
        s = abs(zeta.real)
        if s * s <= 4.0 * c:
            raise WrongFamilyError("real zeta needs s > 2*sqrt(c) for a real beta")
        edge = s - (s * s - 4.0 * c) ** 0.5
        return (-edge, edge)
    return None


def alpha_locked_beta_interval(zeta, c):
    """Open beta interval giving positivity in the alpha-locked family.

    For real zeta = s with s^2 >= 4c this is
    (sqrt(s^2-4c)/(s + sqrt(s^2-4c)), 1).
    """
    check_variance(c)
    s = abs(complex(zeta).real)
    if s * s < 4.0 * c:
        raise WrongFamilyError("alpha-locked positivity range needs real zeta^2 >= 4c")
    q = (s * s - 4.0 * c) ** 0.5
    return (q / (s + q), 1.0)


def sigma_from_cut_branch(a, b, c):
    """sigma branches computed with the cut square root (for cross-checks)."""
    a, b = complex(a), complex(b)
    ra, rb = cut_sqrt(a, c), cut_sqrt(b, c)
    return tuple(s1 * (ra + s2 * rb) / (a - b) for s1 in (1, -1) for s2 in (1, -1))
