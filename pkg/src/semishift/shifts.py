"""Shift chains on algebraic Stieltjes functions.

A shift step maps S to 1/(alpha - w - beta*S).  Rationalizing with the
square-root conjugate keeps the result in the (F + kappa*sqrt)/G shape:
with P = (alpha - w)G - beta*F,

    F' = P,   kappa' = beta*kappa,   G' = (P^2 - (beta*kappa)^2 (w^2-4c)) / G,

where the division is exact because F^2 - kappa^2 (w^2-4c) is divisible
by G for every transform built from shift chains (the quotient is the
previous denominator).
"""

from dataclasses import dataclass

from .branch import check_variance
from .errors import DegenerateError
from .poly import Poly
from .transforms import AlgebraicStieltjes

TRIM_TOL = 1e-12


@dataclass(frozen=True)
class ShiftStep:
    alpha: complex
    beta: complex

    def __post_init__(self):
        if complex(self.beta) == 0:
            raise DegenerateError("shift weight beta must be nonzero")


def shift_once(S, step):
    """One shift step applied to an algebraic transform."""
    alpha, beta = complex(step.alpha), complex(step.beta)
    F, kappa, G = S.F, S.kappa, S.G
    w24c = Poly([-4.0 * S.c, 0.0, 1.0])
    P = Poly([alpha, -1.0]) * G - F * beta
    kappa_new = beta * kappa
    den = P * P - w24c * (kappa_new * kappa_new)
    try:
        G_new = den.div_exact(G, tol=1e-8)
    except ValueError:
        raise DegenerateError(
            "denominator does not divide the rationalized shift; "
            "input transform is not norm-compatible"
        ) from None
    scale = 1e-12
    return AlgebraicStieltjes(P.trim(scale), kappa_new, G_new.trim(scale), S.c)


def shift_chain(c, steps):
    """Successive shifts of the base function 2*(small root)."""
    S = AlgebraicStieltjes.shift_base(c)
    for step in steps:
        step = step if isinstance(step, ShiftStep) else ShiftStep(*step)
        S = shift_once(S, step)
    return S


@dataclass(frozen=True)
class MobiusMat:
    """Polynomial matrix (A B; C D) with constant determinant AD - BC."""

    A: Poly
    B: Poly
    C: Poly
    D: Poly
    det_value: complex

    def determinant(self):
        return self.A * self.D - self.B * self.C

    @classmethod
    def identity(cls):
        return cls(Poly.one(), Poly.zero(), Poly.zero(), Poly.one(), 1.0)


def _step_matrix(alpha, beta):
    return MobiusMat(
        A=Poly.zero(),
        B=Poly.one(),
        C=Poly([-beta]),
        D=Poly([alpha, -1.0]),
        det_value=complex(beta),
    )


def mobius_chain(steps):
    """Product of step matrices, newest on the left; empty chain is identity.

    The determinant is the running product of the step weights, and the
    degree pattern for n >= 2 steps is (n-2, n-1; n-1, n).
    """
    M = MobiusMat.identity()
    for alpha, beta in steps:
        alpha, beta = complex(alpha), complex(beta)
        if beta == 0:
            raise DegenerateError("shift weight beta must be nonzero")
        S = _step_matrix(alpha, beta)
        M = MobiusMat(
            A=S.A * M.A + S.B * M.C,
            B=S.A * M.B + S.B * M.D,
            C=S.C * M.A + S.D * M.C,
            D=S.C * M.B + S.D * M.D,
            det_value=S.det_value * M.det_value,
        )
    return M


def assemble_FG(M, final, c):
    """Closed form for the chain encoded by M applied after the step `final`.

    With the matrix entries A..D and the final step (alpha, beta):

        F = (A+alpha*B)(C+alpha*D) + 4c*beta^2*BD
            - (1-beta)w(AD + BC + 2*alpha*BD) + (1-2*beta)w^2*BD,
        G = (C+alpha*D)^2 + 4c*beta^2*D^2
            - 2(1-beta)w(C+alpha*D)D + (1-2*beta)w^2*D^2,

    and the root-term weight is beta times the chain determinant.
    """
    c = check_variance(c)
    final = final if isinstance(final, ShiftStep) else ShiftStep(*final)
    alpha, beta = complex(final.alpha), complex(final.beta)
    A, B, C, D = M.A, M.B, M.C, M.D
    w = Poly.x()
    w2 = w * w
    AaB = A + B * alpha
    CaD = C + D * alpha
    BD = B * D
    F = (
        AaB * CaD
        + BD * (4.0 * c * beta * beta)
        - w * ((A * D + B * C + BD * (2.0 * alpha)) * (1.0 - beta))
        + w2 * (BD * (1.0 - 2.0 * beta))
    )
    G = (
        CaD * CaD
        + (D * D) * (4.0 * c * beta * beta)
        - w * (CaD * D * (2.0 * (1.0 - beta)))
        + w2 * (D * D * (1.0 - 2.0 * beta))
    )
    kappa = beta * M.det_value
    return AlgebraicStieltjes(F.trim(TRIM_TOL), kappa, G.trim(TRIM_TOL), c)


def two_shift_closed(alpha, beta, gamma, delta, c):
    """Expanded closed form of the two-step chain (alpha, beta) then (gamma, delta).

    Uses the explicit quartic/cubic coefficients in Delta = -delta +
    alpha*gamma; for beta = 1/2 the leading terms vanish and the
    denominator degree drops to three.
    """
    c = check_variance(c)
    alpha, beta = complex(alpha), complex(beta)
    gamma, delta = complex(gamma), complex(delta)
    if beta == 0 or delta == 0:
        raise DegenerateError("shift weights must be nonzero")
    Delta = -delta + alpha * gamma
    b2 = 4.0 * c * beta * beta
    F = Poly(
        [
            alpha * alpha * gamma - alpha * delta + b2 * gamma,
            -(alpha * alpha + b2 + (1.0 - beta) * (-delta + 2.0 * alpha * gamma)),
            2.0 * alpha * (1.0 - beta) + (1.0 - 2.0 * beta) * gamma,
            -(1.0 - 2.0 * beta),
        ]
    )
    G = Poly(
        [
            Delta * Delta + b2 * gamma * gamma,
            -2.0 * (b2 * gamma + Delta * (alpha + (1.0 - beta) * gamma)),
            alpha * alpha
            + b2
            + (1.0 - 2.0 * beta) * gamma * gamma
            + 2.0 * (1.0 - beta) * (Delta + alpha * gamma),
            -2.0 * (alpha * (1.0 - beta) + (1.0 - 2.0 * beta) * gamma),
            1.0 - 2.0 * beta,
        ]
    )
    return AlgebraicStieltjes(F, beta * delta, G, c)
