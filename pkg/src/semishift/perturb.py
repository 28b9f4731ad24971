"""Finite-rank perturbations of truncated Jacobi matrices.

The level-k perturbation subtracts p*(e_k (x) e_k) + q*(J e_k (x) e_k)
+ q*(e_k (x) J e_k) from a Jacobi matrix J, which on tridiagonal data
acts as

    a_k -> (1 - 2q) a_k - p,
    b_{k-1} -> (1 - q) b_{k-1},      b_k -> (1 - q) b_k,

leaving every other entry untouched.  Shift chains of the semicircle
law arise as compositions of these maps with explicit (p, q): level k
applied after lower levels, with q chosen so the off-diagonal products
reproduce the chain's continued-fraction data.
"""

import cmath
from dataclasses import dataclass

import numpy as np

from .branch import check_variance
from .errors import NotPositiveError
from .jacobi import JacobiParams, TriJacobi, jacobi_matrix


@dataclass(frozen=True)
class PerturbStep:
    k: int
    p: float
    q: float

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("perturbation level must be nonnegative")


def phi_k(T, step):
    """Apply one finite-rank perturbation to a tridiagonal matrix.

    Touches exactly a_k, b_{k-1} and b_k; all other entries are returned
    bit-identical.
    """
    k, p, q = step.k, float(step.p), float(step.q)
    n = T.n
    if k > n - 1:
        raise ValueError(f"level {k} out of range for dimension {n}")
    diag = list(T.diag)
    off = list(T.offdiag)
    diag[k] = (1.0 - 2.0 * q) * diag[k] - p
    if k >= 1:
        off[k - 1] = (1.0 - q) * off[k - 1]
    if k <= n - 2:
        off[k] = (1.0 - q) * off[k]
    return TriJacobi(diag=tuple(diag), offdiag=tuple(off))


def phi_k_dense(T, step):
    """Same perturbation via the explicit rank-<=3 matrix subtraction."""
    m = T.dense()
    n = T.n
    e = np.zeros(n)
    e[step.k] = 1.0
    je = m @ e
    return (
        m
        - float(step.p) * np.outer(e, e)
        - float(step.q) * np.outer(je, e)
        - float(step.q) * np.outer(e, je)
    )


def one_shift_perturbation(c, alpha, beta):
    """Level-0 parameters (p, q) = (-alpha, 1 - sqrt(2*beta)) realizing the
    one-step shift of the semicircle law of variance c.

    The perturbed matrix has Jacobi data (alpha, 2*beta*c) on top of the
    semicircular tail; beta must be positive for a real off-diagonal.
    """
    check_variance(c)
    beta = float(beta)
    if beta <= 0.0:
        raise NotPositiveError("one-step shift needs beta > 0")
    return PerturbStep(k=0, p=-float(alpha), q=1.0 - (2.0 * beta) ** 0.5)


def two_shift_perturbation(c, alpha, beta, gamma, delta):
    """Level-0 and level-1 parameters realizing the two-step shift.

    (p0, q0) = (-gamma, 1 - sqrt(delta/(2*beta*c))),
    (p1, q1) = (-alpha, 1 - sqrt(2*beta)); applying level 0 then level 1
    yields Jacobi data (gamma, delta; alpha, 2*beta*c) over the
    semicircular tail.
    """
    c = check_variance(c)
    beta, delta = float(beta), float(delta)
    if beta <= 0.0 or delta <= 0.0:
        raise NotPositiveError("two-step shift needs beta > 0 and delta > 0")
    q0 = 1.0 - (delta / (2.0 * beta * c)) ** 0.5
    q1 = 1.0 - (2.0 * beta) ** 0.5
    return (
        PerturbStep(k=0, p=-float(gamma), q=q0),
        PerturbStep(k=1, p=-float(alpha), q=q1),
    )


def n_shift_perturbation(c, steps):
    """Perturbation sequence whose composition realizes an n-step shift chain.

    `steps` lists the chain (alpha_1, beta_1), ..., (alpha_n, beta_n)
    applied successively to the base function.  The resulting Jacobi
    data is (alpha_n, beta_n; ...; alpha_1, 2*beta_1*c; tail), and the
    level-k parameters solve

        p_k = -alpha_{n-k},
        (1 - q_{n-1}) = sqrt(2*beta_1),
        (1 - q_k) = sqrt(t_k / c) / (1 - q_{k+1}),

    with t_k the target squared off-diagonal at level k.  Levels are
    applied in increasing order.
    """
    c = check_variance(c)
    chain = [(float(a), float(b)) for a, b in steps]
    n = len(chain)
    if n == 0:
        return ()
    if any(b <= 0.0 for _, b in chain):
        raise NotPositiveError("all chain weights must be positive")
    # target Jacobi data: level k holds alpha_{n-k}; deepest level holds
    # the base coupling 2*beta_1*c, upper levels the following weights
    targets = []
    for k in range(n):
        t_k = 2.0 * chain[0][1] * c if k == n - 1 else chain[n - 1 - k][1]
        targets.append(t_k)
    u = [0.0] * n  # u_k = 1 - q_k
    u[n - 1] = (2.0 * chain[0][1]) ** 0.5
    for k in range(n - 2, -1, -1):
        u[k] = (targets[k] / c) ** 0.5 / u[k + 1]
    return tuple(
        PerturbStep(k=k, p=-chain[n - 1 - k][0], q=1.0 - u[k]) for k in range(n)
    )


def chain_jacobi_params(c, steps, tail=True):
    """Continued-fraction data of the n-step chain (for cross-checks)."""
    c = check_variance(c)
    chain = [(float(a), float(b)) for a, b in steps]
    n = len(chain)
    a = [chain[n - 1 - k][0] for k in range(n)]
    bsq = [2.0 * chain[0][1] * c if k == n - 1 else chain[n - 1 - k][1] for k in range(n)]
    return JacobiParams(a=a, bsq=bsq, tail_c=c if tail else None)


def semicircle_matrix(c, n):
    """n-by-n truncation of the semicircle Jacobi matrix (0 diagonal, sqrt(c))."""
    base = JacobiParams(a=[], bsq=[], tail_c=check_variance(c))
    return jacobi_matrix(base, n)


def apply_steps(T, steps):
    """Apply perturbation steps in the given order."""
    for s in steps:
        T = phi_k(T, s)
    return T


def paper_literal_pq(c, alpha, beta, gamma=None, delta=None):
    """Literal-text parameter pairs with the uncorrected radicals.

    Reproduces q = 1 - sqrt(-2*beta) (and q0 = 1 - sqrt(delta/(2*beta*c)))
    for documentation; the radicand -2*beta is negative for positive
    shifts, so these values are complex and are reported only, never
    applied to matrices.
    """
    check_variance(c)
    q1 = 1.0 - cmath.sqrt(-2.0 * complex(beta))
    level1 = (-complex(alpha), q1)
    if gamma is None:
        return (level1,)
    q0 = 1.0 - cmath.sqrt(complex(delta) / (2.0 * complex(beta) * c))
    return ((-complex(gamma), q0), level1)
