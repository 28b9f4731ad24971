"""Numerics for semicircle-law deformations driven by continued fractions.

The library covers: the square-root branch with cut on the support
interval, algebraic Stieltjes functions (F + kappa*sqrt(w**2-4c))/G and
their measure decompositions, Jacobi-parameter extraction from series at
infinity, continued-fraction shift chains and their closed forms,
recovery of shift parameters from denominator roots with positivity
classification, residue-calculus transforms of semicircle-quotient
densities, and finite-rank perturbations of truncated Jacobi matrices.
"""

from . import errors
from .poly import Poly, RootSet, poly_roots
from .series import Series, small_root_series, sqrt_shifted_series
from .branch import (
    cut_sqrt,
    cut_sqrt_boundary,
    on_cut,
    semicircle_root,
    semicircle_root_conj,
    support_halfwidth,
)
from .transforms import (
    AlgebraicStieltjes,
    DensitySpec,
    decompose_measure,
    haagerup_transform,
    stieltjes_numeric,
)
from .jacobi import (
    JacobiParams,
    TriJacobi,
    affine_transform,
    cfrac_series,
    eval_cfrac,
    extract_jacobi,
    jacobi_matrix,
    resolvent00,
)
from .shifts import (
    MobiusMat,
    ShiftStep,
    assemble_FG,
    mobius_chain,
    shift_chain,
    shift_once,
    two_shift_closed,
)
from .inversion import (
    OneShiftSolution,
    OneShiftSolutionSet,
    PositivityReport,
    TwoShiftSolution,
    classify_positivity,
    expected_positive_count,
    one_shift_deg1,
    one_shift_from_roots,
    remaining_root_to_lambda,
    two_shift_deg3,
    two_shift_even_quartic,
)
from .residues import (
    atom_extension,
    contour_residue_poly,
    normalize_deg1,
    normalize_deg2,
    normalize_general,
    one_shift_measure_match,
    pole_terms,
    residue_polynomial,
    stieltjes_from_density,
)
from .perturb import (
    PerturbStep,
    n_shift_perturbation,
    one_shift_perturbation,
    paper_literal_pq,
    phi_k,
    two_shift_perturbation,
)

__version__ = "0.1.0"
