"""Exception hierarchy.

Domain errors signal inputs outside an operation's mathematical domain
(a point on the branch cut, a root inside the support interval, ...).
Internal errors signal broken invariants and should never surface from
well-formed inputs.
"""


class SemishiftError(Exception):
    """Base class for all library errors."""


class DomainError(SemishiftError):
    """Input lies outside the operation's mathematical domain."""


class InternalError(SemishiftError):
    """An internal invariant failed; indicates a bug, not bad input."""


# polynomial roots
class NoRootsError(DomainError):
    """Root finding requested on a degree-0 polynomial."""


class ConvergenceError(SemishiftError):
    """Iteration cap reached before the residual target."""


# series
class DivisionByZeroSeriesError(DomainError):
    """Reciprocal of a series with identically-zero leading behavior."""


class InsufficientOrderError(DomainError):
    """Series carries too few trusted coefficients for the request."""


# branch / transforms
class OnCutError(DomainError):
    """Evaluation requested on the open branch cut."""


class EndpointError(DomainError):
    """Boundary values requested at a cut endpoint."""


class PoleAtError(DomainError):
    """Evaluation at (or too near) a pole of the denominator."""

    def __init__(self, w, msg=None):
        self.w = w
        super().__init__(msg or f"denominator vanishes at w={w}")


class RootOnCutError(DomainError):
    """Denominator root inside the open support interval."""


class RootInsideCutError(RootOnCutError):
    """Density denominator has a zero strictly inside the support."""


class HigherOrderRealPoleError(DomainError):
    """Non-simple real pole; measure decomposition is not valid."""


class EndpointHigherOrderError(DomainError):
    """Zero of multiplicity >= 2 at a support endpoint is unsupported."""


class NotNormalizableError(DomainError):
    """Measure has nonpositive total mass; cannot rescale to mass one."""


class BadAtomSiteError(DomainError):
    """Atom weight assigned to a location that is not a real simple root."""


# continued fractions / Jacobi
class ZeroBetaError(DomainError):
    """Continued-fraction expansion terminates (atomic measure)."""

    def __init__(self, level, msg=None):
        self.level = level
        super().__init__(msg or f"expansion terminates at level {level}")


class NotRealError(DomainError):
    """Imaginary parts exceed tolerance where real data is required."""


class NotPositiveError(DomainError):
    """Strictly positive off-diagonal data (or weight) required."""


class PoleNearError(DomainError):
    """Continued-fraction denominator vanished during evaluation."""


class SingularError(DomainError):
    """Resolvent solve hit a singular (real-eigenvalue) system."""


# shifts / inversion
class DegenerateError(DomainError):
    """Parameters degenerate the operation (e.g. zero scale factor)."""


class WrongFamilyError(DomainError):
    """Requested parameters are incompatible with the solution family."""


class NotAShiftError(DomainError):
    """Recovered parameters do not constitute a shift (zero step weight)."""


class InfeasibleError(DomainError):
    """No parameter value reproduces the requested data."""


class InconsistentError(InternalError):
    """Cross-checked quantities disagree; indicates an implementation bug."""
