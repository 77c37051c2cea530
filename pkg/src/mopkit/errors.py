"""Exception types raised across mopkit."""


class MopkitError(Exception):
    """Base class for all library errors."""


class AdmissibilityError(MopkitError, ValueError):
    """Family parameters violate the family's admissibility conditions."""


class VanishingLowerPochhammer(MopkitError, ZeroDivisionError):
    """A lower-parameter Pochhammer symbol is zero inside the summed range."""


class CancellationFailure(MopkitError, ArithmeticError):
    """A tail sum that must cancel exactly did not vanish."""


class ResidualExponentError(MopkitError, ArithmeticError):
    """Rodrigues construction left a non-trivial t^g (1-t)^d prefactor."""


class UnavailableRepresentation(MopkitError, LookupError):
    """No explicit representation exists for the requested family."""


class SingularLeadingCoefficient(MopkitError, ZeroDivisionError):
    """A triangular basis has a zero leading coefficient."""


class NotNormal(MopkitError, ArithmeticError):
    """The moment matrix of a multi-index is rank deficient."""


class InconsistentRecurrence(MopkitError, ArithmeticError):
    """No recurrence of the expected order fits the polynomials."""


class PoleError(MopkitError, ValueError):
    """A special function was evaluated at one of its poles."""


class NonConvergence(MopkitError, ArithmeticError):
    """A numerical procedure failed to reach its target tolerance."""


class HypothesisViolation(MopkitError, ValueError):
    """Parameters fall outside the region where an integral identity holds."""
