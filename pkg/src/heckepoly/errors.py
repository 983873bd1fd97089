"""Exceptions raised by the exact-arithmetic core and the operator layer."""


class HeckePolyError(Exception):
    """Base class for all package-specific errors."""


class AmbientSizeMismatch(HeckePolyError):
    """Two values with different ambient variable counts were combined."""


class NotDivisibleError(HeckePolyError):
    """Exact polynomial division failed; no exact quotient exists."""


class SpectrumCollisionError(HeckePolyError):
    """A triangular eigen-solve hit a repeated eigenvalue tuple."""


class NotProportionalError(HeckePolyError):
    """An operator image failed to be a scalar multiple of the expected polynomial."""


class RodriguesSingularError(HeckePolyError):
    """A Rodrigues prefactor contains a zero factor (needs beta >= 1)."""


class DivergentWeightError(HeckePolyError):
    """The Laguerre weight diverges (gamma <= -1/2)."""


class EvennessViolation(HeckePolyError):
    """A polynomial expected to be even in every variable has odd exponents."""


class TypeBContextError(HeckePolyError):
    """A type-B primitive (sign flip / sign divided) was requested in a type-A context."""


class CalibrationError(HeckePolyError):
    """Neither candidate convention passed the shift-operator calibration probe."""
