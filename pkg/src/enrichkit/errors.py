"""Exception types shared by the package."""


class EnrichError(ValueError):
    """Base class for all errors raised by enrichkit."""


class SchemaError(EnrichError):
    """Malformed input: wrong shapes, unknown labels, values outside [0,1]."""


class AxiomViolation(EnrichError):
    """A table fails an axiom; ``witness`` names the offending arguments."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MismatchError(EnrichError):
    """Operands live over different categories."""


class NotForwardCauchy(EnrichError):
    """An operation needing a forward Cauchy net received another net."""
