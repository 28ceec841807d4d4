"""Exceptions shared across the engine."""


class ModelError(RuntimeError):
    """An internal consistency check of the mathematical model failed.

    Raised when a computed object violates an identity that must hold by
    construction (e.g. a triangle of lines not summing to -K, or a
    reflection mapping a line class outside the line set).  Any occurrence
    means the model itself is wired wrong, not that the input is bad.
    """


class CertificateFailure(RuntimeError):
    """A named verification certificate did not pass."""

    def __init__(self, name, details=""):
        self.name = name
        self.details = details
        message = f"certificate failed: {name}"
        if details:
            message += f" ({details})"
        super().__init__(message)


class UnsupportedScaleError(RuntimeError):
    """The requested computation exceeds the explicit-enumeration regime."""
