"""Exact computational-algebra engine for the 27 lines on a smooth cubic
surface, the Weyl group W(E6) acting on them, the isotypic decomposition
of the 27-dimensional permutation representation (1 + 6 + 20), and the
20-dimensional space of relations among the 27 curve classes."""

__version__ = "0.1.0"

from .errors import CertificateFailure, ModelError, UnsupportedScaleError

__all__ = [
    "CertificateFailure",
    "ModelError",
    "UnsupportedScaleError",
    "__version__",
]
