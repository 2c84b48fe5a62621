"""Exact cohomological model of the mapping-torus manifolds M(A), A in SL(2, Z[i])."""

from .kummer import ConsistencyError, GaussianMatrix2, InvalidInputError, IntersectionForm
from .topology import GateError

__version__ = "0.1.0"

__all__ = ["ConsistencyError", "GateError", "GaussianMatrix2", "InvalidInputError",
           "IntersectionForm", "__version__"]
