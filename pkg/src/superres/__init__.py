"""Exact block combinatorics, minimal projective resolutions and complexity
invariants for osp(2|2n), osp(3|2), D(2,1;alpha), G(3) and F(4)."""

__version__ = "0.1.0"

from .errors import (DomainError, InconsistencyError, InternalError, ParameterError,  # noqa: E402
                     ParseError, SuperresError, UnsupportedCase, UsageError)
from .rootdata import Family, SuperWeight, atypicality, bilinear, build_datum, is_dominant  # noqa: E402

__all__ = [
    "DomainError", "Family", "InconsistencyError", "InternalError", "ParameterError",
    "ParseError", "SuperWeight", "SuperresError", "UnsupportedCase", "UsageError",
    "atypicality", "bilinear", "build_datum", "is_dominant",
]
