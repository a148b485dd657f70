"""Exact invariants, value semigroups and ADE classification of curve
singularities given by branch parametrizations."""
from .series import FieldSpec, RATIONALS, TruncatedSeries, BranchElement, PolyExpr, parse_scalar
from .semigroup import NumericalSemigroup
from .valuesemigroup import ValueSemigroup
from .curve import CurveSpec, parse_document
from .linalg import BACKEND

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "RATIONALS", "TruncatedSeries", "BranchElement", "PolyExpr", "parse_scalar",
    "NumericalSemigroup", "ValueSemigroup", "CurveSpec", "parse_document", "BACKEND",
]
