"""Equivariant T_{x,y}-genera of circle actions with isolated fixed points."""
from .algebra import BivarPoly, LaurentPoly, QSeriesElem, QuotientFn, QXYPoly, RationalFn
from .fixedpoints import DatasetError, FixedPoint, FixedPointData, negate_action, reduce, validate
from .genus import (
    GenusReport,
    NotRigidError,
    chi_vector_combinatorial,
    chi_vector_series,
    equivariant_txy,
    genus_report,
    rigidity_check,
    txy_genus,
)

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "DatasetError",
    "FixedPoint",
    "FixedPointData",
    "GenusReport",
    "LaurentPoly",
    "NotRigidError",
    "QSeriesElem",
    "QXYPoly",
    "QuotientFn",
    "RationalFn",
    "chi_vector_combinatorial",
    "chi_vector_series",
    "equivariant_txy",
    "genus_report",
    "negate_action",
    "reduce",
    "rigidity_check",
    "txy_genus",
    "validate",
]
