"""Finite rigs, rational interval unions, and the A / M construction."""
from .finite import (FINITE_CATALOG, FiniteRig, NotARig, NotARing, boolean_rig, minplus3,
                     zmod)
from .interval import Interval, QIntervalSet, QLine
from .prop2 import (LEMMA_CLAUSES, PROP2_CLAUSES, A_of, ClauseReport, M_of,
                    UnsupportedSubset, catalog, get_rig, verify_lemma_AM, verify_prop2)

__all__ = [
    "FINITE_CATALOG", "FiniteRig", "NotARig", "NotARing", "boolean_rig", "minplus3", "zmod",
    "Interval", "QIntervalSet", "QLine", "LEMMA_CLAUSES", "PROP2_CLAUSES", "A_of", "M_of",
    "ClauseReport", "UnsupportedSubset", "catalog", "get_rig", "verify_lemma_AM", "verify_prop2",
]
