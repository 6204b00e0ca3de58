"""A and M from a subset P of a rig, with checks of their basic properties.

``A = {a | a + P ⊆ P}`` and ``M = {λ | λ A ⊆ A}``.  Finite rigs are checked
by exhaustion; the rational line (standing in for the reals) by interval
algebra on :class:`QIntervalSet`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .finite import A_of_finite, FiniteRig, M_of_finite, NotARing
from .interval import A_of_intervals, M_of_intervals, QIntervalSet, QLine

RATIONAL_NOTE = "the rational line stands in for the reals; all endpoints are exact rationals"

PROP2_CLAUSES = (
    "A is an additive submonoid",
    "M is a subrig",
    "1 in A implies M within A",
    "P subgroup implies P within M",
)
LEMMA_CLAUSES = ("1 in A and -1 in M imply 0 in P", "1 in A: M = A iff A closed under multiplication")


class UnsupportedSubset(TypeError):
    pass


def _check_subset(K, P):
    if isinstance(K, QLine):
        if not isinstance(P, QIntervalSet):
            raise UnsupportedSubset("subsets of the rational line must be interval unions")
        return P
    P = frozenset(P)
    stray = P - set(K.elements)
    if stray:
        raise UnsupportedSubset(f"{sorted(stray)} not in the carrier of {K.name}")
    return P


def A_of(K, P):
    P = _check_subset(K, P)
    if isinstance(K, QLine):
        return A_of_intervals(P)
    return A_of_finite(K, P)


def M_of(K, A):
    A = _check_subset(K, A)
    if isinstance(K, QLine):
        return M_of_intervals(A)
    return M_of_finite(K, A)


@dataclass
class ClauseReport:
    rig: str
    P: object
    A: object
    M: object
    clauses: dict
    witnesses: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return all(v is not False for v in self.clauses.values())

    def failed(self):
        return [k for k, v in self.clauses.items() if v is False]


# -- finite rigs --------------------------------------------------------------

def _first(gen):
    return next(iter(gen), None)


def _finite_prop2(K, P, A, M):
    wit = {}
    bad = (("0", K.zero) if K.zero not in A else
           _first((x, y) for x in sorted(A) for y in sorted(A) if K.add(x, y) not in A))
    if bad is not None:
        wit[PROP2_CLAUSES[0]] = bad
    bad = (("0/1",) if K.zero not in M or K.one not in M else
           _first((x, y) for x in sorted(M) for y in sorted(M)
                  if K.add(x, y) not in M or K.mul(x, y) not in M))
    if bad is not None:
        wit[PROP2_CLAUSES[1]] = bad
    if K.one in A:
        bad = _first(x for x in sorted(M) if x not in A)
        if bad is not None:
            wit[PROP2_CLAUSES[2]] = bad
    subgroup = (K.one in P and all(K.mul(x, y) in P for x in P for y in P)
                and all(any(K.mul(x, y) == K.one for y in P) for x in P))
    if subgroup:
        bad = _first(x for x in sorted(P) if x not in M)
        if bad is not None:
            wit[PROP2_CLAUSES[3]] = bad
    return wit


def _interval_prop2(K, P, A, M):
    wit = {}
    if 0 not in A:
        wit[PROP2_CLAUSES[0]] = ("0", 0)
    else:
        extra = A.minkowski_sum(A).difference(A)
        if not extra.is_empty():
            wit[PROP2_CLAUSES[0]] = ("sum", extra.sample())
    if 0 not in M or 1 not in M:
        wit[PROP2_CLAUSES[1]] = ("0/1",)
    else:
        extra = M.minkowski_sum(M).union(M.product(M)).difference(M)
        if not extra.is_empty():
            wit[PROP2_CLAUSES[1]] = ("closure", extra.sample())
    if 1 in A:
        extra = M.difference(A)
        if not extra.is_empty():
            wit[PROP2_CLAUSES[2]] = extra.sample()
    if _interval_subgroup(P):
        extra = P.difference(M)
        if not extra.is_empty():
            wit[PROP2_CLAUSES[3]] = extra.sample()
    return wit


def _interval_subgroup(P):
    if 1 not in P or 0 in P:
        return False
    return P.product(P).issubset(P) and P.inverse().issubset(P)


def verify_prop2(K, P):
    """Check the four clauses; each violated clause carries a witness."""
    P = _check_subset(K, P)
    A = A_of(K, P)
    M = M_of(K, A)
    if isinstance(K, QLine):
        wit = _interval_prop2(K, P, A, M)
        notes = [RATIONAL_NOTE]
    else:
        wit = _finite_prop2(K, P, A, M)
        notes = []
    clauses = {c: c not in wit for c in PROP2_CLAUSES}
    return ClauseReport(K.name, P, A, M, clauses, wit, notes)


def _closed_under_mul(K, A):
    if isinstance(K, QLine):
        extra = A.product(A).difference(A)
        return extra.is_empty(), None if extra.is_empty() else extra.sample()
    bad = _first((x, y) for x in sorted(A) for y in sorted(A) if K.mul(x, y) not in A)
    return bad is None, bad


def verify_lemma_AM(K, P, clause1=True):
    """The two clauses of the A = M lemma.

    Clause 1 needs additive inverses and raises :class:`NotARing` on a
    proper rig unless ``clause1=False``.  Clause 2 is checked only when
    ``1 ∈ A`` (otherwise recorded as ``None``); a failure of either
    direction of the biconditional gets its own witness.
    """
    P = _check_subset(K, P)
    A = A_of(K, P)
    M = M_of(K, A)
    clauses, wit = {}, {}
    notes = [RATIONAL_NOTE] if isinstance(K, QLine) else []
    if clause1:
        if not K.is_ring():
            raise NotARing(f"{K.name} is not a ring")
        minus_one = K.neg(K.one)
        hyp = K.one in A and minus_one in M
        holds = (not hyp) or (K.zero in P)
        clauses[LEMMA_CLAUSES[0]] = holds
        if not holds:
            wit[LEMMA_CLAUSES[0]] = {"P": P, "A": A, "M": M}
    if K.one in A:
        equal = M == A
        closed, bad = _closed_under_mul(K, A)
        clauses[LEMMA_CLAUSES[1]] = equal == closed
        if equal and not closed:
            wit[LEMMA_CLAUSES[1]] = ("M = A but A not closed", bad)
        elif closed and not equal:
            diff = A.difference(M).sample() if isinstance(K, QLine) else _first(sorted(A - M))
            wit[LEMMA_CLAUSES[1]] = ("A closed but M != A", diff)
    else:
        clauses[LEMMA_CLAUSES[1]] = None
    return ClauseReport(K.name, P, A, M, clauses, wit, notes)


def catalog():
    from .finite import FINITE_CATALOG
    out = {name: make for name, make in FINITE_CATALOG.items()}
    out["Qline"] = QLine
    return out


def get_rig(name):
    try:
        return catalog()[name]()
    except KeyError:
        raise KeyError(f"unknown rig {name!r}") from None


__all__ = ["A_of", "M_of", "verify_prop2", "verify_lemma_AM", "ClauseReport", "FiniteRig",
           "UnsupportedSubset", "catalog", "get_rig", "PROP2_CLAUSES", "LEMMA_CLAUSES"]
