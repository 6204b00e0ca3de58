import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohesion_lab.rig import (FINITE_CATALOG, LEMMA_CLAUSES, PROP2_CLAUSES, A_of, FiniteRig,
                              Interval, M_of, NotARig, NotARing, QIntervalSet, QLine,
                              UnsupportedSubset, boolean_rig, catalog, get_rig,
                              verify_lemma_AM, verify_prop2, zmod)

from oracles import brute_A, brute_M

Q = QIntervalSet.parse
RIGS = sorted(FINITE_CATALOG)


# -- finite rigs ----------------------------------------------------------------

@pytest.mark.parametrize("name", RIGS)
def test_catalog_rigs_satisfy_axioms(name):
    assert FINITE_CATALOG[name]().violations() == []


def test_broken_table_is_rejected():
    with pytest.raises(NotARig):
        FiniteRig.from_functions("bad", [0, 1], lambda x, y: x, lambda x, y: x * y, 0, 1)


def test_ring_detection():
    assert zmod(4).is_ring() and zmod(4).neg(1) == 3
    assert not boolean_rig().is_ring()
    with pytest.raises(NotARing):
        boolean_rig().neg(1)


@pytest.mark.parametrize("name", RIGS)
def test_A_and_M_match_brute_force(name):
    K = FINITE_CATALOG[name]()
    for P in K.subsets():
        A = A_of(K, P)
        assert A == brute_A(K, P)
        assert M_of(K, A) == brute_M(K, A)


@pytest.mark.parametrize("name", RIGS)
def test_prop2_holds_on_every_subset(name):
    K = FINITE_CATALOG[name]()
    for P in K.subsets():
        rep = verify_prop2(K, P)
        assert rep.ok, (P, rep.witnesses)
        assert set(rep.clauses) == set(PROP2_CLAUSES)


def test_boolean_rig_example():
    rep = verify_prop2(boolean_rig(), {1})
    assert rep.A == {0, 1} and rep.M == {0, 1}


def test_lemma_first_clause_needs_negatives():
    with pytest.raises(NotARing):
        verify_lemma_AM(boolean_rig(), {1})
    rep = verify_lemma_AM(boolean_rig(), {1}, clause1=False)
    assert LEMMA_CLAUSES[0] not in rep.clauses and rep.ok


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z6"])
def test_lemma_on_rings(name):
    K = FINITE_CATALOG[name]()
    for P in K.subsets():
        rep = verify_lemma_AM(K, P)
        if P:
            assert rep.ok, (P, rep.witnesses)
        else:
            # empty P: A = M = K contains 1 and -1, yet 0 is not in P
            assert rep.failed() == [LEMMA_CLAUSES[0]]
            assert rep.A == frozenset(K.elements)


def test_subset_outside_carrier():
    with pytest.raises(UnsupportedSubset):
        A_of(zmod(3), {5})
    with pytest.raises(UnsupportedSubset):
        A_of(QLine(), {1})


# -- interval unions ---------------------------------------------------------------

def test_parse_and_print():
    s = Q("[0, oo) U (-oo, -1]")
    assert str(s) == "(-oo, -1] ∪ [0, oo)"
    assert Q(str(s)) == s
    assert Q("{0}") == QIntervalSet.point(0)
    assert Q("empty").is_empty()
    assert Q("[0, 1) U [1, 2]") == Q("[0, 2]")
    assert Q("[0, 1) U (1, 2]") != Q("[0, 2]")


def test_inverse_of_sets_touching_zero():
    assert Q("(0, oo)").inverse() == Q("(0, oo)")
    assert Q("[-2, -1/2]").inverse() == Q("[-2, -1/2]")
    assert Q("(0, 1]").inverse() == Q("[1, oo)")
    with pytest.raises(ZeroDivisionError):
        Q("[0, 1]").inverse()


ends = st.one_of(st.integers(-4, 4).map(Fraction),
                 st.sampled_from([Fraction(1, 2), Fraction(-3, 2)]))


@st.composite
def interval_sets(draw):
    pieces = []
    for _ in range(draw(st.integers(0, 3))):
        a, b = sorted([draw(ends), draw(ends)])
        lo = -math.inf if draw(st.integers(0, 5)) == 0 else a
        hi = math.inf if draw(st.integers(0, 5)) == 0 else b
        pieces.append(Interval(lo, draw(st.booleans()), hi, draw(st.booleans())))
    return QIntervalSet(pieces)


def probes(*sets):
    """Endpoints, neighbours and midpoints: enough to separate interval unions."""
    pts = {Fraction(0)}
    for s in sets:
        for i in s.intervals:
            for e in (i.lo, i.hi):
                if not math.isinf(e):
                    pts.update({e, e - Fraction(1, 7), e + Fraction(1, 7)})
    ordered = sorted(pts)
    pts.update((a + b) / 2 for a, b in zip(ordered, ordered[1:]))
    pts.update({ordered[0] - 10, ordered[-1] + 10})
    return sorted(pts)


@given(interval_sets())
def test_canonical_form_is_stable(s):
    assert QIntervalSet(s.intervals) == s
    assert Q(str(s)) == s
    for a, b in zip(s.intervals, s.intervals[1:]):
        assert a.hi < b.lo or (a.hi == b.lo and not (a.hi_closed or b.lo_closed))


@given(interval_sets(), interval_sets())
def test_set_operations_pointwise(s, t):
    for x in probes(s, t):
        assert (x in s.union(t)) == (x in s or x in t)
        assert (x in s.intersection(t)) == (x in s and x in t)
        assert (x in s.complement()) == (x not in s)


@given(interval_sets(), interval_sets())
def test_issubset_pointwise(s, t):
    expected = all(x in t for x in probes(s, t) if x in s)
    assert s.issubset(t) == expected


@settings(max_examples=60, deadline=None)
@given(interval_sets(), st.integers(-8, 8).map(lambda n: Fraction(n, 2)))
def test_A_is_the_set_of_stabilising_translations(P, a):
    A = A_of(QLine(), P)
    assert (a in A) == P.translate(a).issubset(P)


@settings(max_examples=60, deadline=None)
@given(interval_sets(), st.integers(-8, 8).map(lambda n: Fraction(n, 2)))
def test_M_is_the_set_of_stabilising_scalings(A, lam):
    M = M_of(QLine(), A)
    assert (lam in M) == A.scale(lam).issubset(A)


@settings(max_examples=60, deadline=None)
@given(interval_sets())
def test_prop2_on_the_rational_line(P):
    assert verify_prop2(QLine(), P).ok


# -- the rational line examples --------------------------------------------------------

def test_positive_reals():
    rep = verify_prop2(QLine(), Q("(0, oo)"))
    assert rep.A == Q("[0, oo)") and rep.M == Q("[0, oo)")
    assert rep.ok and rep.notes


def test_nonzero_reals():
    rep = verify_prop2(QLine(), Q("(-oo, 0) U (0, oo)"))
    assert rep.A == Q("{0}") and rep.M == Q("(-oo, oo)")
    lemma = verify_lemma_AM(QLine(), Q("(-oo, 0) U (0, oo)"))
    assert lemma.clauses[LEMMA_CLAUSES[1]] is None


def test_whole_line():
    rep = verify_prop2(QLine(), QIntervalSet.all())
    assert rep.A == QIntervalSet.all() and rep.M == QIntervalSet.all()
    assert verify_lemma_AM(QLine(), QIntervalSet.all()).ok


def test_catalog_lookup():
    assert set(catalog()) == set(FINITE_CATALOG) | {"Qline"}
    assert get_rig("Z3").elements == (0, 1, 2)
    assert isinstance(get_rig("Qline"), QLine)
