"""Buchberger completion, reduced Gröbner bases and normal forms."""
from __future__ import annotations

import heapq
from fractions import Fraction

from .polynomial import GREVLEX, Polynomial, get_order


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Elt:
    """A basis element with cached leading data and optional cofactors."""

    __slots__ = ("terms", "lm", "lc", "cof")

    def __init__(self, terms, key, cof=None):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]
        self.cof = cof


def _axpy(dst, src, c, shift):
    """dst -= c * x^shift * src, in place."""
    for m, v in src.items():
        mm = tuple(a + b for a, b in zip(m, shift))
        s = dst.get(mm, 0) - c * v
        if s:
            dst[mm] = s
        else:
            dst.pop(mm, None)


def _cof_axpy(dst, src, c, shift, variables):
    """dst -= c * x^shift * src, on cofactor vectors."""
    term = Polynomial._raw(variables, {shift: c})
    for i, q in enumerate(src):
        if q:
            dst[i] = dst[i] - term * q


def _reduce(terms, basis, key, cof=None, variables=None):
    """Fully reduce ``terms`` (a dict) by ``basis``; returns (remainder, cof)."""
    p = dict(terms)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for g in basis:
            if _divides(g.lm, m):
                q = c / g.lc
                shift = _sub(m, g.lm)
                _axpy(p, g.terms, q, shift)
                if cof is not None and g.cof is not None:
                    _cof_axpy(cof, g.cof, q, shift, variables)
                break
        else:
            rem[m] = c
            del p[m]
    return rem, cof


def _make_monic(terms, key, cof=None):
    lm = max(terms, key=key)
    inv = 1 / terms[lm]
    if inv == 1:
        return terms, cof
    return {m: v * inv for m, v in terms.items()}, (
        None if cof is None else [q * inv for q in cof]
    )


def groebner_basis(gens, order=GREVLEX, lift=False):
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    The result is a tuple of monic polynomials sorted by increasing leading
    monomial, so equal ideals give identical tuples.  With ``lift=True``
    returns ``(basis, cofactors)`` where ``basis[i] == sum(cofactors[i][j] *
    gens[j])``.
    """
    order = get_order(order)
    key = order.key
    gens = list(gens)
    if not gens:
        return ((), ()) if lift else ()
    variables = gens[0].vars
    for g in gens:
        if g.vars != variables:
            raise ValueError("generators must share one ambient ring")
    ngens = len(gens)
    zero = Polynomial.zero(variables)

    basis = []
    pairs = set()
    queue = []  # heap of (key(lcm), i, j), lazily synced with ``pairs``

    def add(terms, cof):
        terms, cof = _make_monic(terms, key, cof)
        e = _Elt(terms, key, cof)
        k = len(basis)
        basis.append(e)
        for i in range(k):
            if basis[i] is not None:
                pairs.add((i, k))
                heapq.heappush(queue, (key(_lcm(basis[i].lm, e.lm)), i, k))

    for j, g in enumerate(gens):
        if not g.terms:
            continue
        cof = None
        if lift:
            cof = [zero] * ngens
            cof[j] = Polynomial.one(variables)
        live = [b for b in basis if b is not None]
        rem, cof = _reduce(g.terms, live, key, cof, variables)
        if rem:
            add(rem, cof)

    while pairs:
        _, i, j = heapq.heappop(queue)
        if (i, j) not in pairs:
            continue
        pairs.discard((i, j))
        gi, gj = basis[i], basis[j]
        lcm = _lcm(gi.lm, gj.lm)
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(gi.lm, gj.lm)):
            continue
        # chain criterion
        skip = False
        for k, gk in enumerate(basis):
            if k in (i, j) or gk is None:
                continue
            if _divides(gk.lm, lcm) and (min(i, k), max(i, k)) not in pairs and (
                min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        s = {}
        si = _sub(lcm, gi.lm)
        sj = _sub(lcm, gj.lm)
        _axpy(s, gi.terms, Fraction(-1), si)
        _axpy(s, gj.terms, Fraction(1), sj)
        cof = None
        if lift:
            cof = [zero] * ngens
            _cof_axpy(cof, gi.cof, Fraction(-1), si, variables)
            _cof_axpy(cof, gj.cof, Fraction(1), sj, variables)
        if not s:
            continue
        live = [b for b in basis if b is not None]
        rem, cof = _reduce(s, live, key, cof, variables)
        if rem:
            add(rem, cof)
            if not any(basis[-1].lm):
                # unit ideal
                pairs.clear()

    # minimalize
    live = [b for b in basis if b is not None]
    minimal = []
    for idx, b in enumerate(live):
        dominated = False
        for jdx, c in enumerate(live):
            if jdx == idx:
                continue
            if _divides(c.lm, b.lm) and (c.lm != b.lm or jdx < idx):
                dominated = True
                break
        if not dominated:
            minimal.append(b)

    # interreduce
    reduced = []
    for idx, b in enumerate(minimal):
        others = [c for jdx, c in enumerate(minimal) if jdx != idx]
        cof = list(b.cof) if lift else None
        lead = {b.lm: b.terms[b.lm]}
        tail = {m: v for m, v in b.terms.items() if m != b.lm}
        rem, cof = _reduce(tail, others, key, cof, variables)
        rem.update(lead)
        rem, cof = _make_monic(rem, key, cof)
        reduced.append(_Elt(rem, key, cof))

    reduced.sort(key=lambda e: key(e.lm))
    polys = tuple(Polynomial._raw(variables, e.terms) for e in reduced)
    if lift:
        return polys, tuple(tuple(e.cof) for e in reduced)
    return polys


def normal_form(f, basis, order=GREVLEX):
    """Remainder of ``f`` on full reduction by ``basis``.

    Unique when ``basis`` is a Gröbner basis for ``order``.
    """
    key = get_order(order).key
    if not f.terms or not basis:
        return f
    elts = [_Elt(g.terms, key) for g in basis]
    rem, _ = _reduce(f.terms, elts, key)
    return Polynomial._raw(f.vars, rem)


def division(f, basis, order=GREVLEX):
    """Multivariate division: ``f == sum(q[i] * basis[i]) + r``.

    Returns ``(quotients, remainder)``; this is the reduction trace that
    witnesses ideal membership when the remainder vanishes.
    """
    key = get_order(order).key
    variables = f.vars
    elts = [_Elt(g.terms, key, [Polynomial.one(variables) if j == i else Polynomial.zero(variables)
                                 for j in range(len(basis))])
            for i, g in enumerate(basis)]
    cof = [Polynomial.zero(variables)] * len(basis)
    rem, cof = _reduce(f.terms, elts, key, cof, variables)
    quotients = [-q for q in cof]
    return quotients, Polynomial._raw(variables, rem)


class Ideal:
    """Ideal of a polynomial ring with a lazily computed reduced basis.

    The basis is filled on first use; concurrent fills compute the same
    tuple, so the race is harmless.
    """

    def __init__(self, gens, variables=None, order=GREVLEX):
        gens = tuple(gens)
        if variables is None:
            if not gens:
                raise ValueError("variables required for an ideal without generators")
            variables = gens[0].vars
        self.vars = tuple(variables)
        self.gens = tuple(g.embed(self.vars) if g.vars != self.vars else g for g in gens)
        self.order = get_order(order)
        self._basis = None

    @property
    def basis(self):
        if self._basis is None:
            self._basis = groebner_basis([g for g in self.gens if g], self.order)
        return self._basis

    def normal_form(self, f):
        return normal_form(f, self.basis, self.order)

    def contains(self, f):
        return not self.normal_form(f).terms

    __contains__ = contains

    def is_unit(self):
        return any(g.is_constant() and g for g in self.basis)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.vars == other.vars
                and self.order == other.order and self.basis == other.basis)

    def __hash__(self):
        return hash((self.vars, self.order, self.basis))

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))})"


def ideal_membership(f, ideal):
    """True iff ``f`` lies in ``ideal`` (normal form is zero)."""
    if isinstance(ideal, Ideal):
        return ideal.contains(f)
    return not normal_form(f, groebner_basis(ideal)).terms
