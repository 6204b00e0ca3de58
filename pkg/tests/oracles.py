"""Independent brute-force oracles used to freeze expected values.

Nothing here goes through the package's Gröbner, linear-algebra or
enumeration code: idempotents come from sympy alone, hom counts from
plain enumeration of all families of functions.
"""
from __future__ import annotations

from itertools import product

import sympy


def sympy_idempotents(gens, relations, max_degree=8):  # practical up to dimension 5
    """Rational solutions of ``e^2 = e`` for the ansatz over the standard monomials.

    The quotient basis is read off sympy's reduced Gröbner basis (monomials
    of degree <= ``max_degree`` not divisible by a leading monomial), the
    product ``e^2 - e`` is reduced with sympy and the coefficient system is
    solved with ``sympy.solve``.
    """
    syms = sympy.symbols(" ".join(gens)) if len(gens) > 1 else (sympy.Symbol(gens[0]),)
    syms = tuple(syms)
    rels = [sympy.sympify(r, locals={g: s for g, s in zip(gens, syms)}) for r in relations]
    G = sympy.groebner(rels, *syms, order="grevlex") if rels else None
    if G is not None and list(G.exprs) == [1]:
        return set()
    leads = []
    if G is not None:
        for g in G.exprs:
            lt = sympy.Poly(g, *syms).monoms(order="grevlex")[0]
            leads.append(lt)
    basis = []
    for exps in product(range(max_degree + 1), repeat=len(syms)):
        if sum(exps) > max_degree:
            continue
        if any(all(e >= l for e, l in zip(exps, lead)) for lead in leads):
            continue
        basis.append(exps)
    cs = sympy.symbols(f"c0:{len(basis)}")
    mono = [sympy.Mul(*[s ** e for s, e in zip(syms, exps)]) for exps in basis]
    # reduce each product of basis monomials separately (numeric coefficients)
    red = lambda f: G.reduce(f)[1] if G is not None else f
    expr = -sum(c * m for c, m in zip(cs, mono))
    for i, mi in enumerate(mono):
        for j, mj in enumerate(mono):
            expr += cs[i] * cs[j] * red(mi * mj)
    expr = sympy.expand(expr)
    eqs = sympy.Poly(expr, *syms).coeffs() if expr != 0 else []
    sols = sympy.solve(eqs, cs, dict=True) if eqs else [dict()]
    out = set()
    for sol in sols:
        vals = tuple(sympy.nsimplify(sol.get(c, c)) for c in cs)
        if all(v.is_Rational for v in vals):
            out.add(tuple(zip(basis, vals)))
    return out


def galois_idempotent_count(gens, relations, form=None):
    """``2^(number of maximal ideals)`` for a zero-dimensional Q-algebra.

    Maximal ideals over Q are Galois orbits of points over the algebraic
    closure.  The points come from ``sympy.solve`` on the relations; two are
    conjugate exactly when a separating linear form has the same minimal
    polynomial at both.
    """
    syms = [sympy.Symbol(g) for g in gens]
    loc = dict(zip(gens, syms))
    rels = [sympy.sympify(r, locals=loc) for r in relations]
    pts = sympy.solve(rels, syms, dict=True)
    form = form or list(range(1, len(syms) + 1))
    t = sympy.Symbol("t")
    values = [sympy.nsimplify(sum(a * p[s] for a, s in zip(form, syms))) for p in pts]
    if len({sympy.N(v, 30) for v in values}) != len(pts):
        raise ValueError("linear form does not separate the points")
    orbits = {sympy.minimal_polynomial(v, t) for v in values}
    return 2 ** len(orbits)


def brute_hom_count(X, Y):
    """Natural transformations ``X -> Y`` by checking every family of functions."""
    C = X.site
    objs = list(C.objects)
    per_object = []
    for c in objs:
        xs, ys = list(X.sets[c]), list(Y.sets[c])
        per_object.append([dict(zip(xs, img)) for img in product(ys, repeat=len(xs))])
    count = 0
    for family in product(*per_object):
        comp = dict(zip(objs, family))
        ok = True
        for f, (a, b) in C.morphisms.items():
            for x in X.sets[b]:
                if Y.maps[f][comp[b][x]] != comp[a][X.maps[f][x]]:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def brute_A(K, P):
    return {a for a in K.elements if all(K.add(a, p) in P for p in P)}


def brute_M(K, A):
    return {l for l in K.elements if all(K.mul(l, a) in A for a in A)}


def brute_units(M):
    """Stage-wise two-sided units of an internal monoid, as ``c -> set``."""
    X = M.carrier
    return {c: {x for x in X.sets[c]
                if any(M.mul(c, x, y) == M.unit[c] == M.mul(c, y, x) for y in X.sets[c])}
            for c in M.site.objects}


def brute_components(X, members=None):
    """Connected components of the category of elements, by flood fill.

    ``members`` restricts to a sub-presheaf given as ``c -> set``.
    """
    C = X.site
    members = members or {c: set(X.sets[c]) for c in C.objects}
    nbrs = {(c, x): set() for c in C.objects for x in members[c]}
    for f, (a, b) in C.morphisms.items():
        for x in members[b]:
            y = X.maps[f][x]
            nbrs[(b, x)].add((a, y))
            nbrs[(a, y)].add((b, x))
    seen, comps = set(), []
    for start in nbrs:
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(nbrs[v] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps
