"""Internal monoids and rigs in a presheaf topos and the checks built on them."""
from __future__ import annotations

from dataclasses import dataclass, field

from .adjoints import AdjointString, components, pi0, preserves_product
from .presheaf import (DEFAULT_MAX_ENUMERATION, Exponential, NatTrans, SizeLimit,
                       nat_trans, product, subpresheaf)
from .site import NotPreCohesiveSite, check_precohesive_site


class InternalMonoid:
    """A monoid (optionally a rig) object with stagewise operations.

    ``mul`` and ``add`` are natural transformations from ``carrier × carrier``
    (built by :func:`product`); ``unit`` and ``zero`` are global elements
    given as dicts ``c -> element``.
    """

    def __init__(self, carrier, mul, unit, add=None, zero=None, name=None):
        self.carrier = carrier
        self.mul_nat = mul
        self.unit = dict(unit)
        self.add_nat = add
        self.zero = None if zero is None else dict(zero)
        self.name = name

    @classmethod
    def from_functions(cls, carrier, mul, unit, add=None, zero=None, name=None):
        """Build from ``mul(c, x, y)`` (and ``add``); naturality is verified."""
        P, _, _ = product(carrier, carrier)
        C = carrier.site

        def nat(op):
            return NatTrans(P, carrier, {c: {(x, y): op(c, x, y) for (x, y) in P.sets[c]}
                                         for c in C.objects})

        return cls(carrier, nat(mul), unit, nat(add) if add else None, zero, name)

    @property
    def site(self):
        return self.carrier.site

    def is_rig(self):
        return self.add_nat is not None and self.zero is not None

    def mul(self, c, x, y):
        return self.mul_nat.components[c][(x, y)]

    def add(self, c, x, y):
        return self.add_nat.components[c][(x, y)]

    def verify(self):
        """Names of violated laws (empty when all hold)."""
        bad = []
        X, C = self.carrier, self.site
        for f, (a, b) in C.morphisms.items():
            if X.maps[f][self.unit[b]] != self.unit[a]:
                bad.append(f"unit not a global element at {f}")
            if self.zero is not None and X.maps[f][self.zero[b]] != self.zero[a]:
                bad.append(f"zero not a global element at {f}")
        for c in C.objects:
            xs = X.sets[c]
            m = lambda x, y: self.mul(c, x, y)
            u = self.unit[c]
            if any(m(m(x, y), z) != m(x, m(y, z)) for x in xs for y in xs for z in xs):
                bad.append(f"multiplication not associative at {c}")
            if any(m(u, x) != x or m(x, u) != x for x in xs):
                bad.append(f"unit law fails at {c}")
            if not self.is_rig():
                continue
            s = lambda x, y: self.add(c, x, y)
            z0 = self.zero[c]
            if any(s(s(x, y), z) != s(x, s(y, z)) for x in xs for y in xs for z in xs):
                bad.append(f"addition not associative at {c}")
            if any(s(x, y) != s(y, x) for x in xs for y in xs):
                bad.append(f"addition not commutative at {c}")
            if any(s(z0, x) != x for x in xs):
                bad.append(f"zero not additive unit at {c}")
            if any(m(x, s(y, z)) != s(m(x, y), m(x, z)) or m(s(y, z), x) != s(m(y, x), m(z, x))
                   for x in xs for y in xs for z in xs):
                bad.append(f"distributivity fails at {c}")
            if any(m(z0, x) != z0 or m(x, z0) != z0 for x in xs):
                bad.append(f"zero not absorbing at {c}")
        return bad


# -- Euler reals ---------------------------------------------------------

@dataclass
class EulerRealsPresheaf:
    monoid: InternalMonoid
    exponential: Exponential
    ev0: NatTrans
    inclusion: NatTrans
    point: dict


def _compose_endos(E, c, alpha, beta):
    """``alpha ∘ beta`` for elements of ``(T^T)(c)``, as a key."""
    C = E.X.site
    P = E.domains[c]
    comps = {a: {(g, t): E.apply(c, alpha, a, g, E.apply(c, beta, a, g, t)) for (g, t) in P.sets[a]}
             for a in C.objects}
    return NatTrans(P, E.X, comps, check=False).key()


def _constant_endo(E, c, values):
    C = E.X.site
    P = E.domains[c]
    return NatTrans(P, E.X, {a: {(g, t): values(a, g, t) for (g, t) in P.sets[a]}
                             for a in C.objects}, check=False).key()


def euler_reals_presheaf(T, point, limit=DEFAULT_MAX_ENUMERATION):
    """``R`` = pullback of ``point : 1 -> T`` along ``ev0 : T^T -> T``.

    Multiplication is composition of endomorphisms, unit the identity and
    zero the constant endomorphism at the point.
    """
    C = T.site
    E = Exponential(T, T, limit)
    ev = E.ev(point)
    members = {c: [k for k in E.presheaf.sets[c] if ev.components[c][k] == point[c]]
               for c in C.objects}
    R, incl = subpresheaf(E.presheaf, members, name="R")
    unit = {c: _constant_endo(E, c, lambda a, g, t: t) for c in C.objects}
    zero = {c: _constant_endo(E, c, lambda a, g, t: point[a]) for c in C.objects}
    monoid = InternalMonoid.from_functions(
        R, lambda c, x, y: _compose_endos(E, c, x, y), unit, zero=zero, name="R")
    return EulerRealsPresheaf(monoid, E, ev, incl, dict(point))


def t_discrete_check(X, T, point, limit=DEFAULT_MAX_ENUMERATION):
    """``ev0 : X^T -> X`` is an isomorphism."""
    return Exponential(X, T, limit).ev(point).is_iso()


@dataclass
class Prop1Report:
    R_components: int
    hypothesis: bool
    holds: object  # True/False, or None when the hypothesis fails
    T_connected: bool = None
    retraction: str = "not searched"


def prop1_check(X, T, point, R=None, limit=DEFAULT_MAX_ENUMERATION, search_retraction=False):
    """If ``p_! R = 1`` then ``p_!(ev0) : p_!(X^T) -> p_! X`` is a bijection."""
    C = X.site
    if not check_precohesive_site(C):
        raise NotPreCohesiveSite("prop1_check needs a pre-cohesive site")
    adj = AdjointString(C)
    if R is None:
        R = euler_reals_presheaf(T, point, limit)
    n = len(pi0(R.monoid.carrier))
    rep = Prop1Report(n, n == 1, None, len(pi0(T)) == 1)
    if search_retraction:
        rep.retraction = _retraction_search(R, limit)
    if n != 1:
        return rep
    ev = Exponential(X, T, limit).ev(point)
    m = adj.lower_shriek_map(ev)
    rep.holds = len(set(m.values())) == len(m) and set(m.values()) == set(pi0(X))
    return rep


def _retraction_search(R, limit):
    inc = R.inclusion
    try:
        for r in nat_trans(inc.target, inc.source, limit):
            if r.compose(inc) == NatTrans.identity(inc.source):
                return "retraction found"
    except SizeLimit:
        return "no retraction found within the enumeration bound"
    return "no retraction exists"


def lie_kernel(R, T, point, limit=DEFAULT_MAX_ENUMERATION):
    """``Lie(R)``: pullback of the zero of R along ``ev0 : R^T -> R``."""
    if R.zero is None:
        raise ValueError("lie_kernel needs a monoid with zero")
    E = Exponential(R.carrier, T, limit)
    ev = E.ev(point)
    members = {c: [k for k in E.presheaf.sets[c] if ev.components[c][k] == R.zero[c]]
               for c in R.site.objects}
    L, incl = subpresheaf(E.presheaf, members, name="Lie(R)")
    return L, incl


# -- units ----------------------------------------------------------------

@dataclass
class UnitsReport:
    U: object
    U_plus: object
    pi0_size: int
    bidirectional: bool
    pi0_is_group: bool
    inverses_preserved: bool
    unit_component: object = None
    notes: list = field(default_factory=list)


def units_and_bidirectional(M):
    """Pointwise units, their components and the identity component."""
    C = M.site
    if not check_precohesive_site(C):
        raise NotPreCohesiveSite("units_and_bidirectional needs a pre-cohesive site")
    X = M.carrier
    inverse = {}
    for c in C.objects:
        u = M.unit[c]
        inverse[c] = {}
        for x in X.sets[c]:
            for y in X.sets[c]:
                if M.mul(c, x, y) == u and M.mul(c, y, x) == u:
                    inverse[c][x] = y
                    break
    U, _ = subpresheaf(X, {c: list(inverse[c]) for c in C.objects}, name="U")
    preserved = all(inverse[a][X.maps[f][x]] == X.maps[f][inverse[b][x]]
                    for f, (a, b) in C.morphisms.items() for x in U.sets[b])
    labels, index = components(U)
    t = C.terminal()
    unit_label = index[(t, M.unit[t])]
    U_plus, _ = subpresheaf(U, {c: [x for x in U.sets[c] if index[(c, x)] == unit_label]
                                for c in C.objects}, name="U+")
    # group structure on components, through p_!(U × U) = p_!U × p_!U
    group = preserves_product(U, U)
    table = {}
    for c in C.objects:
        for x in U.sets[c]:
            for y in U.sets[c]:
                key = (index[(c, x)], index[(c, y)])
                val = index[(c, M.mul(c, x, y))]
                if table.setdefault(key, val) != val:
                    group = False
    if group:
        for a in labels:
            if not any(table.get((a, b)) == unit_label and table.get((b, a)) == unit_label
                       for b in labels):
                group = False
    return UnitsReport(U, U_plus, len(labels), len(labels) == 2, group, preserved, unit_label)


# -- A and M computed by forcing ------------------------------------------

@dataclass
class Prop2InternalReport:
    A: dict
    M: dict
    clauses: dict
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.clauses.values())


def _forcing(K, c, x, S, op):
    """``x`` forces ``for all f: d -> c, s in S(d): op(d, K(f) x, s) in S(d)``."""
    C = K.site
    X = K.carrier
    for f in C.into(c):
        d = C.dom(f)
        xf = X.maps[f][x]
        for s in S[d]:
            if op(d, xf, s) not in S[d]:
                return False
    return True


def prop2_internal(K, P):
    """``A`` and ``M`` of a sub-presheaf P of an internal rig, by forcing."""
    if not K.is_rig():
        raise ValueError("prop2_internal needs an internal rig")
    C, X = K.site, K.carrier
    P = {c: frozenset(P[c]) for c in C.objects}
    A = {c: frozenset(a for a in X.sets[c] if _forcing(K, c, a, P, K.add)) for c in C.objects}
    M = {c: frozenset(l for l in X.sets[c] if _forcing(K, c, l, A, K.mul)) for c in C.objects}
    clauses, wit = {}, {}

    def check(name, bad):
        clauses[name] = not bad
        if bad:
            wit[name] = bad[0]

    stable = lambda S: [(f, x) for f, (a, b) in C.morphisms.items() for x in S[b]
                        if X.maps[f][x] not in S[a]]
    check("A is a sub-presheaf", stable(A))
    check("M is a sub-presheaf", stable(M))
    check("A is an additive submonoid",
          [(c, "0") for c in C.objects if K.zero[c] not in A[c]]
          + [(c, x, y) for c in C.objects for x in A[c] for y in A[c] if K.add(c, x, y) not in A[c]])
    check("M is a subrig",
          [(c, "0/1") for c in C.objects if K.zero[c] not in M[c] or K.unit[c] not in M[c]]
          + [(c, x, y) for c in C.objects for x in M[c] for y in M[c]
             if K.add(c, x, y) not in M[c] or K.mul(c, x, y) not in M[c]])
    check("1 in A implies M within A",
          [(c, x) for c in C.objects if K.unit[c] in A[c] for x in M[c] if x not in A[c]])
    subgroup = all(K.unit[c] in P[c]
                   and all(K.mul(c, x, y) in P[c] for x in P[c] for y in P[c])
                   and all(any(K.mul(c, x, y) == K.unit[c] for y in P[c]) for x in P[c])
                   for c in C.objects)
    check("P subgroup implies P within M",
          [(c, x) for c in C.objects for x in P[c] if x not in M[c]] if subgroup else [])
    return Prop2InternalReport(A, M, clauses, wit)
