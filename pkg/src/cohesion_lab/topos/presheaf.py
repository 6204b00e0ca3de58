"""Finite-set presheaves, natural transformations and their constructions."""
from __future__ import annotations


class SizeLimit(RuntimeError):
    """An enumeration exceeded its configured candidate bound."""


class NotAPresheaf(ValueError):
    pass


class NotNatural(ValueError):
    pass


DEFAULT_MAX_ENUMERATION = 10 ** 7


class Presheaf:
    """Contravariant functor from a :class:`FinCat` to finite sets.

    ``sets[c]`` is a tuple of hashable elements; ``maps[f]`` for ``f: a -> b``
    is a dict ``X(b) -> X(a)``.  Identity maps may be omitted.
    """

    def __init__(self, site, sets, maps, name=None, check=True):
        self.site = site
        self.sets = {c: tuple(sets[c]) for c in site.objects}
        full = {}
        for f, (a, b) in site.morphisms.items():
            if f in maps:
                full[f] = dict(maps[f])
            elif f == site.identity(a):
                full[f] = {x: x for x in self.sets[a]}
            else:
                raise NotAPresheaf(f"no restriction map given for {f}")
        self.maps = full
        self.name = name
        if check:
            self.validate()

    def validate(self):
        C = self.site
        for c, elems in self.sets.items():
            if len(set(elems)) != len(elems):
                raise NotAPresheaf(f"repeated elements at {c}")
        for f, (a, b) in C.morphisms.items():
            m = self.maps[f]
            if set(m) != set(self.sets[b]):
                raise NotAPresheaf(f"X({f}) is not total on X({b})")
            target = set(self.sets[a])
            if any(v not in target for v in m.values()):
                raise NotAPresheaf(f"X({f}) leaves X({a})")
            if f == C.identity(a) and any(k != v for k, v in m.items()):
                raise NotAPresheaf(f"X({f}) is not the identity")
        for (g, f), h in C.table.items():
            mg, mf, mh = self.maps[g], self.maps[f], self.maps[h]
            for x in self.sets[C.cod(g)]:
                if mh[x] != mf[mg[x]]:
                    raise NotAPresheaf(f"X({g} ∘ {f}) != X({f}) ∘ X({g}) at {x!r}")

    def restrict(self, f, x):
        return self.maps[f][x]

    def size(self, c=None):
        if c is None:
            return sum(len(s) for s in self.sets.values())
        return len(self.sets[c])

    def sizes(self):
        return {c: len(self.sets[c]) for c in self.site.objects}

    def elements(self):
        """Category-of-elements objects ``(c, x)`` in canonical order."""
        return [(c, x) for c in self.site.objects for x in self.sets[c]]

    def __eq__(self, other):
        return (isinstance(other, Presheaf) and self.site is other.site
                and self.sets == other.sets and self.maps == other.maps)

    def __hash__(self):
        return hash(tuple((c, self.sets[c]) for c in self.site.objects))

    def __repr__(self):
        body = ", ".join(f"{c}: {len(self.sets[c])}" for c in self.site.objects)
        return f"Presheaf({self.name or ''}{{{body}}})"


class NatTrans:
    """Natural transformation given by per-object dicts."""

    def __init__(self, source, target, components, check=True):
        self.source = source
        self.target = target
        self.components = {c: dict(components[c]) for c in source.site.objects}
        if check:
            self.validate()

    def validate(self):
        X, Y, C = self.source, self.target, self.source.site
        for c in C.objects:
            comp = self.components[c]
            if set(comp) != set(X.sets[c]):
                raise NotNatural(f"component at {c} is not total")
            ys = set(Y.sets[c])
            if any(v not in ys for v in comp.values()):
                raise NotNatural(f"component at {c} leaves Y({c})")
        for f, (a, b) in C.morphisms.items():
            for x in X.sets[b]:
                if self.components[a][X.maps[f][x]] != Y.maps[f][self.components[b][x]]:
                    raise NotNatural(f"naturality fails at {f} on {x!r}")

    def __call__(self, c, x):
        return self.components[c][x]

    def compose(self, first):
        """``self ∘ first``."""
        return NatTrans(first.source, self.target,
                        {c: {x: self.components[c][first.components[c][x]]
                             for x in first.source.sets[c]}
                         for c in first.source.site.objects}, check=False)

    def is_mono(self):
        return all(len(set(m.values())) == len(m) for m in self.components.values())

    def is_epi(self):
        return all(set(self.components[c].values()) == set(self.target.sets[c])
                   for c in self.target.site.objects)

    def is_iso(self):
        return self.is_mono() and self.is_epi()

    def key(self):
        """Hashable canonical form (images in the source's element order)."""
        return tuple(tuple(self.components[c][x] for x in self.source.sets[c])
                     for c in self.source.site.objects)

    def __eq__(self, other):
        return (isinstance(other, NatTrans) and self.source == other.source
                and self.target == other.target and self.components == other.components)

    def __hash__(self):
        return hash(self.key())

    @classmethod
    def identity(cls, X):
        return cls(X, X, {c: {x: x for x in X.sets[c]} for c in X.site.objects}, check=False)


# -- basic objects -------------------------------------------------------

def terminal(C):
    return Presheaf(C, {c: [()] for c in C.objects},
                    {f: {(): ()} for f in C.morphisms}, name="1")


def initial(C):
    return Presheaf(C, {c: [] for c in C.objects}, {f: {} for f in C.morphisms}, name="0")


def representable(C, c):
    """``y(c)``: ``y(c)(a) = Hom(a, c)``, restriction by precomposition."""
    sets = {a: C.hom(a, c) for a in C.objects}
    maps = {f: {g: C.comp(g, f) for g in sets[C.cod(f)]} for f in C.morphisms}
    return Presheaf(C, sets, maps, name=f"y({c})")


def constant(C, S, name=None):
    """``p* S``."""
    S = tuple(S)
    return Presheaf(C, {c: S for c in C.objects},
                    {f: {s: s for s in S} for f in C.morphisms}, name=name or "p*S")


def to_terminal(X):
    one = terminal(X.site)
    return NatTrans(X, one, {c: {x: () for x in X.sets[c]} for c in X.site.objects}, check=False)


def global_element(X, values):
    """``1 -> X`` from a compatible family ``values[c] in X(c)``."""
    return NatTrans(terminal(X.site), X, {c: {(): values[c]} for c in X.site.objects})


# -- limits --------------------------------------------------------------

def product(X, Y):
    """``X × Y`` with projections."""
    C = X.site
    sets = {c: [(x, y) for x in X.sets[c] for y in Y.sets[c]] for c in C.objects}
    maps = {f: {(x, y): (X.maps[f][x], Y.maps[f][y]) for (x, y) in sets[C.cod(f)]}
            for f in C.morphisms}
    P = Presheaf(C, sets, maps, check=False)
    p1 = NatTrans(P, X, {c: {e: e[0] for e in sets[c]} for c in C.objects}, check=False)
    p2 = NatTrans(P, Y, {c: {e: e[1] for e in sets[c]} for c in C.objects}, check=False)
    return P, p1, p2


def pairing(f, g, P):
    """``<f, g> : Z -> P`` into a product built by :func:`product`."""
    return NatTrans(f.source, P, {c: {z: (f.components[c][z], g.components[c][z])
                                      for z in f.source.sets[c]} for c in P.site.objects})


def product_map(f, g, source, target):
    """``f × g`` between products built by :func:`product`."""
    return NatTrans(source, target, {c: {(x, y): (f.components[c][x], g.components[c][y])
                                         for (x, y) in source.sets[c]}
                                     for c in source.site.objects}, check=False)


def coproduct(X, Y):
    """``X + Y`` with injections."""
    C = X.site
    sets = {c: [(0, x) for x in X.sets[c]] + [(1, y) for y in Y.sets[c]] for c in C.objects}
    maps = {}
    for f in C.morphisms:
        m = {(0, x): (0, X.maps[f][x]) for x in X.sets[C.cod(f)]}
        m.update({(1, y): (1, Y.maps[f][y]) for y in Y.sets[C.cod(f)]})
        maps[f] = m
    S = Presheaf(C, sets, maps, check=False)
    i1 = NatTrans(X, S, {c: {x: (0, x) for x in X.sets[c]} for c in C.objects}, check=False)
    i2 = NatTrans(Y, S, {c: {y: (1, y) for y in Y.sets[c]} for c in C.objects}, check=False)
    return S, i1, i2


def subpresheaf(X, members, name=None):
    """Sub-presheaf on ``members[c] ⊆ X(c)``; must be restriction-stable."""
    C = X.site
    sets = {c: [x for x in X.sets[c] if x in set(members[c])] for c in C.objects}
    maps = {f: {x: X.maps[f][x] for x in sets[C.cod(f)]} for f in C.morphisms}
    S = Presheaf(C, sets, maps, name=name)
    incl = NatTrans(S, X, {c: {x: x for x in sets[c]} for c in C.objects}, check=False)
    return S, incl


def pullback(f, g):
    """Pullback of ``f: X -> Z`` and ``g: Y -> Z`` as pairs with equal images."""
    X, Y = f.source, g.source
    C = X.site
    members = {c: [(x, y) for x in X.sets[c] for y in Y.sets[c]
                   if f.components[c][x] == g.components[c][y]] for c in C.objects}
    P0, p1, p2 = product(X, Y)
    P, incl = subpresheaf(P0, members)
    return P, p1.compose(incl), p2.compose(incl)


def equalizer(f, g):
    X = f.source
    members = {c: [x for x in X.sets[c] if f.components[c][x] == g.components[c][x]]
               for c in X.site.objects}
    return subpresheaf(X, members)


def coequalizer(f, g):
    """Pointwise quotient of ``Y`` by the relation generated by ``f(x) ~ g(x)``."""
    Y, C = f.target, f.source.site
    classes = {}
    for c in C.objects:
        uf = _UnionFind(Y.sets[c])
        for x in f.source.sets[c]:
            uf.union(f.components[c][x], g.components[c][x])
        classes[c] = uf
    # closing under restriction: the pointwise quotient is already functorial
    sets = {c: sorted({classes[c].rep(y) for y in Y.sets[c]}, key=Y.sets[c].index)
            for c in C.objects}
    maps = {h: {y: classes[C.dom(h)].rep(Y.maps[h][y]) for y in sets[C.cod(h)]}
            for h in C.morphisms}
    Q = Presheaf(C, sets, maps)
    q = NatTrans(Y, Q, {c: {y: classes[c].rep(y) for y in Y.sets[c]} for c in C.objects})
    return Q, q


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.order = {x: i for i, x in enumerate(items)}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        # smaller canonical index wins, for deterministic representatives
        if self.order[rb] < self.order[ra]:
            ra, rb = rb, ra
        self.parent[rb] = ra

    def rep(self, x):
        return self.find(x)


# -- hom enumeration -----------------------------------------------------

class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise SizeLimit(f"enumeration exceeded {self.limit} candidates")


def nat_trans(X, Y, limit=DEFAULT_MAX_ENUMERATION, injective=False):
    """Yield every natural transformation ``X -> Y``.

    Backtracking over the elements of X: choosing ``alpha(x)`` at stage c
    forces ``alpha`` on every restriction of x, which is propagated at once.
    """
    C = X.site
    into = {c: [(f, C.dom(f)) for f in C.into(c)] for c in C.objects}
    # objects with many incoming arrows first: their choices force the most
    objs = sorted(C.objects, key=lambda c: (-len(into[c]), C.objects.index(c)))
    order = [(c, x) for c in objs for x in X.sets[c]]
    assign = {c: {} for c in C.objects}
    budget = _Budget(limit)

    def place(c, x, y, trail):
        stack = [(c, x, y)]
        while stack:
            c0, x0, y0 = stack.pop()
            cur = assign[c0].get(x0)
            if cur is not None:
                if cur != y0:
                    return False
                continue
            if injective and y0 in assign[c0].values():
                return False
            assign[c0][x0] = y0
            trail.append((c0, x0))
            for f, a in into[c0]:
                stack.append((a, X.maps[f][x0], Y.maps[f][y0]))
        return True

    def undo(trail):
        for c0, x0 in trail:
            del assign[c0][x0]

    def rec(i):
        while i < len(order) and order[i][1] in assign[order[i][0]]:
            i += 1
        if i == len(order):
            yield NatTrans(X, Y, {c: dict(assign[c]) for c in C.objects}, check=False)
            return
        c, x = order[i]
        for y in Y.sets[c]:
            budget.spend()
            trail = []
            if place(c, x, y, trail):
                yield from rec(i + 1)
            undo(trail)

    yield from rec(0)


def hom_list(X, Y, limit=DEFAULT_MAX_ENUMERATION):
    return list(nat_trans(X, Y, limit))


def hom_count(X, Y, limit=DEFAULT_MAX_ENUMERATION):
    return sum(1 for _ in nat_trans(X, Y, limit))


def find_isomorphism(X, Y, limit=DEFAULT_MAX_ENUMERATION):
    """A natural isomorphism ``X -> Y`` by exhaustive search, or ``None``."""
    if X.sizes() != Y.sizes():
        return None
    for alpha in nat_trans(X, Y, limit, injective=True):
        return alpha
    return None


# -- exponentials --------------------------------------------------------

class Exponential:
    """``X^T`` with ``(X^T)(c) = Nat(y(c) × T, X)``.

    Elements are canonical keys of natural transformations; :meth:`nat`
    recovers the transformation and :meth:`apply` evaluates it.
    """

    def __init__(self, X, T, limit=DEFAULT_MAX_ENUMERATION):
        C = X.site
        self.X, self.T = X, T
        self.domains = {}
        sets, self._nats = {}, {}
        for c in C.objects:
            P, _, _ = product(representable(C, c), T)
            self.domains[c] = P
            nats = list(nat_trans(P, X, limit))
            sets[c] = [n.key() for n in nats]
            for n in nats:
                self._nats[(c, n.key())] = n
        maps = {}
        for f, (d, c) in C.morphisms.items():
            Pd = self.domains[d]
            m = {}
            for key in sets[c]:
                alpha = self._nats[(c, key)]
                comps = {a: {(g, t): alpha.components[a][(C.comp(f, g), t)] for (g, t) in Pd.sets[a]}
                         for a in C.objects}
                m[key] = NatTrans(Pd, X, comps, check=False).key()
            maps[f] = m
        self.presheaf = Presheaf(C, sets, maps, name="X^T")

    def nat(self, c, key):
        return self._nats[(c, key)]

    def apply(self, c, key, a, g, t):
        """Evaluate the element at stage ``c`` on ``(g: a -> c, t in T(a))``."""
        return self._nats[(c, key)].components[a][(g, t)]

    def ev(self, point):
        """``ev_t : X^T -> X`` at a global element ``point[c] in T(c)``."""
        C = self.X.site
        comps = {c: {key: self.apply(c, key, c, C.identity(c), point[c])
                     for key in self.presheaf.sets[c]} for c in C.objects}
        return NatTrans(self.presheaf, self.X, comps)

    def transpose(self, phi, Z):
        """``Z -> X^T`` from ``phi : Z × T -> X`` (``phi`` on pairs ``(z, t)``)."""
        C = self.X.site
        comps = {}
        for c in C.objects:
            Pc = self.domains[c]
            comps[c] = {}
            for z in Z.sets[c]:
                n = {a: {(g, t): phi.components[a][(Z.maps[g][z], t)] for (g, t) in Pc.sets[a]}
                     for a in C.objects}
                comps[c][z] = NatTrans(Pc, self.X, n, check=False).key()
        return NatTrans(Z, self.presheaf, comps)


def exponential(X, T, limit=DEFAULT_MAX_ENUMERATION):
    return Exponential(X, T, limit)

