"""The adjoint string ``p_! ⊣ p* ⊣ p_* ⊣ p^!`` over a pre-cohesive site.

Sets are tuples in canonical order; set maps are dicts.  ``p_!`` is the set
of connected components of the category of elements, each component named
by its first element in canonical order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian

from .presheaf import NatTrans, Presheaf, _UnionFind, constant, product
from .site import NotPreCohesiveSite, check_precohesive_site


def components(X):
    """``(labels, index)``: component labels and the map ``(c, x) -> label``."""
    C = X.site
    elems = X.elements()
    uf = _UnionFind(elems)
    for f, (a, b) in C.morphisms.items():
        for x in X.sets[b]:
            uf.union((b, x), (a, X.maps[f][x]))
    index = {e: uf.rep(e) for e in elems}
    labels = []
    seen = set()
    for e in elems:
        r = index[e]
        if r not in seen:
            seen.add(r)
            labels.append(r)
    return tuple(labels), index


def pi0(X):
    return components(X)[0]


class AdjointString:
    """``p_!, p*, p_*, p^!`` with units and counits for a pre-cohesive site."""

    def __init__(self, C):
        verdict = check_precohesive_site(C)
        if not verdict:
            raise NotPreCohesiveSite(verdict.reason)
        self.site = C
        self.t = verdict.terminal

    # functors on objects
    def lower_shriek(self, X):
        return pi0(X)

    def pullback_star(self, S):
        return constant(self.site, S)

    def lower_star(self, X):
        return X.sets[self.t]

    def upper_shriek(self, S):
        """``p^! S (c) = S^{Hom(1, c)}``, functions as tuples over the points of c."""
        C = self.site
        S = tuple(S)
        sets = {c: list(cartesian(S, repeat=len(C.points(c)))) for c in C.objects}
        maps = {}
        for f, (d, c) in C.morphisms.items():
            pc, pd = C.points(c), C.points(d)
            idx = [pc.index(C.comp(f, q)) for q in pd]
            maps[f] = {phi: tuple(phi[i] for i in idx) for phi in sets[c]}
        return Presheaf(C, sets, maps, name="p^!S")

    # functors on morphisms
    def lower_shriek_map(self, alpha):
        _, src = components(alpha.source)
        _, tgt = components(alpha.target)
        out = {}
        for (c, x), label in src.items():
            out.setdefault(label, tgt[(c, alpha.components[c][x])])
        return out

    def pullback_star_map(self, h, S, S2):
        PS, PS2 = constant(self.site, S), constant(self.site, S2)
        return NatTrans(PS, PS2, {c: dict(h) for c in self.site.objects})

    def lower_star_map(self, alpha):
        return dict(alpha.components[self.t])

    def upper_shriek_map(self, h, S, S2):
        A, B = self.upper_shriek(S), self.upper_shriek(S2)
        return NatTrans(A, B, {c: {phi: tuple(h[s] for s in phi) for phi in A.sets[c]}
                               for c in self.site.objects})

    # units and counits
    def sigma(self, X):
        """Unit of ``p_! ⊣ p*``: ``X -> p* p_! X``."""
        labels, index = components(X)
        target = constant(self.site, labels, name="p*p_!X")
        return NatTrans(X, target, {c: {x: index[(c, x)] for x in X.sets[c]}
                                    for c in self.site.objects})

    def shriek_counit(self, S):
        """Counit of ``p_! ⊣ p*``: ``p_! p* S -> S``."""
        _, index = components(constant(self.site, S))
        return {label: label[1] for label in set(index.values())}

    def star_unit(self, S):
        """Unit of ``p* ⊣ p_*``: ``S -> p_* p* S``."""
        return {s: s for s in S}

    def beta(self, X):
        """Counit of ``p* ⊣ p_*``: ``p* p_* X -> X``, restriction along ``c -> 1``."""
        C = self.site
        src = constant(C, X.sets[self.t], name="p*p_*X")
        return NatTrans(src, X, {c: {x: X.maps[C.bang(c)][x] for x in src.sets[c]}
                                 for c in C.objects})

    def theta(self, X):
        """Unit of ``p_* ⊣ p^!``: ``X -> p^! p_* X``, evaluation at points."""
        C = self.site
        target = self.upper_shriek(X.sets[self.t])
        return NatTrans(X, target, {c: {x: tuple(X.maps[q][x] for q in C.points(c))
                                         for x in X.sets[c]} for c in C.objects})

    def shriek_upper_counit(self, S):
        """Counit of ``p_* ⊣ p^!``: ``p_* p^! S -> S``, value at the identity point."""
        C = self.site
        idx = C.points(self.t).index(C.identity(self.t))
        return {phi: phi[idx] for phi in self.upper_shriek(S).sets[self.t]}


def _compose_dicts(g, f):
    return {k: g[v] for k, v in f.items()}


def _is_identity_dict(d, domain):
    return set(d) == set(domain) and all(d[x] == x for x in domain)


@dataclass
class TriangleReport:
    failures: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self):
        return not self.failures


def check_triangles(adj, presheaves, sets):
    """All six triangle identities for the three adjunctions."""
    rep = TriangleReport()

    def record(ok, label):
        rep.checked += 1
        if not ok:
            rep.failures.append(label)

    for n, X in enumerate(presheaves):
        # p_! ⊣ p*: eps_{p_! X} ∘ p_!(sigma_X) = id
        labels = pi0(X)
        lhs = _compose_dicts(adj.shriek_counit(labels), adj.lower_shriek_map(adj.sigma(X)))
        record(_is_identity_dict(lhs, labels), f"p_! triangle on presheaf {n}")
        # p* ⊣ p_*: p_*(beta_X) ∘ eta_{p_* X} = id
        pts = adj.lower_star(X)
        lhs = _compose_dicts(adj.lower_star_map(adj.beta(X)), adj.star_unit(pts))
        record(_is_identity_dict(lhs, pts), f"p_* triangle on presheaf {n}")
        # p_* ⊣ p^!: zeta_{p_* X} ∘ p_*(theta_X) = id
        lhs = _compose_dicts(adj.shriek_upper_counit(pts), adj.lower_star_map(adj.theta(X)))
        record(_is_identity_dict(lhs, pts), f"p^! triangle on presheaf {n}")
    for S in sets:
        S = tuple(S)
        # p_! ⊣ p*: p*(eps_S) ∘ sigma_{p* S} = id
        PS = adj.pullback_star(S)
        sig = adj.sigma(PS)
        eps = adj.shriek_counit(S)
        comp = {c: {x: eps[sig.components[c][x]] for x in PS.sets[c]} for c in adj.site.objects}
        record(all(_is_identity_dict(comp[c], PS.sets[c]) for c in comp), f"p* triangle (shriek) on {S}")
        # p* ⊣ p_*: beta_{p* S} ∘ p*(eta_S) = id
        b = adj.beta(PS)
        eta = adj.star_unit(S)
        comp = {c: {s: b.components[c][eta[s]] for s in S} for c in adj.site.objects}
        record(all(_is_identity_dict(comp[c], S) for c in comp), f"p* triangle (star) on {S}")
        # p_* ⊣ p^!: p^!(zeta_S) ∘ theta_{p^! S} = id
        US = adj.upper_shriek(S)
        th = adj.theta(US)
        zeta = adj.shriek_upper_counit(S)
        ok = True
        for c in adj.site.objects:
            for phi in US.sets[c]:
                img = tuple(zeta[v] for v in th.components[c][phi])
                ok = ok and img == phi
        record(ok, f"p^! triangle on {S}")
    return rep


@dataclass
class HyperconnectedReport:
    beta_monic: bool
    sigma_epic: bool
    beta_witness: object = None
    sigma_witness: object = None


def hyperconnected_check(C, X):
    """Componentwise injectivity of beta and surjectivity of sigma.

    Also usable on sites that fail the pre-cohesion gate (via ``terminal``
    alone), where it exhibits the failure of sigma.
    """
    t = C.terminal()
    if t is None:
        raise NotPreCohesiveSite("no terminal object")
    beta_ok, beta_w = True, None
    for c in C.objects:
        m = C.bang(c)
        imgs = [X.maps[m][x] for x in X.sets[t]]
        if len(set(imgs)) != len(imgs):
            beta_ok, beta_w = False, c
            break
    labels, index = components(X)
    sigma_ok, sigma_w = True, None
    for c in C.objects:
        hit = {index[(c, x)] for x in X.sets[c]}
        if hit != set(labels):
            sigma_ok, sigma_w = False, c
            break
    return HyperconnectedReport(beta_ok, sigma_ok, beta_w, sigma_w)


def preserves_product(X, Y):
    """``p_!(X × Y) -> p_! X × p_! Y`` is a bijection."""
    P, p1, p2 = product(X, Y)
    _, ix = components(X)
    _, iy = components(Y)
    labels, ip = components(P)
    image = {}
    for (c, (x, y)), lab in ip.items():
        pair = (ix[(c, x)], iy[(c, y)])
        if image.setdefault(lab, pair) != pair:
            return False
    return len(set(image.values())) == len(labels) == len(pi0(X)) * len(pi0(Y))


def fully_faithful_check(adj, S, S2):
    """``Hom(p* S, p* S2) -> Hom(S, S2)`` is a bijection (counted)."""
    from .presheaf import hom_count
    return hom_count(adj.pullback_star(S), adj.pullback_star(S2)) == len(S2) ** len(S)
