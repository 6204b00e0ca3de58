"""Building scenario objects and running individual checks."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .. import affine
from ..algebra import (FpAlgebra, connectedness_certificate, get_order, idempotents,
                       parse_polynomial, points, renaming_isomorphism)
from ..rig import (FiniteRig, QIntervalSet, QLine, get_rig, verify_lemma_AM,
                   verify_prop2)
from ..topos import (AdjointString, BUILTIN_SITES, FIXTURES, Exponential,
                     check_precohesive_site, check_triangles, constant, constant_rig,
                     euler_reals_presheaf, exponential_instances, hom_count,
                     hyperconnected_check, pi0, pointed_T, presheaf_family,
                     preserves_product, product, prop1_check, prop2_internal,
                     representable, t_discrete_check, terminal, units_and_bidirectional)


@dataclass
class Config:
    max_enumeration: int = 10 ** 7
    idempotent_degree_bound: int = 4
    monomial_order: str = "grevlex"
    seed: int = 0

    def as_dict(self):
        return {"max_enumeration": self.max_enumeration,
                "idempotent_degree_bound": self.idempotent_degree_bound,
                "monomial_order": self.monomial_order, "seed": self.seed}


@dataclass
class Outcome:
    passed: bool
    artifacts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)


def _bool(v):
    return str(v).lower() == "true"


def _fmt_set(S):
    if isinstance(S, QIntervalSet):
        return str(S)
    return "{" + ", ".join(str(x) for x in sorted(S)) + "}"


class Builder:
    """Turns definition stanzas into objects, once each (thread-safe)."""

    def __init__(self, scenario, config):
        self.scenario = scenario
        self.config = config
        self._cache = {}
        self._lock = threading.RLock()

    def get(self, name):
        with self._lock:
            if name not in self._cache:
                st = self.scenario.definitions[name]
                self._cache[name] = getattr(self, "_build_" + st.kind)(st)
            return self._cache[name]

    def _build_algebra(self, st):
        gens = tuple(g.strip() for g in st.get("gens").split(",") if g.strip())
        rels = [parse_polynomial(r.strip(), list(gens))
                for r in (st.get("relations") or "").split(",") if r.strip()]
        order = get_order(st.get("order") or self.config.monomial_order)
        return FpAlgebra(gens, rels, order, name=st.name)

    def _build_scheme(self, st):
        return affine.PointedScheme.weil(self.get(st.get("algebra")), st.name)

    def _build_ring(self, st):
        keys = ("add", "mul", "zero", "one", "neg")
        defaults = {"add": "y + z", "mul": "y z", "zero": "0", "one": "1", "neg": "-x"}
        kwargs = {k: st.get(k, defaults[k]) for k in keys}
        return affine.RingObject.from_formulas(self.get(st.get("algebra")), name=st.name, **kwargs)

    def _build_site(self, st):
        return BUILTIN_SITES[st.get("builtin")]()

    def _build_presheaf(self, st):
        C = self.get(st.get("site"))
        if st.get("representable"):
            return representable(C, st.get("representable"))
        if st.get("constant") is not None:
            return constant(C, [e.strip() for e in st.get("constant").split(",") if e.strip()])
        return terminal(C)

    def _build_monoid(self, st):
        if st.get("fixture"):
            return FIXTURES[st.get("fixture")]()
        if st.get("rig"):
            C = self.get(st.get("site")) if st.get("site") else BUILTIN_SITES["retract"]()
            K = self.get(st.get("rig"))
            if not isinstance(K, FiniteRig):
                raise ValueError("internal rigs need a finite rig")
            return constant_rig(C, K)
        raise ValueError(f"monoid {st.name} needs a fixture or a rig")

    def _build_rig(self, st):
        return get_rig(st.get("builtin"))

    def _build_subset(self, st):
        K = self.get(st.get("rig"))
        if isinstance(K, QLine):
            if st.get("interval") is None:
                raise ValueError("subsets of Qline are given by 'interval'")
            return QIntervalSet.parse(st.get("interval"))
        raw = [e.strip() for e in (st.get("elements") or "").split(",") if e.strip()]
        lookup = {str(x): x for x in K.elements}
        missing = [e for e in raw if e not in lookup]
        if missing:
            raise ValueError(f"{missing} not in the carrier of {K.name}")
        return frozenset(lookup[e] for e in raw)


# -- checks -----------------------------------------------------------------

def check_prolongation(b, p):
    A, W = b.get(p["algebra"]), b.get(p["weil"])
    pro = affine.weil_prolongation(A, W)
    out = Outcome(True, {"prolongation": pro.algebra.presentation()})
    if p.get("expect_presentation"):
        target = _parse_presentation(p["expect_presentation"], b.config)
        mapping = renaming_isomorphism(pro.algebra, target)
        out.passed = mapping is not None
        out.artifacts["renaming"] = (", ".join(f"{k} -> {v}" for k, v in mapping.items())
                                     if mapping else "none")
    return out


def _parse_presentation(text, config):
    """``k[x, y]/(x y, y^2)`` to an algebra."""
    text = text.strip()
    if "/" in text and text.index("/") > text.index("]"):
        head, _, rels = text.partition("]/")
        head += "]"
        rels = rels.strip()
        if not (rels.startswith("(") and rels.endswith(")")):
            raise ValueError(f"bad presentation {text!r}")
        rels = rels[1:-1]
    else:
        head, rels = text, ""
    gens = tuple(g.strip() for g in head.strip()[2:-1].split(",") if g.strip()) if head != "k" else ()
    return FpAlgebra(gens, [parse_polynomial(r, list(gens)) for r in rels.split(",") if r.strip()],
                     get_order(config.monomial_order))


def check_euler(b, p):
    T = b.get(p["T"])
    E = affine.euler_reals(T)
    mult = affine.monoid_mult(E)
    laws = affine.monoid_laws(E.algebra, mult, affine.unit_point(E), affine.zero_point(E))
    art = {"R": f"R = {E.R}", "mult": f"mult: {mult.describe()}",
           "unit": f"unit: {affine.unit_point(E).describe()}",
           "zero": f"zero: {affine.zero_point(E).describe()}",
           "inclusion": f"inclusion: {E.inclusion_alg.describe()}",
           "commutative": laws.commutative}
    ok = laws.monoid_with_zero
    if p.get("expect_R"):
        ok = ok and str(E.R) == p["expect_R"]
    if p.get("expect_mult"):
        ok = ok and mult.describe() == p["expect_mult"]
    return Outcome(ok, art)


def check_euler_composition(b, p):
    res = affine.check_euler_composition(b.get(p["T"]))
    return Outcome(all(res.values()), {k: v for k, v in res.items()})


def check_euler_vs_ring(b, p):
    E = affine.euler_reals(b.get(p["T"]))
    ring = b.get(p["ring"])
    mult = affine.monoid_mult(E)
    same = ring.mul is not None and mult.domain == ring.mul.domain and mult == ring.mul
    return Outcome(same, {"euler mult": mult.describe(),
                          "ring mul": ring.mul.describe() if ring.mul else "undefined"})


def check_kl(b, p):
    ring = b.get(p["ring"])
    rep = affine.check_kl(ring)
    art = {"verdict": rep.verdict, "certificate": rep.certificate}
    art.update({f"dim {k}": ("infinite" if v is None else v) for k, v in rep.dims().items()})
    if rep.RD is not None:
        art["R^D"] = rep.RD.presentation()
    if rep.forward is not None:
        art["canonical map"] = rep.forward.describe()
    notes = list(ring.issues)
    expect = _bool(p.get("expect", "true"))
    return Outcome(rep.verdict is expect, art, notes)


def check_units(b, p):
    rep = affine.invertibles_scheme(b.get(p["ring"]), b.config.idempotent_degree_bound)
    cert = rep.certificate
    art = {"U": str(rep.U)}
    if cert is not None:
        art.update({"certificate degree": cert.degree, "ansatz size": cert.ansatz_size,
                    "nontrivial idempotents": len(cert.nontrivial),
                    "conclusive": cert.conclusive})
    return Outcome(cert is None or cert.no_nontrivial_idempotent, art)


def check_idempotents(b, p):
    A = b.get(p["algebra"])
    es = idempotents(A, seed=b.config.seed)
    out = Outcome(True, {"count": len(es), "idempotents": [str(e) for e in es]})
    if p.get("expect_count") is not None:
        out.passed = len(es) == int(p["expect_count"])
    return out


def check_points(b, p):
    ps = points(b.get(p["algebra"]))
    out = Outcome(True, {"rational": len(ps.morphisms), "geometric": ps.geometric,
                         "status": ps.status,
                         "points": [", ".join(str(v) for v in vals) for vals in ps.values]})
    if p.get("expect_count") is not None:
        out.passed = len(ps.morphisms) == int(p["expect_count"])
    return out


def check_connectedness(b, p):
    degree = int(p.get("degree", b.config.idempotent_degree_bound))
    cert = connectedness_certificate(b.get(p["algebra"]), degree)
    art = {"degree": cert.degree, "ansatz size": cert.ansatz_size,
           "solutions": [str(s) for s in cert.solutions], "conclusive": cert.conclusive}
    return Outcome(cert.no_nontrivial_idempotent is _bool(p.get("expect", "true")), art)


def check_site_gate(b, p):
    v = check_precohesive_site(b.get(p["site"]))
    art = {"precohesive": v.precohesive, "reason": v.reason,
           "witness": v.witness}
    ok = v.precohesive is _bool(p.get("expect", "true"))
    if p.get("expect_witness") is not None:
        ok = ok and str(v.witness) == p["expect_witness"]
    return Outcome(ok, art)


def _family(b, p):
    C = b.get(p["site"])
    fam = presheaf_family(C, int(p.get("count", 50)), int(p.get("max_size", 4)), b.config.seed)
    return C, fam


def check_triangles_(b, p):
    C, fam = _family(b, p)
    rep = check_triangles(AdjointString(C), fam, [(), (0,), (0, 1), (0, 1, 2)])
    return Outcome(rep.ok, {"presheaves": len(fam), "identities checked": rep.checked,
                            "failures": rep.failures})


def check_hyperconnected(b, p):
    C, fam = _family(b, p)
    bad = [n for n, X in enumerate(fam)
           if not (lambda r: r.beta_monic and r.sigma_epic)(hyperconnected_check(C, X))]
    return Outcome(not bad, {"presheaves": len(fam), "failing": bad})


def check_product(b, p):
    C, fam = _family(b, p)
    bad = [(i, j) for i, X in enumerate(fam) for j, Y in enumerate(fam)
           if j >= i and not preserves_product(X, Y)]
    pairs = len(fam) * (len(fam) + 1) // 2
    return Outcome(not bad, {"pairs": pairs, "failing": [list(x) for x in bad]})


def check_prop1(b, p):
    C, fam = _family(b, p)
    T, pt = pointed_T(C)
    R = euler_reals_presheaf(T, pt, b.config.max_enumeration)
    reports = [prop1_check(X, T, pt, R=R, limit=b.config.max_enumeration) for X in fam]
    n = len(pi0(R.monoid.carrier))
    art = {"R sizes": {str(k): v for k, v in R.monoid.carrier.sizes().items()},
           "pi0 R": n, "presheaves": len(fam)}
    if n != 1:
        return Outcome(True, art, ["R is not connected; the bijection is not asserted"])
    bad = [i for i, r in enumerate(reports) if not r.holds]
    art["failing"] = bad
    return Outcome(not bad, art)


def check_t_discrete(b, p):
    X = b.get(p["presheaf"])
    T, pt = pointed_T(X.site)
    ok = t_discrete_check(X, T, pt, b.config.max_enumeration)
    return Outcome(ok is _bool(p.get("expect", "true")), {"t_discrete": ok})


def check_exponential_oracle(b, p):
    C = b.get(p["site"])
    n = int(p.get("instances", 200))
    limit = b.config.max_enumeration
    bad = []
    for i, (Z, X, T) in enumerate(exponential_instances(C, n, int(p.get("max_size", 2)),
                                                        b.config.seed)):
        lhs = hom_count(Z, Exponential(X, T, limit).presheaf, limit)
        rhs = hom_count(product(Z, T)[0], X, limit)
        if lhs != rhs:
            bad.append([i, lhs, rhs])
    return Outcome(not bad, {"instances": n, "mismatches": bad})


def check_units_bidirectional(b, p):
    M = b.get(p["monoid"])
    rep = units_and_bidirectional(M)
    art = {"pi0 U": rep.pi0_size, "U sizes": {str(k): v for k, v in rep.U.sizes().items()},
           "U+ sizes": {str(k): v for k, v in rep.U_plus.sizes().items()},
           "pi0 U is a group": rep.pi0_is_group, "bidirectional": rep.bidirectional}
    if p.get("expect_components") is not None:
        return Outcome(rep.pi0_size == int(p["expect_components"]), art)
    return Outcome(rep.bidirectional is _bool(p.get("expect", "true")), art)


def _subsets(b, p, K):
    if p.get("subset"):
        return [b.get(p["subset"])]
    if isinstance(K, QLine):
        raise ValueError("Qline checks need an explicit subset")
    return K.subsets()


def _clause_outcome(reports, K):
    failures = []
    for r in reports:
        for clause in r.failed():
            failures.append(f"P = {_fmt_set(r.P)}: {clause} (witness {r.witnesses.get(clause)!s})")
    art = {"subsets": len(reports), "failures": failures}
    if len(reports) == 1:
        r = reports[0]
        art.update({"P": _fmt_set(r.P), "A": _fmt_set(r.A), "M": _fmt_set(r.M)})
    notes = sorted({n for r in reports for n in r.notes})
    return Outcome(not failures, art, notes)


def check_prop2(b, p):
    K = b.get(p["rig"])
    return _clause_outcome([verify_prop2(K, P) for P in _subsets(b, p, K)], K)


def check_lemma(b, p):
    K = b.get(p["rig"])
    ring = K.is_ring()
    out = _clause_outcome([verify_lemma_AM(K, P, clause1=ring) for P in _subsets(b, p, K)], K)
    if not ring:
        out.notes.append("not a ring: the first clause is not checked")
    return out


def check_prop2_internal(b, p):
    C, K = b.get(p["site"]), b.get(p["rig"])
    if not isinstance(K, FiniteRig):
        raise ValueError("internal comparison needs a finite rig")
    IR = constant_rig(C, K)
    disagreements, failing = [], []
    for P in _subsets(b, p, K):
        ri = prop2_internal(IR, {c: P for c in C.objects})
        re_ = verify_prop2(K, P)
        if any(ri.A[c] != re_.A or ri.M[c] != re_.M for c in C.objects):
            disagreements.append(_fmt_set(P))
        if not ri.ok:
            failing.append(_fmt_set(P))
    return Outcome(not disagreements and not failing,
                   {"disagreements": disagreements, "internal failures": failing})


CHECK_FUNCTIONS = {
    "prolongation": check_prolongation,
    "euler": check_euler,
    "euler_composition": check_euler_composition,
    "euler_vs_ring": check_euler_vs_ring,
    "kl": check_kl,
    "units": check_units,
    "idempotents": check_idempotents,
    "points": check_points,
    "connectedness": check_connectedness,
    "site_gate": check_site_gate,
    "triangles": check_triangles_,
    "hyperconnected": check_hyperconnected,
    "product": check_product,
    "prop1": check_prop1,
    "t_discrete": check_t_discrete,
    "exponential_oracle": check_exponential_oracle,
    "units_bidirectional": check_units_bidirectional,
    "prop2": check_prop2,
    "lemma": check_lemma,
    "prop2_internal": check_prop2_internal,
}

__all__ = ["Builder", "CHECK_FUNCTIONS", "Config", "Outcome"]
