"""Finite categories given by explicit composition tables."""
from __future__ import annotations

from dataclasses import dataclass


class InvalidCategory(ValueError):
    pass


class FinCat:
    """A finite category.

    ``morphisms`` maps a name to ``(domain, codomain)``; ``compose`` maps
    ``(g, f)`` to the name of ``g ∘ f`` (defined when ``cod f == dom g``).
    Missing composites with an identity factor are filled in.
    """

    def __init__(self, objects, morphisms, identities, compose, name=None, terminal=None):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.identities = dict(identities)
        table = dict(compose)
        for f, (a, b) in self.morphisms.items():
            table.setdefault((self.identities[b], f), f)
            table.setdefault((f, self.identities[a]), f)
        self.table = table
        self.name = name
        self._terminal = terminal
        self._into = {c: tuple(f for f in self.morphisms if self.cod(f) == c) for c in self.objects}
        self._hom = {}
        for f, (a, b) in self.morphisms.items():
            self._hom.setdefault((a, b), []).append(f)
        self.validate()

    def dom(self, f):
        return self.morphisms[f][0]

    def cod(self, f):
        return self.morphisms[f][1]

    def identity(self, c):
        return self.identities[c]

    def comp(self, g, f):
        """``g ∘ f``."""
        try:
            return self.table[(g, f)]
        except KeyError:
            raise InvalidCategory(f"composite {g} ∘ {f} undefined") from None

    def hom(self, a, b):
        return tuple(self._hom.get((a, b), ()))

    def into(self, c):
        """All morphisms with codomain ``c``."""
        return self._into[c]

    def validate(self):
        for c in self.objects:
            i = self.identities.get(c)
            if i is None or self.morphisms.get(i) != (c, c):
                raise InvalidCategory(f"object {c} lacks an identity")
        for f, (a, b) in self.morphisms.items():
            if a not in self.objects or b not in self.objects:
                raise InvalidCategory(f"morphism {f} has unknown endpoints")
        for f in self.morphisms:
            for g in self.morphisms:
                if self.cod(f) != self.dom(g):
                    continue
                h = self.table.get((g, f))
                if h is None:
                    raise InvalidCategory(f"composite {g} ∘ {f} missing")
                if self.morphisms[h] != (self.dom(f), self.cod(g)):
                    raise InvalidCategory(f"composite {g} ∘ {f} = {h} has wrong type")
        for f in self.morphisms:
            for g in self.morphisms:
                if self.cod(f) != self.dom(g):
                    continue
                for h in self.morphisms:
                    if self.cod(g) != self.dom(h):
                        continue
                    if self.table[(h, self.table[(g, f)])] != self.table[(self.table[(h, g)], f)]:
                        raise InvalidCategory(f"composition not associative at {h}, {g}, {f}")
        if self._terminal is not None and not self._is_terminal(self._terminal):
            raise InvalidCategory(f"declared terminal {self._terminal} is not terminal")

    def _is_terminal(self, t):
        return all(len(self.hom(c, t)) == 1 for c in self.objects)

    def terminal(self):
        """A terminal object, or ``None``."""
        if self._terminal is not None:
            return self._terminal
        return next((t for t in self.objects if self._is_terminal(t)), None)

    def bang(self, c):
        """The unique morphism ``c -> 1``."""
        return self.hom(c, self.terminal())[0]

    def points(self, c):
        return self.hom(self.terminal(), c)

    def __repr__(self):
        return f"FinCat({self.name or 'anonymous'}: {len(self.objects)} objects, {len(self.morphisms)} morphisms)"


def _from_monoid_words(objects, morphisms, identities, composite):
    """Fill a composition table by calling ``composite(g, f)`` on composable pairs."""
    table = {}
    for f, (a, b) in morphisms.items():
        for g, (c, d) in morphisms.items():
            if b == c:
                table[(g, f)] = composite(g, f)
    return table


def point_site():
    """One object, one morphism: presheaves are sets."""
    return FinCat(["1"], {"id": ("1", "1")}, {"1": "id"}, {}, name="point", terminal="1")


def arrow_site():
    """``0 -> 1``; 1 is terminal but 0 has no point."""
    morphisms = {"id0": ("0", "0"), "id1": ("1", "1"), "f": ("0", "1")}
    return FinCat(["0", "1"], morphisms, {"0": "id0", "1": "id1"}, {}, name="arrow")


def retract_site():
    """``1 ⇄ c`` with ``p ∘ s = id`` and the idempotent ``e = s ∘ p``."""
    morphisms = {"id1": ("1", "1"), "idc": ("c", "c"), "s": ("1", "c"),
                 "p": ("c", "1"), "e": ("c", "c")}
    ids = {"1": "id1", "c": "idc"}
    rules = {("p", "s"): "id1", ("s", "p"): "e", ("e", "e"): "e", ("e", "s"): "s",
             ("p", "e"): "p"}

    def composite(g, f):
        if g in ids.values():
            return f
        if f in ids.values():
            return g
        return rules[(g, f)]

    return FinCat(["1", "c"], morphisms, ids,
                  _from_monoid_words(["1", "c"], morphisms, ids, composite),
                  name="retract", terminal="1")


def interval_site():
    """Two points ``s0, s1 : 1 -> I`` with common retraction ``p``.

    Presheaves are reflexive graphs: vertices at 1, edges at I.
    """
    morphisms = {"id1": ("1", "1"), "idI": ("I", "I"), "s0": ("1", "I"), "s1": ("1", "I"),
                 "p": ("I", "1"), "e0": ("I", "I"), "e1": ("I", "I")}
    ids = {"1": "id1", "I": "idI"}
    # e_i = s_i ∘ p
    section = {"e0": "s0", "e1": "s1"}

    def composite(g, f):
        if g in ids.values():
            return f
        if f in ids.values():
            return g
        if g == "p":
            return "id1" if f in ("s0", "s1") else "p"
        if g in ("s0", "s1"):  # f == p
            return "e0" if g == "s0" else "e1"
        # g is e_i: result is s_i if f is a section, else e_i
        return section[g] if f in ("s0", "s1") else g

    return FinCat(["1", "I"], morphisms, ids,
                  _from_monoid_words(["1", "I"], morphisms, ids, composite),
                  name="interval", terminal="1")


BUILTIN_SITES = {
    "point": point_site,
    "arrow": arrow_site,
    "retract": retract_site,
    "interval": interval_site,
}


@dataclass
class SiteVerdict:
    precohesive: bool
    terminal: object
    witness: object = None
    reason: str = ""

    def __bool__(self):
        return self.precohesive


def check_precohesive_site(C):
    """Has a terminal object and every object has a point."""
    t = C.terminal()
    if t is None:
        return SiteVerdict(False, None, None, "no terminal object")
    for c in C.objects:
        if not C.points(c):
            return SiteVerdict(False, t, c, f"object {c} has no point (Hom({t}, {c}) is empty)")
    return SiteVerdict(True, t, None, "terminal object and every object has a point")


class NotPreCohesiveSite(ValueError):
    pass
