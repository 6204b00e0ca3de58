"""Finite rigs given by operation tables."""
from __future__ import annotations

from itertools import product


class NotARig(ValueError):
    pass


class NotARing(ValueError):
    pass


class FiniteRig:
    """Carrier with ``+``/``·`` tables, additive unit ``zero`` and unit ``one``."""

    def __init__(self, name, elements, add, mul, zero, one, check=True):
        self.name = name
        self.elements = tuple(elements)
        self._add = dict(add)
        self._mul = dict(mul)
        self.zero = zero
        self.one = one
        if check:
            bad = self.violations()
            if bad:
                raise NotARig(f"{name}: {bad[0]}")

    @classmethod
    def from_functions(cls, name, elements, add, mul, zero, one):
        els = tuple(elements)
        return cls(name, els, {(x, y): add(x, y) for x in els for y in els},
                   {(x, y): mul(x, y) for x in els for y in els}, zero, one)

    def add(self, x, y):
        return self._add[(x, y)]

    def mul(self, x, y):
        return self._mul[(x, y)]

    def violations(self):
        E, a, m = self.elements, self.add, self.mul
        bad = []
        if any(v not in E for v in list(self._add.values()) + list(self._mul.values())):
            bad.append("tables leave the carrier")
            return bad
        triples = list(product(E, repeat=3))
        if any(a(a(x, y), z) != a(x, a(y, z)) for x, y, z in triples):
            bad.append("addition not associative")
        if any(a(x, y) != a(y, x) for x in E for y in E):
            bad.append("addition not commutative")
        if any(a(self.zero, x) != x for x in E):
            bad.append("zero is not an additive unit")
        if any(m(m(x, y), z) != m(x, m(y, z)) for x, y, z in triples):
            bad.append("multiplication not associative")
        if any(m(self.one, x) != x or m(x, self.one) != x for x in E):
            bad.append("one is not a multiplicative unit")
        if any(m(x, a(y, z)) != a(m(x, y), m(x, z)) or m(a(y, z), x) != a(m(y, x), m(z, x))
               for x, y, z in triples):
            bad.append("distributivity fails")
        if any(m(self.zero, x) != self.zero or m(x, self.zero) != self.zero for x in E):
            bad.append("zero is not absorbing")
        return bad

    def is_ring(self):
        return all(any(self.add(x, y) == self.zero for y in self.elements) for x in self.elements)

    def neg(self, x):
        for y in self.elements:
            if self.add(x, y) == self.zero:
                return y
        raise NotARing(f"{x} has no additive inverse in {self.name}")

    def subsets(self):
        """All subsets, smallest first, as frozensets."""
        E = self.elements
        out = []
        for mask in range(1 << len(E)):
            out.append(frozenset(E[i] for i in range(len(E)) if mask >> i & 1))
        out.sort(key=lambda s: (len(s), sorted(map(E.index, s))))
        return out

    def __repr__(self):
        return f"FiniteRig({self.name}, {len(self.elements)} elements)"


def zmod(n):
    return FiniteRig.from_functions(f"Z{n}", range(n), lambda x, y: (x + y) % n,
                                    lambda x, y: (x * y) % n, 0, 1)


def boolean_rig():
    return FiniteRig.from_functions("bool", (0, 1), lambda x, y: x | y, lambda x, y: x & y, 0, 1)


def minplus3():
    """Truncated tropical rig on ``{0, 1, 2}``: ``2`` plays infinity.

    Addition is ``min`` (so 2 is the zero) and multiplication is truncated
    addition ``min(x + y, 2)`` (so 0 is the one).
    """
    return FiniteRig.from_functions("minplus3", (0, 1, 2), min,
                                    lambda x, y: min(x + y, 2), 2, 0)


FINITE_CATALOG = {
    "Z2": lambda: zmod(2),
    "Z3": lambda: zmod(3),
    "Z4": lambda: zmod(4),
    "Z6": lambda: zmod(6),
    "bool": boolean_rig,
    "minplus3": minplus3,
}


def A_of_finite(K, P):
    """``A = {a | a + P ⊆ P}``."""
    P = frozenset(P)
    return frozenset(a for a in K.elements if all(K.add(a, p) in P for p in P))


def M_of_finite(K, A):
    """``M = {λ | λ A ⊆ A}``."""
    A = frozenset(A)
    return frozenset(l for l in K.elements if all(K.mul(l, a) in A for a in A))
