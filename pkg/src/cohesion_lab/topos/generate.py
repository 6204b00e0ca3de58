"""Seeded generation of small presheaf families for exhaustive checks."""
from __future__ import annotations

import random
from itertools import combinations

from .presheaf import Presheaf, initial, representable, terminal


def _random_presheaf(C, sizes, rng, max_steps=20000):
    """Random restriction maps for fixed sizes, by randomized backtracking."""
    sets = {c: list(range(sizes[c])) for c in C.objects}
    ids = set(C.identities.values())
    variables = [(f, x) for f in C.morphisms if f not in ids for x in sets[C.cod(f)]]
    maps = {f: {} for f in C.morphisms}
    for c in C.objects:
        maps[C.identity(c)] = {x: x for x in sets[c]}
    triples = [(g, f, h) for (g, f), h in C.table.items()]
    steps = [0]

    def consistent():
        for g, f, h in triples:
            mg, mf, mh = maps[g], maps[f], maps[h]
            for x, gx in mg.items():
                if x in mh and gx in mf and mh[x] != mf[gx]:
                    return False
        return True

    def rec(i):
        if i == len(variables):
            return True
        steps[0] += 1
        if steps[0] > max_steps:
            return False
        f, x = variables[i]
        choices = list(sets[C.dom(f)])
        rng.shuffle(choices)
        for y in choices:
            maps[f][x] = y
            if consistent() and rec(i + 1):
                return True
            del maps[f][x]
        return False

    if not rec(0):
        return None
    return Presheaf(C, sets, maps)


def _signature(X):
    C = X.site
    return (tuple(X.sets[c] for c in C.objects)
            + tuple(tuple(sorted(X.maps[f].items())) for f in C.morphisms))


def presheaf_family(C, count=50, max_size=4, seed=0):
    """At least ``count`` distinct presheaves with at most ``max_size`` elements per object.

    On the one-object site these are the subsets of ``{0, ..., 5}`` of size
    at most ``max_size``; elsewhere the terminal, initial and small
    representable presheaves come first, followed by seeded random ones.
    """
    if len(C.objects) == 1:
        c = C.objects[0]
        out = []
        for r in range(max_size + 1):
            for sub in combinations(range(6), r):
                out.append(Presheaf(C, {c: sub}, {f: {x: x for x in sub} for f in C.morphisms}))
        return out
    rng = random.Random(seed)
    family, seen = [], set()

    def add(X):
        if X is None or max(X.sizes().values(), default=0) > max_size:
            return
        sig = _signature(X)
        if sig not in seen:
            seen.add(sig)
            family.append(X)

    add(terminal(C))
    add(initial(C))
    for c in C.objects:
        add(representable(C, c))
    attempts = 0
    while len(family) < count and attempts < 50 * count:
        attempts += 1
        sizes = {c: rng.randint(0, max_size) for c in C.objects}
        add(_random_presheaf(C, sizes, rng))
    return family


def pointed(X):
    """Global elements of X as dicts ``c -> element`` (brute force)."""
    from .presheaf import nat_trans
    one = terminal(X.site)
    return [{c: a.components[c][()] for c in X.site.objects} for a in nat_trans(one, X)]


def exponential_instances(C, n, max_size=2, seed=0):
    """``n`` seeded triples ``(Z, X, T)`` of small presheaves for hom-count comparisons."""
    pool = presheaf_family(C, count=max(12, n // 10), max_size=max_size, seed=seed)
    rng = random.Random(seed + 1)
    return [(rng.choice(pool), rng.choice(pool), rng.choice(pool)) for _ in range(n)]
