"""Shipped internal monoids, rigs and pointed objects."""
from __future__ import annotations

from .internal import InternalMonoid
from .presheaf import constant, coproduct, representable, terminal
from .site import BUILTIN_SITES, retract_site


def surrogate_group():
    """``ℤ/2 × y(c)`` on the retract site, a group with two components.

    The carrier is ``y(c) + y(c)``.  At stage c the elements are ``(i, g)``
    with ``g ∈ {idc, e}``; the sign ``i`` adds mod 2 and the second
    coordinate forms the group ``{e, idc}`` with unit ``e``.  At stage 1 the
    second coordinate is always ``s``.
    """
    C = retract_site()
    Y = representable(C, "c")
    X, _, _ = coproduct(Y, Y)

    def mul(c, x, y):
        (i, g), (j, h) = x, y
        k = (i + j) % 2
        if c == "1":
            return (k, "s")
        return (k, "e" if g == h else "idc")

    unit = {"c": (0, "e"), "1": (0, "s")}
    return InternalMonoid.from_functions(X, mul, unit, name="Z2 x y(c)")


def constant_monoid01(site=None):
    """``p*{0, 1}`` under multiplication."""
    C = site or retract_site()
    X = constant(C, (0, 1), name="p*{0,1}")
    return InternalMonoid.from_functions(X, lambda c, x, y: x * y,
                                         {c: 1 for c in C.objects}, name="{0,1}")


def constant_rig(site, K):
    """The constant internal rig ``p* K`` of a finite rig K."""
    X = constant(site, K.elements, name=f"p*{K.name}")
    return InternalMonoid.from_functions(
        X, lambda c, x, y: K.mul(x, y), {c: K.one for c in site.objects},
        add=lambda c, x, y: K.add(x, y), zero={c: K.zero for c in site.objects},
        name=f"p*{K.name}")


def pointed_T(site):
    """The test object T with its base point, per accepted builtin site."""
    name = site.name
    if name == "point":
        return terminal(site), {"1": ()}
    if name == "retract":
        return representable(site, "c"), {"c": "e", "1": "s"}
    if name == "interval":
        return representable(site, "I"), {"I": "e0", "1": "s0"}
    raise KeyError(f"no pointed test object for site {name!r}")


FIXTURES = {
    "surrogate_group": surrogate_group,
    "constant_monoid01": constant_monoid01,
}

ACCEPTED_SITES = tuple(n for n in BUILTIN_SITES if n != "arrow")
