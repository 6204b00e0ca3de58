"""Finitely presented commutative Q-algebras and their morphisms."""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .groebner import Ideal
from .parse import parse_polynomial
from .polynomial import GREVLEX, Polynomial, format_polynomial, get_order


class NotWellDefined(ValueError):
    """A proposed morphism sends a relation to a nonzero element."""

    def __init__(self, relation, image):
        self.relation = relation
        self.image = image
        super().__init__(f"relation {relation} maps to {image}, which is not zero")


class InfiniteDimensional(ValueError):
    pass


class PositiveDimensional(ValueError):
    pass


class FpAlgebra:
    """``Q[gens] / (relations)`` with a cached reduced Gröbner basis.

    Elements are polynomials in ``gens``; :meth:`reduce` gives the canonical
    representative (normal form).  The zero algebra (``1`` in the ideal) is an
    ordinary object.
    """

    def __init__(self, gens=(), relations=(), order=GREVLEX, name=None):
        self.gens = tuple(gens)
        if len(set(self.gens)) != len(self.gens):
            raise ValueError(f"repeated generator names in {self.gens}")
        self.order = get_order(order)
        rels = []
        for r in relations:
            if isinstance(r, str):
                r = parse_polynomial(r, self.gens)
            elif isinstance(r, Polynomial):
                if r.vars != self.gens:
                    r = r.embed(self.gens)
            else:
                r = Polynomial.constant(self.gens, r)
            rels.append(r)
        self.relations = tuple(rels)
        self.ideal = Ideal(self.relations, self.gens, self.order)
        self.name = name

    @classmethod
    def ground(cls):
        """The base field k = Q."""
        return cls((), ())

    @classmethod
    def free(cls, *gens):
        return cls(gens, ())

    # -- elements -----------------------------------------------------

    @property
    def basis(self):
        """Reduced Gröbner basis of the relation ideal."""
        return self.ideal.basis

    def reduce(self, f):
        if f.vars != self.gens:
            f = f.embed(self.gens)
        return self.ideal.normal_form(f)

    def element(self, x):
        """Coerce ``x`` (str, number or polynomial) to a reduced element."""
        if isinstance(x, str):
            x = parse_polynomial(x, self.gens)
        elif not isinstance(x, Polynomial):
            x = Polynomial.constant(self.gens, x)
        return self.reduce(x)

    def gen(self, name):
        return Polynomial.var(self.gens, name)

    def generators(self):
        return Polynomial.gens(self.gens)

    def zero(self):
        return Polynomial.zero(self.gens)

    def one(self):
        return self.reduce(Polynomial.one(self.gens))

    def equal(self, f, g):
        return not self.reduce(self.element(f) - self.element(g)).terms

    def contains(self, f):
        """Ideal membership of ``f`` in the relation ideal."""
        return self.ideal.contains(self.element(f) if isinstance(f, str) else f)

    def is_zero_algebra(self):
        return self.ideal.is_unit()

    def leading_monomials(self):
        return self.ideal.leading_monomials()

    # -- comparison and display --------------------------------------

    def same_presentation(self, other):
        """On-the-nose equality: same generators and same reduced basis."""
        return (self.gens == other.gens and self.order == other.order
                and self.basis == other.basis)

    def __eq__(self, other):
        return isinstance(other, FpAlgebra) and self.same_presentation(other)

    def __hash__(self):
        return hash((self.gens, self.order, self.basis))

    def presentation(self, reduced=True):
        """Human form, e.g. ``k[x, y]/(x y, y^2)``."""
        head = "k" if not self.gens else f"k[{', '.join(self.gens)}]"
        rels = self.basis if reduced else [r for r in self.relations if r]
        if not rels:
            return head
        return f"{head}/({', '.join(format_polynomial(r, self.order) for r in rels)})"

    def __str__(self):
        return self.presentation()

    def __repr__(self):
        return f"FpAlgebra({self.presentation()!r})"


class AlgMorphism:
    """Algebra map ``domain -> codomain`` given by generator images.

    Constructing with ``check=True`` (the default) verifies that every
    relation of the domain maps into the codomain's ideal.
    """

    def __init__(self, domain, codomain, images, check=True):
        self.domain = domain
        self.codomain = codomain
        images = list(images)
        if len(images) != len(domain.gens):
            raise ValueError(
                f"need {len(domain.gens)} images, got {len(images)}")
        self.images = tuple(codomain.element(im) for im in images)
        if check:
            for r in domain.relations:
                im = self._apply_raw(r)
                if im.terms:
                    raise NotWellDefined(format_polynomial(r), format_polynomial(im))

    def _apply_raw(self, f):
        if f.vars != self.domain.gens:
            f = f.embed(self.domain.gens)
        return self.codomain.reduce(f.subs(self.images, target=self.codomain.gens))

    def __call__(self, f):
        if isinstance(f, str):
            f = parse_polynomial(f, self.domain.gens)
        elif not isinstance(f, Polynomial):
            f = Polynomial.constant(self.domain.gens, f)
        return self._apply_raw(f)

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra, algebra.generators(), check=False)

    def compose(self, first):
        """``self ∘ first``: apply ``first`` then ``self``."""
        if first.codomain != self.domain:
            raise ValueError("morphisms are not composable")
        return AlgMorphism(first.domain, self.codomain,
                           [self(im) for im in first.images], check=False)

    def __eq__(self, other):
        return (isinstance(other, AlgMorphism) and self.domain == other.domain
                and self.codomain == other.codomain and self.images == other.images)

    def __hash__(self):
        return hash((self.domain, self.codomain, self.images))

    def is_identity(self):
        return self.domain == self.codomain and self.images == tuple(
            self.codomain.reduce(g) for g in self.domain.generators())

    def describe(self):
        """Generator images in the scenario grammar, e.g. ``x ↦ y z``."""
        if not self.domain.gens:
            return "(no generators)"
        return ", ".join(f"{g} ↦ {format_polynomial(im, self.codomain.order)}"
                         for g, im in zip(self.domain.gens, self.images))

    def __repr__(self):
        return f"AlgMorphism({self.domain} -> {self.codomain}: {self.describe()})"


def hom_check(domain, codomain, images):
    """Return the morphism if well defined, else raise :class:`NotWellDefined`."""
    return AlgMorphism(domain, codomain, images, check=True)


def ideal_membership_in(algebra, f):
    return algebra.contains(f)


# -- universal constructions ------------------------------------------

def _fresh(name, taken):
    cand = name
    i = 1
    while cand in taken:
        cand = f"{name}{i}"
        i += 1
    return cand


def _coproduct_names(left, right):
    if not set(left) & set(right):
        return list(left), list(right)
    if len(left) == 1 and len(right) == 1:
        return ["y"], ["z"]
    lnames = [f"{v}_1" for v in left]
    rnames = [f"{v}_2" for v in right]
    return lnames, rnames


def tensor_coproduct(A, B):
    """Coproduct ``A ⊗ B`` with injections ``(C, iA, iB)``.

    Generators are concatenated, renamed on collision: two one-generator
    factors become ``y`` and ``z``, otherwise suffixes ``_1``/``_2`` are added.
    """
    lnames, rnames = _coproduct_names(A.gens, B.gens)
    names = tuple(lnames + rnames)
    lmap = dict(zip(A.gens, lnames))
    rmap = dict(zip(B.gens, rnames))
    rels = [r.rename(lmap).embed(names) for r in A.relations]
    rels += [r.rename(rmap).embed(names) for r in B.relations]
    C = FpAlgebra(names, rels, A.order)
    iA = AlgMorphism(A, C, [C.gen(n) for n in lnames], check=False)
    iB = AlgMorphism(B, C, [C.gen(n) for n in rnames], check=False)
    return C, iA, iB


def copair(C, f, g):
    """Mediating map ``A ⊗ B -> D`` from ``f: A -> D`` and ``g: B -> D``."""
    if f.codomain != g.codomain:
        raise ValueError("copair needs a common codomain")
    return hom_check(C, f.codomain, list(f.images) + list(g.images))


def quotient(A, extra):
    """``A / (extra)`` with the canonical projection."""
    extra = [A.element(e) for e in extra]
    # start from the reduced basis: same ideal, cheaper completion
    B = FpAlgebra(A.gens, list(A.basis) + extra, A.order)
    proj = AlgMorphism(A, B, B.generators(), check=False)
    return B, proj


def rename(A, mapping):
    """Isomorphic copy with generators renamed; returns ``(B, iso, inverse)``."""
    names = tuple(mapping.get(g, g) for g in A.gens)
    B = FpAlgebra(names, [r.rename(mapping) for r in A.relations], A.order)
    iso = AlgMorphism(A, B, B.generators(), check=False)
    inv = AlgMorphism(B, A, A.generators(), check=False)
    return B, iso, inv


def renaming_isomorphism(A, B):
    """A bijection of generator names carrying A's ideal onto B's, or ``None``.

    Tries every bijection ``A.gens -> B.gens``; each candidate is compared
    through reduced Gröbner bases in B's monomial order.
    """
    if len(A.gens) != len(B.gens):
        return None
    for perm in permutations(B.gens):
        mapping = dict(zip(A.gens, perm))
        rels = [r.rename(mapping).embed(B.gens) for r in A.relations]
        if FpAlgebra(B.gens, rels, B.order) == B:
            return mapping
    return None


def direct_product(A, B):
    """Presentation of ``A × B`` with projections and the idempotent ``e``.

    Returns ``(C, pA, pB, e)`` where ``pA`` is the quotient by ``(1 - e)``
    and ``pB`` the quotient by ``(e)``.  A zero factor is dropped.
    """
    if B.is_zero_algebra():
        return A, AlgMorphism.identity(A), AlgMorphism(A, B, [0] * len(A.gens), check=False), A.one()
    if A.is_zero_algebra():
        return B, AlgMorphism(B, A, [0] * len(B.gens), check=False), AlgMorphism.identity(B), B.zero()
    lnames, rnames = _coproduct_names(A.gens, B.gens)
    e = _fresh("e", set(lnames) | set(rnames))
    names = tuple([e] + lnames + rnames)
    E = Polynomial.var(names, e)
    one = Polynomial.one(names)
    lmap = dict(zip(A.gens, lnames))
    rmap = dict(zip(B.gens, rnames))
    rels = [E * E - E]
    rels += [(one - E) * Polynomial.var(names, v) for v in lnames]
    rels += [E * Polynomial.var(names, v) for v in rnames]
    rels += [E * r.rename(lmap).embed(names) for r in A.relations]
    rels += [(one - E) * r.rename(rmap).embed(names) for r in B.relations]
    C = FpAlgebra(names, rels, A.order)
    pA = hom_check(C, A, [A.one()] + A.generators() + [0] * len(rnames))
    pB = hom_check(C, B, [B.zero()] + [0] * len(lnames) + B.generators())
    return C, pA, pB, C.gen(e)


def jointly_monic(C, maps, degree=None):
    """Check that ``c -> (f(c) for f in maps)`` is injective on ``C``.

    For finite-dimensional ``C`` this is exact (rank of the images of the
    standard monomials); otherwise standard monomials up to ``degree``
    (default 4) are tested.
    """
    from .finite import standard_monomials

    mons = standard_monomials(C, degree if degree is not None else 4)
    if not mons:
        return True
    columns = {}
    rows = []
    for exp in mons:
        m = Polynomial.monomial(C.gens, exp)
        vec = {}
        for k, f in enumerate(maps):
            for mexp, c in f(m).terms.items():
                vec[(k, mexp)] = c
        rows.append(vec)
        for key in vec:
            columns.setdefault(key, len(columns))
    from .linalg import rank

    dense = [[r.get(k, Fraction(0)) for k in columns] for r in rows]
    if not columns:
        return False
    return rank(dense) == len(mons)


def reorder(A, gens):
    """Same algebra over a permuted (or enlarged) generator list."""
    gens = tuple(gens)
    B = FpAlgebra(gens, [r.embed(gens) for r in A.relations], A.order)
    iso = AlgMorphism(A, B, [B.gen(g) for g in A.gens], check=False)
    inv_images = [A.gen(g) if g in A.gens else 0 for g in gens]
    inv = AlgMorphism(B, A, inv_images, check=False)
    return B, iso, inv
