"""Finite-dimensional algebras: staircases, idempotents, points, Weil tests.

Everything here works in coordinates on the monomial basis read off the
staircase of the reduced Gröbner basis.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, isqrt

import sympy

from .fpalgebra import (AlgMorphism, FpAlgebra, InfiniteDimensional,
                        PositiveDimensional, quotient)
from .linalg import krylov_minpoly, nullspace, rank, span_basis
from .polynomial import Polynomial


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def is_finite_dimensional(A):
    if A.is_zero_algebra():
        return True
    lms = A.leading_monomials()
    n = len(A.gens)
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            return False
    return True


def standard_monomials(A, degree=None):
    """Exponents of monomials outside the leading-term ideal.

    With ``degree=None`` the algebra must be finite-dimensional and the whole
    staircase is returned; otherwise monomials up to total ``degree``.
    """
    if A.is_zero_algebra():
        return []
    if degree is None and not is_finite_dimensional(A):
        raise InfiniteDimensional(f"{A} is infinite-dimensional")
    lms = A.leading_monomials()
    n = len(A.gens)
    start = (0,) * n
    seen = {start}
    frontier = [start]
    out = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                mm = m[:i] + (m[i] + 1,) + m[i + 1:]
                if mm in seen:
                    continue
                if degree is not None and sum(mm) > degree:
                    continue
                if any(_divides(l, mm) for l in lms):
                    continue
                seen.add(mm)
                nxt.append(mm)
                out.append(mm)
        frontier = nxt
    out.sort(key=A.order.key)
    return out


def finite_dim_basis(A):
    """Monomial basis (list of monomials) or ``None`` when infinite-dimensional."""
    if not is_finite_dimensional(A):
        return None
    return [Polynomial.monomial(A.gens, e) for e in standard_monomials(A)]


class FiniteStructure:
    """Coordinates and structure constants of a finite-dimensional algebra."""

    def __init__(self, A):
        if not is_finite_dimensional(A):
            raise InfiniteDimensional(f"{A} is infinite-dimensional")
        self.algebra = A
        self.exps = standard_monomials(A)
        self.index = {e: i for i, e in enumerate(self.exps)}
        self.n = len(self.exps)
        self.monomials = [Polynomial.monomial(A.gens, e) for e in self.exps]
        self._rows = {}
        self._traces = None

    def row(self, i):
        """Coordinates of ``m_i * m_j`` for all j (computed on first use)."""
        r = self._rows.get(i)
        if r is None:
            r = [self.coords(self.monomials[i] * self.monomials[j]) for j in range(self.n)]
            self._rows[i] = r
        return r

    @property
    def table(self):
        return [self.row(i) for i in range(self.n)]

    @property
    def traces(self):
        if self._traces is None:
            self._traces = [sum(self.row(l)[i][i] for i in range(self.n)) for l in range(self.n)]
        return self._traces

    def coords(self, f):
        f = self.algebra.reduce(f)
        v = [Fraction(0)] * self.n
        for exp, c in f.terms.items():
            v[self.index[exp]] = c
        return v

    def element(self, vec):
        acc = Polynomial.zero(self.algebra.gens)
        for c, m in zip(vec, self.monomials):
            if c:
                acc = acc + m * c
        return acc

    def unit(self):
        return self.coords(Polynomial.one(self.algebra.gens))

    def mul(self, u, v):
        out = [Fraction(0)] * self.n
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.row(i)
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] += ab * c
        return out

    def trace(self, u):
        return sum(a * t for a, t in zip(u, self.traces))

    def minpoly(self, a, unit=None):
        """Minimal polynomial of ``a`` in the unital subalgebra with ``unit``."""
        start = self.unit() if unit is None else unit
        return krylov_minpoly(lambda v: self.mul(a, v), start)

    def radical_dimension(self, piece_basis):
        """Dimension of the nilradical of the span ``piece_basis`` (char 0)."""
        gram = [[self.trace(self.mul(u, v)) for v in piece_basis] for u in piece_basis]
        return len(piece_basis) - rank(gram) if piece_basis else 0


@lru_cache(maxsize=256)
def structure(A):
    return FiniteStructure(A)


# -- univariate helpers (coefficient lists, lowest degree first) -------

_T = sympy.Symbol("t")


def _to_sympy(coeffs):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator)
                                     for c in coeffs])), _T, domain="QQ")


def _from_sympy(poly):
    cs = poly.all_coeffs()
    return [Fraction(int(c.p), int(c.q)) for c in reversed(cs)]


def factor_rational(coeffs):
    """Irreducible factorization over Q: list of ``(factor, multiplicity)``."""
    _, facs = _to_sympy(coeffs).factor_list()
    out = [(_from_sympy(f.monic()), k) for f, k in facs]
    out.sort(key=lambda fk: (len(fk[0]), [str(c) for c in fk[0]]))
    return out


def _divisors(n):
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(coeffs):
    """Distinct rational roots of a univariate polynomial (rational root test)."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    roots = set()
    while ints and ints[0] == 0:
        roots.add(Fraction(0))
        ints = ints[1:]
    if len(ints) <= 1:
        return sorted(roots)
    a0, an = ints[0], ints[-1]
    for p in _divisors(a0):
        for q in _divisors(an):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if r in roots:
                    continue
                val = 0
                for c in reversed(ints):
                    val = val * r + c
                if val == 0:
                    roots.add(r)
    return sorted(roots)


def _poly_eval_element(S, coeffs, a, unit):
    """Evaluate a univariate polynomial at element ``a`` (Horner)."""
    acc = [Fraction(0)] * S.n
    for c in reversed(coeffs):
        acc = S.mul(acc, a)
        if c:
            acc = [x + c * u for x, u in zip(acc, unit)]
    return acc


def _crt_idempotents(factors):
    """Univariate idempotent polynomials splitting ``prod f^k`` by CRT."""
    parts = [_to_sympy(f) ** k for f, k in factors]
    total = sympy.prod(parts)
    out = []
    for q in parts:
        rest = sympy.quo(total, q)
        s, t, g = sympy.gcdex(rest, q)
        # s*rest + t*q = 1, so s*rest is 1 mod q and 0 mod the other parts
        e = sympy.rem(s * rest, total)
        out.append(_from_sympy(sympy.Poly(e, _T, domain="QQ")))
    return out


def _piece_basis(S, unit):
    return span_basis([S.mul(unit, [Fraction(int(i == j)) for j in range(S.n)])
                       for i in range(S.n)])


def _candidates(S, basis, rng):
    for v in basis:
        yield v
    while True:
        coeffs = [rng.randint(-3, 3) for _ in basis]
        yield [sum(c * v[k] for c, v in zip(coeffs, basis)) for k in range(S.n)]


def _split(S, unit, rng, max_tries=400):
    basis = _piece_basis(S, unit)
    dim = len(basis)
    semisimple = dim - S.radical_dimension(basis)
    for tries, a in enumerate(_candidates(S, basis, rng)):
        if tries >= max_tries:
            raise RuntimeError("no splitting element found")
        m = S.minpoly(a, unit)
        facs = factor_rational(m)
        if len(facs) >= 2:
            pieces = []
            for poly in _crt_idempotents(facs):
                e = _poly_eval_element(S, poly, a, unit)
                pieces.extend(_split(S, e, rng, max_tries))
            return pieces
        if len(facs[0][0]) - 1 == semisimple:
            return [unit]
    raise RuntimeError("unreachable")


def primitive_idempotents(A, seed=0):
    """Primitive idempotents as coordinate vectors (empty for the zero algebra)."""
    if A.is_zero_algebra():
        return []
    S = structure(A)
    pieces = _split(S, S.unit(), random.Random(seed))
    return pieces


def idempotents(A, seed=0):
    """All solutions of ``e^2 = e`` in a finite-dimensional algebra.

    Found by recursive splitting on minimal polynomials of multiplication
    operators: an element whose minimal polynomial has coprime factors yields
    idempotents by the Chinese remainder theorem; a piece is local once some
    element generates its semisimple quotient with an irreducible minimal
    polynomial.  All idempotents are sums of the primitive ones.
    """
    if not is_finite_dimensional(A):
        raise InfiniteDimensional(
            f"{A} is infinite-dimensional; use connectedness_certificate")
    if A.is_zero_algebra():
        return [A.zero()]
    S = structure(A)
    prims = primitive_idempotents(A, seed)
    out = set()
    for r in range(len(prims) + 1):
        for combo in combinations(prims, r):
            v = [sum(col, Fraction(0)) for col in zip(*combo)] if combo else [Fraction(0)] * S.n
            out.add(S.element(v))
    return sorted(out, key=lambda p: (len(p.terms), str(p)))


def is_connected_finite(A):
    """Exactly two idempotents (finite-dimensional case)."""
    return not A.is_zero_algebra() and len(primitive_idempotents(A)) == 1


# -- points -------------------------------------------------------------

@dataclass
class PointSet:
    """Rational points of a zero-dimensional algebra.

    ``geometric`` counts all points over an algebraic closure; when it exceeds
    the number of rational points, some points only exist over an extension.
    """
    morphisms: list
    geometric: int
    status: str = field(default="complete")

    @property
    def values(self):
        return [tuple(m.images) for m in self.morphisms]


def geometric_point_count(A):
    if A.is_zero_algebra():
        return 0
    S = structure(A)
    basis = [[Fraction(int(i == j)) for j in range(S.n)] for i in range(S.n)]
    return S.n - S.radical_dimension(basis)


def _rational_points(A, prefix):
    if A.is_zero_algebra():
        return []
    i = len(prefix)
    if i == len(A.gens):
        return [tuple(prefix)]
    S = structure(A)
    m = S.minpoly(S.coords(A.gen(A.gens[i])))
    found = []
    for r in rational_roots(m):
        B, _ = quotient(A, [A.gen(A.gens[i]) - r])
        found.extend(_rational_points(B, prefix + [r]))
    return found


def points(A):
    """All algebra maps ``A -> Q`` of a zero-dimensional algebra.

    Each coordinate of a rational point is a rational eigenvalue of the
    corresponding multiplication operator; candidates are confirmed by
    checking that the quotient at the partial point is nonzero.
    """
    if not is_finite_dimensional(A):
        raise PositiveDimensional(f"{A} is positive-dimensional; point enumeration refused")
    k = FpAlgebra.ground()
    pts = _rational_points(A, [])
    morphisms = [AlgMorphism(A, k, list(p)) for p in pts]
    geo = geometric_point_count(A)
    status = "complete" if geo == len(pts) else "unknown over extension"
    return PointSet(morphisms, geo, status)


def is_weil(A):
    """Finite-dimensional with a unique rational point whose kernel is nilpotent."""
    if A.is_zero_algebra() or not is_finite_dimensional(A):
        return False
    pts = points(A)
    if len(pts.morphisms) != 1:
        return False
    point = pts.morphisms[0]
    S = structure(A)
    values = [point(m).constant_term() for m in S.monomials]
    # augmentation ideal = kernel of the point, as a subspace
    m_ideal = nullspace([values])
    power = m_ideal
    for _ in range(S.n + 1):
        if not power:
            return True
        nxt = span_basis([S.mul(u, v) for u in power for v in m_ideal])
        if len(nxt) == len(power):
            return False
        power = nxt
    return not power


def weil_point(A):
    """The unique rational point of a Weil algebra."""
    pts = points(A)
    if len(pts.morphisms) != 1:
        raise ValueError(f"{A} does not have a unique rational point")
    return pts.morphisms[0]


# -- degree-bounded connectedness ---------------------------------------

@dataclass
class ConnectednessCertificate:
    degree: int
    ansatz_size: int
    solutions: list
    nontrivial: list
    conclusive: bool

    @property
    def no_nontrivial_idempotent(self):
        return self.conclusive and not self.nontrivial


def connectedness_certificate(A, degree=4):
    """Search for idempotents ``e = sum c_m m`` over standard monomials of degree <= d.

    Solves the quadratic system ``e^2 = e`` exactly.  The system is
    zero-dimensional for finitely generated algebras, so all rational
    solutions are found; the certificate lists the nontrivial ones.
    """
    mons = standard_monomials(A, degree)
    if A.is_zero_algebra():
        return ConnectednessCertificate(degree, 0, [], [], True)
    cvars = tuple(f"c{i}" for i in range(len(mons)))
    polys = [Polynomial.monomial(A.gens, e) for e in mons]
    # coefficient of each standard monomial in e^2 - e, as a polynomial in c
    eqs = {}
    for i, j in combinations(range(len(mons)), 2):
        _accumulate(eqs, A.reduce(polys[i] * polys[j]), cvars, (i, j), 2)
    for i in range(len(mons)):
        _accumulate(eqs, A.reduce(polys[i] * polys[i]), cvars, (i, i), 1)
        _accumulate(eqs, polys[i], cvars, (i,), -1)
    system = [p for p in eqs.values() if p.terms]
    C = FpAlgebra(cvars, system)
    if not is_finite_dimensional(C):
        return ConnectednessCertificate(degree, len(mons), [], [], False)
    sols = _rational_points(C, [])
    elements = []
    for s in sols:
        elements.append(A.reduce(sum((p * c for p, c in zip(polys, s)), A.zero())))
    one = A.one()
    nontrivial = [e for e in elements if e.terms and e != one]
    return ConnectednessCertificate(degree, len(mons), elements, nontrivial, True)


def _accumulate(eqs, f, cvars, idx, scale):
    exp = [0] * len(cvars)
    for i in idx:
        exp[i] += 1
    exp = tuple(exp)
    for mexp, c in f.terms.items():
        p = eqs.get(mexp)
        add = Polynomial._raw(cvars, {exp: c * scale})
        eqs[mexp] = add if p is None else p + add


def is_local(A):
    return is_finite_dimensional(A) and not A.is_zero_algebra() and len(primitive_idempotents(A)) == 1


__all__ = [
    "ConnectednessCertificate", "FiniteStructure", "PointSet", "connectedness_certificate",
    "factor_rational", "finite_dim_basis", "geometric_point_count",
    "idempotents", "is_finite_dimensional", "is_weil", "points", "primitive_idempotents",
    "rational_roots", "standard_monomials", "structure", "weil_point",
]
