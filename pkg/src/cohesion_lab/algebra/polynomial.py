"""Exact multivariate polynomials over the rationals.

A polynomial lives in an ambient ring ``Q[v1, ..., vn]`` fixed by its tuple
of variable names.  Terms are stored as ``{exponent tuple: Fraction}`` with
zero coefficients never stored, so two polynomials are equal exactly when
their variable tuples and term dictionaries agree.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class MonomialOrder:
    """A monomial order given by a sort key on exponent tuples.

    Larger keys are larger monomials.  Orders compare equal by name, so
    they can be used as cache keys.
    """

    __slots__ = ("name", "key")

    def __init__(self, name, key):
        self.name = name
        self.key = key

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.name == other.name

    def __hash__(self):
        return hash(("MonomialOrder", self.name))

    def __repr__(self):
        return f"MonomialOrder({self.name!r})"


def _lex_key(exp):
    return exp


def _grlex_key(exp):
    return (sum(exp), exp)


def _grevlex_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


LEX = MonomialOrder("lex", _lex_key)
GRLEX = MonomialOrder("grlex", _grlex_key)
GREVLEX = MonomialOrder("grevlex", _grevlex_key)

ORDERS = {o.name: o for o in (LEX, GRLEX, GREVLEX)}


def elimination_order(k):
    """Block order: the first ``k`` variables are eliminated first.

    Each block is compared by grevlex; the block of the first ``k`` variables
    dominates.
    """
    def key(exp):
        return (_grevlex_key(exp[:k]), _grevlex_key(exp[k:]))

    return MonomialOrder(f"elim{k}", key)


def get_order(order):
    if isinstance(order, MonomialOrder):
        return order
    if order.startswith("elim"):
        return elimination_order(int(order[4:]))
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None


def _coerce_scalar(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not a rational scalar: {c!r}")


class Polynomial:
    """Immutable polynomial with rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} does not match variables {self.vars}")
                c = _coerce_scalar(c)
                if c:
                    clean[exp] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.vars = variables
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        c = _coerce_scalar(c)
        if not c:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): c})

    @classmethod
    def one(cls, variables):
        return cls.constant(variables, 1)

    @classmethod
    def var(cls, variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls._raw(variables, {exp: Fraction(1)})

    @classmethod
    def gens(cls, variables):
        return [cls.var(variables, v) for v in variables]

    @classmethod
    def monomial(cls, variables, exp, c=1):
        return cls(variables, {tuple(exp): c})

    # -- basic protocol -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.vars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def variables_used(self):
        used = set()
        for exp in self.terms:
            used.update(i for i, e in enumerate(exp) if e)
        return {self.vars[i] for i in used}

    # -- arithmetic ---------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return Polynomial.constant(self.vars, other)

    def __add__(self, other):
        other = self._lift(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial._raw(self.vars, res)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _coerce_scalar(other)
            if not c:
                return Polynomial._raw(self.vars, {})
            return Polynomial._raw(self.vars, {m: v * c for m, v in self.terms.items()})
        other = self._lift(other)
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = res.get(m, 0) + c1 * c2
                if s:
                    res[m] = s
                else:
                    res.pop(m, None)
        return Polynomial._raw(self.vars, res)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = _coerce_scalar(c)
        return self * (1 / c)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, exp, c):
        """Multiply by the single term ``c * x^exp``."""
        return Polynomial._raw(
            self.vars,
            {tuple(a + b for a, b in zip(m, exp)): v * c for m, v in self.terms.items()},
        )

    # -- orders -------------------------------------------------------

    def leading_term(self, order=GREVLEX):
        """Return ``(exponent, coefficient)`` of the largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = get_order(order).key
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def leading_monomial(self, order=GREVLEX):
        return self.leading_term(order)[0]

    def monic(self, order=GREVLEX):
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self * (1 / c)

    def sorted_terms(self, order=GREVLEX):
        key = get_order(order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    # -- substitution and change of ring ------------------------------

    def subs(self, images, target=None):
        """Substitute ``images[i]`` for the i-th variable.

        ``images`` is a sequence of polynomials sharing one ambient ring, or
        a mapping from variable name to such polynomials (missing names are
        kept, which requires the target ring to contain them).  ``target``
        fixes the result's ring when no image is a polynomial.
        """
        if isinstance(images, dict):
            target = None
            for v in images.values():
                if isinstance(v, Polynomial):
                    target = v.vars
                    break
            if target is None:
                target = self.vars
            images = [
                images[name] if name in images else Polynomial.var(target, name)
                for name in self.vars
            ]
        images = list(images)
        if len(images) != len(self.vars):
            raise ValueError("need one image per variable")
        if target is None:
            for im in images:
                if isinstance(im, Polynomial):
                    target = im.vars
                    break
            else:
                target = ()
        target = tuple(target)
        images = [im if isinstance(im, Polynomial) else Polynomial.constant(target, im) for im in images]
        powers = [{0: Polynomial.one(target), 1: im} for im in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e // 2) * power(i, e - e // 2)
            return cache[e]

        acc = Polynomial.zero(target)
        for exp, c in self.terms.items():
            t = Polynomial.constant(target, c)
            for i, e in enumerate(exp):
                if e:
                    t = t * power(i, e)
            acc = acc + t
        return acc

    def rename(self, mapping):
        """Rename variables; the exponent layout is unchanged."""
        return Polynomial._raw(tuple(mapping.get(v, v) for v in self.vars), dict(self.terms))

    def embed(self, variables):
        """Re-express in a ring whose variables include all used ones."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        res = {}
        n = len(variables)
        for exp, c in self.terms.items():
            new = [0] * n
            for i, e in enumerate(exp):
                if e:
                    try:
                        new[pos[self.vars[i]]] = e
                    except KeyError:
                        raise ValueError(
                            f"variable {self.vars[i]!r} missing from {variables}"
                        ) from None
            res[tuple(new)] = c
        return Polynomial._raw(variables, res)

    def evaluate(self, point):
        """Evaluate at rational values, one per variable."""
        total = Fraction(0)
        for exp, c in self.terms.items():
            t = c
            for x, e in zip(point, exp):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), Fraction(0))

    # -- printing -----------------------------------------------------

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, vars={self.vars})"


def format_monomial(variables, exp):
    parts = []
    for v, e in zip(variables, exp):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return " ".join(parts)


def _format_coeff(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_polynomial(p, order=GREVLEX):
    """Render in the scenario grammar, e.g. ``3/2 x^2 y - 1``."""
    if not p.terms:
        return "0"
    out = []
    for k, (exp, c) in enumerate(p.sorted_terms(order)):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(p.vars, exp)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)} {mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
