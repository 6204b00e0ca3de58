"""Finite unions of intervals of the rational line, in canonical form.

Endpoints are ``Fraction`` or ``±math.inf``; infinite endpoints are open.
Canonical form: nonempty, sorted, pairwise disjoint and non-adjacent
intervals, so equality of sets is equality of interval lists.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

INF = math.inf


def _num(x):
    if isinstance(x, float) and math.isinf(x):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class Interval:
    lo: object
    lo_closed: bool
    hi: object
    hi_closed: bool

    def __post_init__(self):
        object.__setattr__(self, "lo", _num(self.lo))
        object.__setattr__(self, "hi", _num(self.hi))
        if math.isinf(self.lo):
            object.__setattr__(self, "lo_closed", False)
        if math.isinf(self.hi):
            object.__setattr__(self, "hi_closed", False)

    def is_empty(self):
        if self.lo < self.hi:
            return False
        return not (self.lo == self.hi and self.lo_closed and self.hi_closed)

    def contains(self, x):
        x = Fraction(x)
        lo_ok = x > self.lo or (self.lo_closed and x == self.lo)
        hi_ok = x < self.hi or (self.hi_closed and x == self.hi)
        return lo_ok and hi_ok

    def sample(self):
        """Some element (for witnesses)."""
        if self.lo_closed:
            return self.lo
        if self.hi_closed:
            return self.hi
        if math.isinf(self.lo) and math.isinf(self.hi):
            return Fraction(0)
        if math.isinf(self.lo):
            return self.hi - 1
        if math.isinf(self.hi):
            return self.lo + 1
        return (self.lo + self.hi) / 2

    def __str__(self):
        if self.lo == self.hi:
            return "{" + _fmt(self.lo) + "}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{_fmt(self.lo)}, {_fmt(self.hi)}{right}"


def _fmt(x):
    if x == INF:
        return "oo"
    if x == -INF:
        return "-oo"
    return str(x)


def _canon(intervals):
    items = [i for i in intervals if not i.is_empty()]
    # sort by lower end, closed lower ends first
    items.sort(key=lambda i: (i.lo, not i.lo_closed))
    out = []
    for i in items:
        if out:
            last = out[-1]
            touching = i.lo < last.hi or (i.lo == last.hi and (i.lo_closed or last.hi_closed))
            if touching:
                if i.hi > last.hi or (i.hi == last.hi and i.hi_closed and not last.hi_closed):
                    out[-1] = Interval(last.lo, last.lo_closed, i.hi, i.hi_closed)
                continue
        out.append(i)
    return tuple(out)


class QIntervalSet:
    """Finite union of rational intervals."""

    def __init__(self, intervals=()):
        self.intervals = _canon(list(intervals))

    # constructors
    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def all(cls):
        return cls([Interval(-INF, False, INF, False)])

    @classmethod
    def point(cls, x):
        return cls([Interval(x, True, x, True)])

    @classmethod
    def interval(cls, lo, hi, lo_closed=True, hi_closed=True):
        return cls([Interval(lo, lo_closed, hi, hi_closed)])

    @classmethod
    def parse(cls, text):
        """Parse ``[0, oo) U (-oo, -1]``, ``{0}`` or ``empty``."""
        text = text.strip()
        if text in ("", "empty", "∅"):
            return cls()
        parts = re.split(r"\s*(?:∪|\bU\b)\s*", text)
        out = []
        num = r"\s*(-?oo|-?∞|-?\d+(?:/\d+)?)\s*"
        for part in parts:
            m = re.fullmatch(r"([\[(])" + num + "," + num + r"([\])])", part.strip())
            if m:
                out.append(Interval(_parse_end(m.group(2)), m.group(1) == "[",
                                    _parse_end(m.group(3)), m.group(4) == "]"))
                continue
            m = re.fullmatch(r"\{" + num + r"\}", part.strip())
            if m:
                x = _parse_end(m.group(1))
                out.append(Interval(x, True, x, True))
                continue
            raise ValueError(f"cannot parse interval {part!r}")
        return cls(out)

    # predicates
    def contains(self, x):
        return any(i.contains(x) for i in self.intervals)

    __contains__ = contains

    def is_empty(self):
        return not self.intervals

    def __eq__(self, other):
        return isinstance(other, QIntervalSet) and self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def issubset(self, other):
        return self.difference(other).is_empty()

    def __le__(self, other):
        return self.issubset(other)

    # set operations
    def union(self, other):
        return QIntervalSet(self.intervals + other.intervals)

    __or__ = union

    def intersection(self, other):
        out = []
        for a in self.intervals:
            for b in other.intervals:
                lo, lc = max((a.lo, not a.lo_closed), (b.lo, not b.lo_closed))
                hi, hc = min((a.hi, a.hi_closed), (b.hi, b.hi_closed))
                out.append(Interval(lo, not lc, hi, hc))
        return QIntervalSet(out)

    __and__ = intersection

    def complement(self):
        out = []
        lo, lo_closed = -INF, False
        for i in self.intervals:
            out.append(Interval(lo, lo_closed, i.lo, not i.lo_closed))
            lo, lo_closed = i.hi, not i.hi_closed
        out.append(Interval(lo, lo_closed, INF, False))
        return QIntervalSet(out)

    def difference(self, other):
        return self.intersection(other.complement())

    def sample(self):
        return self.intervals[0].sample() if self.intervals else None

    # arithmetic
    def translate(self, a):
        a = Fraction(a)
        return QIntervalSet([Interval(i.lo + a, i.lo_closed, i.hi + a, i.hi_closed)
                             for i in self.intervals])

    def scale(self, lam):
        lam = Fraction(lam)
        if lam == 0:
            return QIntervalSet.point(0) if self.intervals else QIntervalSet()
        out = []
        for i in self.intervals:
            if lam > 0:
                out.append(Interval(i.lo * lam, i.lo_closed, i.hi * lam, i.hi_closed))
            else:
                out.append(Interval(i.hi * lam, i.hi_closed, i.lo * lam, i.lo_closed))
        return QIntervalSet(out)

    def minkowski_sum(self, other):
        out = []
        for a in self.intervals:
            for b in other.intervals:
                out.append(Interval(a.lo + b.lo, a.lo_closed and b.lo_closed,
                                    a.hi + b.hi, a.hi_closed and b.hi_closed))
        return QIntervalSet(out)

    def product(self, other):
        """``{x y}``: split each factor by sign; products of sign-definite pieces are monotone."""
        out = []
        for a in self.intervals:
            for b in other.intervals:
                out.extend(_interval_product(a, b))
        return QIntervalSet(out)

    def inverse(self):
        """``{1/x}``; requires ``0`` not in the set."""
        if self.contains(0):
            raise ZeroDivisionError("0 has no inverse")
        out = []
        for i in self.intervals:
            neg, _, pos = _sign_pieces(i)
            if not pos.is_empty():
                out.append(_recip_interval_positive(pos))
            if not neg.is_empty():
                out.append(_negate(_recip_interval_positive(_negate(neg))))
        return QIntervalSet(out)

    def __str__(self):
        if not self.intervals:
            return "∅"
        return " ∪ ".join(str(i) for i in self.intervals)

    def __repr__(self):
        return f"QIntervalSet({self})"


def _parse_end(s):
    s = s.replace("∞", "oo")
    if s == "oo":
        return INF
    if s == "-oo":
        return -INF
    return Fraction(s)


def _recip_interval_positive(i):
    hi = INF if i.lo == 0 else 1 / i.lo
    lo = Fraction(0) if math.isinf(i.hi) else 1 / i.hi
    return Interval(lo, i.hi_closed, hi, i.lo_closed)


def _sign_pieces(i):
    """``(negative part, contains zero, positive part)``."""
    neg = Interval(i.lo, i.lo_closed, min(i.hi, Fraction(0)),
                   i.hi_closed if i.hi < 0 else False)
    pos = Interval(max(i.lo, Fraction(0)), i.lo_closed if i.lo > 0 else False,
                   i.hi, i.hi_closed)
    return neg, i.contains(0), pos


def _mul_end(x, y):
    if x == 0 or y == 0:
        return Fraction(0)
    return x * y


def _pos_product(a, b):
    # both within [0, oo], nonempty, lower ends >= 0
    return Interval(_mul_end(a.lo, b.lo), a.lo_closed and b.lo_closed,
                    _mul_end(a.hi, b.hi), a.hi_closed and b.hi_closed)


def _negate(i):
    return Interval(-i.hi, i.hi_closed, -i.lo, i.lo_closed)


def _interval_product(a, b):
    an, az, ap = _sign_pieces(a)
    bn, bz, bp = _sign_pieces(b)
    out = []
    if (az and not b.is_empty()) or (bz and not a.is_empty()):
        out.append(Interval(0, True, 0, True))
    for x, sx in ((an, -1), (ap, 1)):
        if x.is_empty():
            continue
        for y, sy in ((bn, -1), (bp, 1)):
            if y.is_empty():
                continue
            px = x if sx > 0 else _negate(x)
            py = y if sy > 0 else _negate(y)
            p = _pos_product(px, py)
            out.append(p if sx * sy > 0 else _negate(p))
    return out


class QLine:
    """The rational line as a (non-finite) ring, for interval subsets."""

    name = "Qline"
    zero = Fraction(0)
    one = Fraction(1)

    def is_ring(self):
        return True

    def add(self, x, y):
        return Fraction(x) + Fraction(y)

    def mul(self, x, y):
        return Fraction(x) * Fraction(y)

    def neg(self, x):
        return -Fraction(x)

    def __repr__(self):
        return "QLine()"


# -- A and M by endpoint arithmetic ------------------------------------------

def translates_into(I, J):
    """``{a : a + I ⊆ J}`` for intervals I, J (an interval, possibly empty).

    The lower condition is ``a + lo(I) >= lo(J)``, strict exactly when I's
    lower end is attained and J's is not; the upper condition is symmetric.
    Infinite ends require the matching end of J to be infinite.
    """
    if math.isinf(I.lo) and not math.isinf(J.lo):
        return QIntervalSet()
    if math.isinf(I.hi) and not math.isinf(J.hi):
        return QIntervalSet()
    if math.isinf(J.lo):
        lo, lo_closed = -INF, False
    else:
        lo, lo_closed = J.lo - I.lo, not (I.lo_closed and not J.lo_closed)
    if math.isinf(J.hi):
        hi, hi_closed = INF, False
    else:
        hi, hi_closed = J.hi - I.hi, not (I.hi_closed and not J.hi_closed)
    return QIntervalSet([Interval(lo, lo_closed, hi, hi_closed)])


def A_of_intervals(P):
    """``A = {a | a + P ⊆ P}`` as the intersection over components I of P
    of the union over components J of ``{a : a + I ⊆ J}``.

    A connected translate lies in P exactly when it lies in one component.
    """
    result = QIntervalSet.all()
    for I in P.intervals:
        ok = QIntervalSet()
        for J in P.intervals:
            ok = ok | translates_into(I, J)
        result = result & ok
    return result


_POS = QIntervalSet.interval(0, INF, False, False)
_NEG = QIntervalSet.interval(-INF, 0, False, False)


def _ray(x, y, ge, strict, sign):
    """``{λ of the given sign : λ x ⋈ y}`` with ⋈ one of >=, > (``ge``) or <=, <."""
    domain = _POS if sign > 0 else _NEG
    if (ge and y == -INF) or (not ge and y == INF):
        return domain
    if math.isinf(x):
        val = x if sign > 0 else -x
        holds = (val == INF) if ge else (val == -INF)
        return domain if holds else QIntervalSet()
    if math.isinf(y):
        return QIntervalSet()
    if x == 0:
        holds = (0 > y if strict else 0 >= y) if ge else (0 < y if strict else 0 <= y)
        return domain if holds else QIntervalSet()
    bound = y / x
    lower = ge if x > 0 else not ge
    if lower:
        ray = QIntervalSet.interval(bound, INF, not strict, False)
    else:
        ray = QIntervalSet.interval(-INF, bound, False, not strict)
    return ray & domain


def _scales_into(I, J, sign):
    """``{λ of the given sign : λ I ⊆ J}``."""
    if sign > 0:
        lo, lo_c, hi, hi_c = I.lo, I.lo_closed, I.hi, I.hi_closed
    else:
        lo, lo_c, hi, hi_c = I.hi, I.hi_closed, I.lo, I.lo_closed
    low = _ray(lo, J.lo, True, lo_c and not J.lo_closed, sign)
    high = _ray(hi, J.hi, False, hi_c and not J.hi_closed, sign)
    return low & high


def M_of_intervals(A):
    """``M = {λ | λ A ⊆ A}``, split into ``λ > 0``, ``λ = 0`` and ``λ < 0``."""
    result = QIntervalSet()
    if A.is_empty() or A.contains(0):
        result = QIntervalSet.point(0)
    for sign in (1, -1):
        part = _POS if sign > 0 else _NEG
        for I in A.intervals:
            ok = QIntervalSet()
            for J in A.intervals:
                ok = ok | _scales_into(I, J, sign)
            part = part & ok
        result = result | part
    return result
