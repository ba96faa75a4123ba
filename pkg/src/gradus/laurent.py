"""
Exact Laurent polynomials in ``v`` over Q and their fraction field Q(v).

Two value types are provided:

* :class:`LaurentScalar` -- a finite sum ``sum c_k v^k`` with rational
  coefficients, stored sparsely with no zero coefficients.
* :class:`FieldScalar` -- a quotient of two Laurent polynomials kept in a
  reduced canonical form, so equality is structural.

Both are immutable and hashable.  The bar involution ``v -> v^-1`` is
available as :func:`bar` and as a method on each type.

Examples
========

>>> from gradus.laurent import v, LaurentScalar
>>> e = 1 + v**2
>>> e.bar()
LaurentScalar('1*v^-2 + 1*v^0')
>>> (e * e.bar()).lowest_degree()
(-2, Fraction(1, 1))
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from .errors import NegativeExponent, ZeroPolynomial, ParseError

Rational = Union[int, Fraction]


class LaurentScalar:
    """A Laurent polynomial ``sum c_k v^k`` with rational coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Union[Mapping[int, Rational], str, Rational, None] = None):
        if isinstance(coefficients, str):
            coefficients = parse_laurent(coefficients)._c
        elif isinstance(coefficients, (int, Fraction)):
            coefficients = {0: coefficients}
        c: Dict[int, Fraction] = {}
        if coefficients:
            for k, a in coefficients.items():
                a = Fraction(a)
                if a:
                    c[int(k)] = a
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, Fraction]) -> "LaurentScalar":
        # trusted constructor: c already has no zero entries
        obj = object.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, k: int, a: Rational = 1) -> "LaurentScalar":
        return cls({k: a})

    # -- inspection -------------------------------------------------------
    @property
    def coefficients(self) -> Dict[int, Fraction]:
        return dict(self._c)

    def items(self) -> List[Tuple[int, Fraction]]:
        return sorted(self._c.items())

    def coeff(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def min_exp(self) -> int:
        if not self._c:
            raise ZeroPolynomial("zero Laurent polynomial has no degree")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ZeroPolynomial("zero Laurent polynomial has no degree")
        return max(self._c)

    def lowest_degree(self) -> Tuple[int, Fraction]:
        """Minimal exponent with nonzero coefficient, and that coefficient."""
        k = self.min_exp()
        return k, self._c[k]

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self._c.values())

    def is_polynomial(self) -> bool:
        """True if no negative exponent occurs (an element of Q[v])."""
        return all(k >= 0 for k in self._c)

    def in_vZv(self) -> bool:
        """True if the value lies in v Z[v]."""
        return all(k >= 1 for k in self._c) and self.is_integral()

    def in_one_plus_vZv(self) -> bool:
        return (self - 1).in_vZv()

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def bar(self) -> "LaurentScalar":
        return LaurentScalar._raw({-k: a for k, a in self._c.items()})

    def shift(self, n: int) -> "LaurentScalar":
        """Multiply by ``v^n``."""
        return LaurentScalar._raw({k + n: a for k, a in self._c.items()})

    def evaluate(self, x: Rational) -> Fraction:
        x = Fraction(x)
        return sum((a * x ** k for k, a in self._c.items()), Fraction(0))

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentScalar":
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentScalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for k, a in other._c.items():
            s = c.get(k, 0) + a
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentScalar._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar._raw({k: -a for k, a in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentScalar._raw({})
            return LaurentScalar._raw({k: a * other for k, a in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c: Dict[int, Fraction] = {}
        for k1, a1 in self._c.items():
            for k2, a2 in other._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + a1 * a2
        return LaurentScalar._raw({k: a for k, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._c) == 1:
                (k, a), = self._c.items()
                return LaurentScalar._raw({k * n: Fraction(1) / a ** (-n)})
            raise ValueError("negative power of a non-monomial Laurent polynomial")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        return FieldScalar(self) / other

    def __rtruediv__(self, other):
        return FieldScalar(other) / FieldScalar(self)

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentScalar):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: Fraction(other)} if other else {})
        if isinstance(other, FieldScalar):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return "LaurentScalar(%r)" % format_laurent(self)

    def __str__(self):
        return format_laurent(self)


ZERO = LaurentScalar._raw({})
ONE = LaurentScalar._raw({0: Fraction(1)})
v = LaurentScalar._raw({1: Fraction(1)})


def bar(f):
    """The involution ``v -> v^-1`` on Laurent polynomials and on Q(v)."""
    if isinstance(f, (int, Fraction)):
        return f
    return f.bar()


def truncate_mod_v(f: LaurentScalar) -> Tuple[Fraction, LaurentScalar]:
    """Split ``f`` in Q[v] as ``(constant term, f - constant term)``.

    The remainder lies in v Q[v]; for integral ``f`` this decides
    membership in ``c + v Z[v]``.  Raises NegativeExponent otherwise.
    """
    if isinstance(f, FieldScalar):
        f = f.as_laurent()
    if not f.is_polynomial():
        raise NegativeExponent("%s has a negative exponent" % f)
    c0 = f.coeff(0)
    return c0, f - c0


def lowest_degree(f) -> Tuple[int, Fraction]:
    """Minimal exponent and its coefficient; ZeroPolynomial for ``f == 0``."""
    if isinstance(f, FieldScalar):
        f = f.as_laurent()
    return f.lowest_degree()


# ---------------------------------------------------------------------------
# dense polynomial helpers (lists of Fractions, index = exponent)

def _dense(f: LaurentScalar) -> Tuple[int, List[Fraction]]:
    """Write f = v^s * p(v) with p(0) != 0; return (s, coefficient list)."""
    s = f.min_exp()
    top = f.max_exp()
    p = [Fraction(0)] * (top - s + 1)
    for k, a in f._c.items():
        p[k - s] = a
    return s, p


def _from_dense(s: int, p: List[Fraction]) -> LaurentScalar:
    return LaurentScalar._raw({i + s: a for i, a in enumerate(p) if a})


def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [], _trim(a)
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] / lead
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return q, _trim(a[:db])


def _gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


class FieldScalar:
    """An element of Q(v) stored as a reduced quotient.

    Canonical form: ``numerator / denominator`` where the denominator is a
    genuine polynomial with nonzero constant term equal to 1, the
    numerator is a Laurent polynomial, and the two are coprime.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, numerator=0, denominator=1):
        if isinstance(numerator, FieldScalar):
            if denominator == 1:
                self.num, self.den = numerator.num, numerator.den
                self._hash = None
                return
            q = numerator / FieldScalar(denominator)
            self.num, self.den = q.num, q.den
            self._hash = None
            return
        num = numerator if isinstance(numerator, LaurentScalar) else LaurentScalar(numerator)
        den = denominator if isinstance(denominator, LaurentScalar) else LaurentScalar(denominator)
        self.num, self.den = _reduce(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentScalar, den: LaurentScalar) -> "FieldScalar":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    # -- inspection -------------------------------------------------------
    def is_laurent(self) -> bool:
        return self.den._c == ONE._c

    def as_laurent(self) -> LaurentScalar:
        if not self.is_laurent():
            raise ValueError("%s is not a Laurent polynomial" % self)
        return self.num

    def is_zero(self) -> bool:
        return not self.num._c

    def __bool__(self):
        return bool(self.num._c)

    def bar(self) -> "FieldScalar":
        if self.is_laurent():
            return FieldScalar._raw(self.num.bar(), ONE)
        return FieldScalar(self.num.bar(), self.den.bar())

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def evaluate(self, x: Rational) -> Fraction:
        return self.num.evaluate(x) / self.den.evaluate(x)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "FieldScalar":
        if isinstance(other, FieldScalar):
            return other
        if isinstance(other, LaurentScalar):
            return FieldScalar._raw(other, ONE)
        if isinstance(other, (int, Fraction)):
            return FieldScalar._raw(LaurentScalar(other), ONE)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num._c:
            return self
        if not self.num._c:
            return other
        if self.den == other.den:
            if self.is_laurent():
                return FieldScalar._raw(self.num + other.num, ONE)
            return FieldScalar(self.num + other.num, self.den)
        return FieldScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldScalar._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num._c or not other.num._c:
            return FZERO
        if self.is_laurent() and other.is_laurent():
            return FieldScalar._raw(self.num * other.num, ONE)
        return FieldScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldScalar":
        if not self.num._c:
            raise ZeroDivisionError("inverse of zero in Q(v)")
        return FieldScalar(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = FONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (LaurentScalar, int, Fraction)):
            return self.is_laurent() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return "FieldScalar(%r)" % format_field(self)

    def __str__(self):
        return format_field(self)


def _reduce(num: LaurentScalar, den: LaurentScalar) -> Tuple[LaurentScalar, LaurentScalar]:
    if not den._c:
        raise ZeroDivisionError("zero denominator in Q(v)")
    if not num._c:
        return ZERO, ONE
    sd, pd = _dense(den)
    if len(pd) == 1:
        c = pd[0]
        return LaurentScalar._raw({k - sd: a / c for k, a in num._c.items()}), ONE
    sn, pn = _dense(num)
    g = _gcd(pn, pd)
    if len(g) > 1:
        pn, _ = _divmod(pn, g)
        pd, _ = _divmod(pd, g)
    c = pd[0]
    pn = [a / c for a in pn]
    pd = [a / c for a in pd]
    return _from_dense(sn - sd, pn), _from_dense(0, pd)


FZERO = FieldScalar._raw(ZERO, ONE)
FONE = FieldScalar._raw(ONE, ONE)


def as_field(x) -> FieldScalar:
    if isinstance(x, FieldScalar):
        return x
    return FieldScalar._coerce(x)


# ---------------------------------------------------------------------------
# text format: terms "cv^k" in increasing exponent order, e.g. "v^-1 + 2 - 1/2v^3"

def _fmt_rational(a: Fraction) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return "%d/%d" % (a.numerator, a.denominator)


def _fmt_term(a: Fraction, k: int) -> str:
    if k == 0:
        return _fmt_rational(a)
    mono = "v" if k == 1 else "v^%d" % k
    return mono if a == 1 else _fmt_rational(a) + mono


def format_laurent(f: LaurentScalar) -> str:
    if not f._c:
        return "0"
    out = ""
    for k, a in sorted(f._c.items()):
        if not out:
            out = ("-" if a < 0 else "") + _fmt_term(abs(a), k)
        else:
            out += (" - " if a < 0 else " + ") + _fmt_term(abs(a), k)
    return out


def format_field(x: FieldScalar) -> str:
    if x.is_laurent():
        return format_laurent(x.num)
    return "(%s) / (%s)" % (format_laurent(x.num), format_laurent(x.den))


_TOKEN = re.compile(r"([+-]{1,2})?(\d+(?:/\d+)?)?(\*?v(?:\^([+-]?\d+))?)?")


def parse_laurent(text: str) -> LaurentScalar:
    """Parse ``"c*v^k + c*v^k ..."``; ``-`` separators and bare ``v`` also accepted."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty Laurent polynomial")
    c: Dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ParseError("cannot parse %r at position %d" % (text, pos))
        if pos > 0 and m.group(1) is None:
            raise ParseError("missing operator in %r at position %d" % (text, pos))
        sign = -1 if (m.group(1) or "").count("-") % 2 else 1
        a = Fraction(m.group(2)) if m.group(2) is not None else Fraction(1)
        if m.group(3) is None:
            k = 0
        elif m.group(4) is None:
            k = 1
        else:
            k = int(m.group(4))
        c[k] = c.get(k, 0) + sign * a
        pos = m.end()
    return LaurentScalar(c)


def parse_field(text: str) -> FieldScalar:
    """Parse a Laurent polynomial or ``(num) / (den)``."""
    s = text.strip()
    m = re.match(r"^\((.*)\)\s*/\s*\((.*)\)$", s)
    if m:
        return FieldScalar(parse_laurent(m.group(1)), parse_laurent(m.group(2)))
    return FieldScalar(parse_laurent(s))


def laurent_sum(items: Iterable[LaurentScalar]) -> LaurentScalar:
    c: Dict[int, Fraction] = {}
    for f in items:
        for k, a in f._c.items():
            c[k] = c.get(k, 0) + a
    return LaurentScalar._raw({k: a for k, a in c.items() if a})
