"""Exact arithmetic in small real algebraic number fields.

Elements of Q(alpha) are stored as coefficient tuples over Fraction and reduced
modulo the (monic) minimal polynomial of alpha.  Three fields cover every
irrational constant appearing in the ellipse criteria:

* ``SQRT5``  -- Q(sqrt 5), home of the golden ratio,
* ``SQRT3``  -- Q(sqrt 3),
* ``COS7``   -- Q(2 cos(2 pi/7)), the real cubic subfield of the 7th
  cyclotomic field; it contains every 2 cos(k pi/7).
"""

from __future__ import annotations

import math
from fractions import Fraction


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    m = max(len(a), len(b))
    out = [Fraction(0)] * m
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _poly_divmod(a, b):
    """Quotient and remainder of Fraction polynomials (ascending coefficients)."""
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and _trim(a):
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for j, bc in enumerate(b):
            a[j + k] -= c * bc
        a.pop()
        _trim(a)
    return _trim(q), _trim(a)


class NumberField:
    """Q(alpha) with alpha a root of the given monic integer polynomial.

    ``minpoly`` lists the non-leading coefficients ascending; the leading
    coefficient 1 is implicit, so Q(sqrt5) is ``NumberField([-5, 0], sqrt(5))``.
    """

    def __init__(self, minpoly, root_value, name="alpha"):
        self.minpoly = tuple(Fraction(c) for c in minpoly)
        self.degree = len(minpoly)
        self.root_value = float(root_value)
        self.name = name

    def __call__(self, *coeffs):
        c = [Fraction(x) for x in coeffs]
        c += [Fraction(0)] * (self.degree - len(c))
        return FieldElement(self, tuple(c[: self.degree]))

    def zero(self):
        return self()

    def one(self):
        return self(1)

    def gen(self):
        return self(0, 1)

    def _reduce(self, raw):
        raw = list(raw) + [Fraction(0)] * max(0, self.degree - len(raw))
        for i in range(len(raw) - 1, self.degree - 1, -1):
            c = raw[i]
            if c:
                raw[i] = Fraction(0)
                # alpha^degree = -sum_j minpoly[j] alpha^j
                for j, m in enumerate(self.minpoly):
                    raw[i - self.degree + j] -= c * m
        return tuple(raw[: self.degree])


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise TypeError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.field.degree
        raw = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        raw[i + j] += a * b
        return FieldElement(self.field, self.field._reduce(raw))

    __rmul__ = __mul__

    def inverse(self):
        """Inverse via the extended Euclidean algorithm against the minimal polynomial."""
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero field element")
        m = list(self.field.minpoly) + [Fraction(1)]
        r0, r1 = m, _trim(list(self.coeffs))
        # track s with r = s*self mod minpoly
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem if rem else [Fraction(0)]
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            if not any(r1):
                raise ZeroDivisionError("non-invertible element")
        inv = [c / r1[0] for c in s1]
        return FieldElement(self.field, self.field._reduce(inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_part(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __float__(self):
        return float(sum(float(c) * self.field.root_value**i for i, c in enumerate(self.coeffs)))

    def __abs__(self):
        return abs(float(self))

    def __repr__(self):
        terms = [f"{c}*{self.field.name}^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


# x^2 - 5 and x^2 - 3
SQRT5 = NumberField([-5, 0], math.sqrt(5), name="sqrt5")
SQRT3 = NumberField([-3, 0], math.sqrt(3), name="sqrt3")
# alpha = 2 cos(2 pi/7), root of x^3 + x^2 - 2x - 1
COS7 = NumberField([-1, -2, 1], 2 * math.cos(2 * math.pi / 7), name="a")

#: golden ratio (1 + sqrt5)/2
PHI = SQRT5(Fraction(1, 2), Fraction(1, 2))
ROOT3 = SQRT3(0, 1)

_A = COS7.gen()
#: 2 cos(k pi/7) expressed inside Q(2 cos(2 pi/7)), keys k = 1..3
TWO_COS_PI7 = {
    1: _A * _A + _A - 1,
    2: _A,
    3: 2 - _A * _A,
}
