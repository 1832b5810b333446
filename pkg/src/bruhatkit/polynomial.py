"""Exact polynomials in one indeterminate q with integer coefficients.

Just enough arithmetic for Poincaré polynomials and T-basis coefficients:
add, subtract, multiply, evaluate.  Coefficients are Python ints, stored
constant-term first with trailing zeros trimmed.
"""

from __future__ import annotations

from fractions import Fraction


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def q(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "Poly":
        return cls((0,) * degree + (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, value):
        """Evaluate at an exact scalar (int or Fraction)."""
        acc = 0 if not isinstance(value, Fraction) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                term = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                term = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, term))
        sign, term = parts[0]
        text = term if sign == "+" else f"-{term}"
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


ZERO = Poly()
ONE = Poly.const(1)
Q = Poly.q()
Q_MINUS_ONE = Q - 1


def geometric(degree: int) -> Poly:
    """1 + q + ... + q^(degree-1), i.e. (q^degree - 1)/(q - 1)."""
    return Poly((1,) * degree)
