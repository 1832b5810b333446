"""The Iwahori-Hecke algebra of a finite Weyl group, in the T-basis.

Elements are finite sums sum_w c_w(q) T_w with integer polynomial
coefficients.  Multiplication is the bilinear extension of

    T_s T_w = T_{sw}                  if l(sw) > l(w),
    T_s T_w = (q-1) T_w + q T_{sw}    otherwise,

for simple reflections s; general products expand the left factor through a
reduced word.  Setting q = 1 recovers the group algebra.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import Poly, Q, Q_MINUS_ONE
from .weyl import GroupSpec, WeylElement


class HeckeElement:
    """A finite T-basis combination; zero coefficients are never stored."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: GroupSpec, terms: dict[WeylElement, Poly]):
        clean = {}
        for w, coeff in terms.items():
            if w.spec != spec:
                raise ValueError(f"term {w} does not live in {spec}")
            if not isinstance(coeff, Poly):
                coeff = Poly.const(coeff)
            if coeff:
                clean[w] = coeff
        self.spec = spec
        self.terms = clean

    def coefficient(self, w: WeylElement) -> Poly:
        return self.terms.get(w, Poly())

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        return hash((self.spec, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.spec != other.spec:
            raise ValueError("spec mismatch")
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Poly()) + c
        return HeckeElement(self.spec, terms)

    def __sub__(self, other):
        return self + other.scaled(Poly.const(-1))

    def scaled(self, coeff) -> "HeckeElement":
        if not isinstance(coeff, Poly):
            coeff = Poly.const(coeff)
        return HeckeElement(self.spec, {w: c * coeff for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return hecke_mul(self, other)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda w: (w.length(), w.window)):
            coeff = self.terms[w]
            name = "T[e]" if w.is_identity() else f"T{w}"
            text = str(coeff)
            if text == "1":
                bits.append(name)
            elif sum(1 for c in coeff.coeffs if c) > 1 or text.startswith("-"):
                bits.append(f"({text})*{name}")
            else:
                bits.append(f"{text}*{name}")
        return " + ".join(bits)

    __repr__ = __str__


def t_basis(w: WeylElement) -> HeckeElement:
    """The basis element T_w."""
    return HeckeElement(w.spec, {w: Poly.const(1)})


def unit(spec: GroupSpec) -> HeckeElement:
    return t_basis(spec.identity())


def _gen_times(s: WeylElement, elem: HeckeElement) -> HeckeElement:
    # T_s * elem for a simple reflection s
    out: dict[WeylElement, Poly] = {}
    for w, c in elem.terms.items():
        sw = s * w
        if sw.length() > w.length():
            out[sw] = out.get(sw, Poly()) + c
        else:
            out[w] = out.get(w, Poly()) + c * Q_MINUS_ONE
            out[sw] = out.get(sw, Poly()) + c * Q
    return HeckeElement(elem.spec, out)


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the T-basis; expands each left term through a reduced word."""
    if a.spec != b.spec:
        raise ValueError("spec mismatch")
    gens = a.spec.generators()
    total = HeckeElement(a.spec, {})
    for v, coeff in a.terms.items():
        cur = b
        for idx in reversed(v.reduced_word()):
            cur = _gen_times(gens[idx - 1], cur)
        total = total + cur.scaled(coeff)
    return total


def specialize(a: HeckeElement, q0) -> dict[WeylElement, int | Fraction]:
    """Evaluate every coefficient at q = q0 (an exact scalar)."""
    out = {}
    for w, c in a.terms.items():
        value = c(q0)
        if value:
            out[w] = value
    return out


def group_algebra_product(a: dict[WeylElement, int | Fraction], b: dict[WeylElement, int | Fraction]):
    """Multiplication in the plain group algebra (the q = 1 oracle)."""
    out: dict[WeylElement, int | Fraction] = {}
    for v, cv in a.items():
        for w, cw in b.items():
            vw = v * w
            acc = out.get(vw, 0) + cv * cw
            if acc:
                out[vw] = acc
            elif vw in out:
                del out[vw]
    return out
