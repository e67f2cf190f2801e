"""Dense univariate polynomials over an exact field.

Coefficients are stored ascending by degree with no trailing zeros; the zero
polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from functools import lru_cache

from .fields import Field, QQ


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = [field.of(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def t(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, k: int, c=1):
        """c * t^k"""
        return cls(field, (0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self):
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if f.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c):
        f = self.field
        c = f.of(c)
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other):
        """Euclidean division; ``other`` must be nonzero."""
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(f), self
        quo = [f.zero] * (dq + 1)
        lead_inv = f.inv(other.coeffs[-1])
        for k in range(dq, -1, -1):
            c = f.mul(rem[k + other.degree], lead_inv)
            if f.is_zero(c):
                continue
            quo[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = f.sub(rem[k + i], f.mul(c, b))
        return Poly(f, quo), Poly(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k: int):
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self):
        if self.is_zero() or self.field.is_zero(self.coeffs[-1] - self.field.one):
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def divides(self, other) -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def gcd(self, other):
        """Monic gcd via the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def ord_t(self) -> int:
        """t-adic valuation; raises on the zero polynomial."""
        if self.is_zero():
            raise ValueError("ord_t of the zero polynomial is undefined")
        for i, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                return i
        raise AssertionError("unreachable")

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if self.field.is_zero(c):
                continue
            if i == 0:
                parts.append(str(c))
            else:
                tp = "t" if i == 1 else f"t^{i}"
                parts.append(tp if c == self.field.one else f"{c}*{tp}")
        return " + ".join(reversed(parts))


def poly_ord(g: Poly, f: Poly) -> int:
    """Largest k with f^k dividing g, by repeated exact division.

    ``g`` must be nonzero and ``f`` nonconstant; callers wanting the
    conventional value for g = 0 must handle that sentinel themselves.
    """
    if g.is_zero():
        raise ValueError("poly_ord of the zero polynomial; use the -inf sentinel path")
    if f.degree < 1:
        raise ValueError("poly_ord divisor must be nonconstant")
    k = 0
    while True:
        q, r = divmod(g, f)
        if not r.is_zero():
            return k
        g = q
        k += 1


@lru_cache(maxsize=None)
def _cyclotomic_int_coeffs(d: int) -> tuple[int, ...]:
    # Phi_d = (t^d - 1) / prod_{e|d, e<d} Phi_e, exactly over Z.
    num = Poly(QQ, [-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            q, r = divmod(num, Poly(QQ, _cyclotomic_int_coeffs(e)))
            assert r.is_zero()
            num = q
    assert all(c.denominator == 1 for c in num.coeffs)
    return tuple(int(c) for c in num.coeffs)


def cyclotomic(d: int, field: Field) -> Poly:
    """The d-th cyclotomic polynomial mapped into the field.

    In characteristic p this is only squarefree (a product of distinct
    irreducibles, all of order d) when p does not divide d.
    """
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    return Poly(field, _cyclotomic_int_coeffs(d))


def t_power_minus_one(m: int, field: Field) -> Poly:
    """t^m - 1 for m >= 1."""
    if m < 1:
        raise ValueError("exponent must be >= 1")
    return Poly(field, (-1,) + (0,) * (m - 1) + (1,))
