"""Truncated power series with exact rational coefficients.

A ``Series`` carries its truncation order explicitly: ``coeffs`` always has
length ``order + 1`` and every operation stays within that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Series:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs, order: int) -> "Series":
        cs = list(coeffs)[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls.from_coeffs((), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.from_coeffs((1,), order)

    @classmethod
    def t(cls, order: int) -> "Series":
        return cls.from_coeffs((0, 1), order)

    @classmethod
    def geometric_shifted(cls, order: int) -> "Series":
        """t/(1-t) = t + t^2 + ... truncated."""
        return cls.from_coeffs((0,) + (1,) * order, order)

    def _check(self, other: "Series"):
        if self.order != other.order:
            raise ValueError("series truncation orders differ")

    def __add__(self, other):
        self._check(other)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return Series(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        self._check(other)
        k = self.order
        out = [Fraction(0)] * (k + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(0, k + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return Series(tuple(out))

    def inverse(self) -> "Series":
        """Multiplicative inverse; the constant term must be nonzero."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        k = self.order
        inv0 = Fraction(1) / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * k
        for i in range(1, k + 1):
            acc = Fraction(0)
            for j in range(1, i + 1):
                acc += self.coeffs[j] * out[i - j]
            out[i] = -inv0 * acc
        return Series(tuple(out))

    def __truediv__(self, other):
        return self * other.inverse()

    def pow(self, e: int) -> "Series":
        if e < 0:
            return self.inverse().pow(-e)
        result = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def compose(self, inner: "Series") -> "Series":
        """self(inner); ``inner`` must have zero constant term."""
        self._check(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires inner series with zero constant term")
        k = self.order
        result = Series.zero(k)
        power = Series.one(k)
        for c in self.coeffs:
            if c != 0:
                result = result + Series(tuple(c * x for x in power.coeffs))
            power = power * inner
        return result


def series_compose(outer_coeffs, inner: Series, order: int) -> Series:
    """Coefficients of outer(inner) up to the given order.

    ``outer_coeffs`` is any coefficient sequence (e.g. an integer polynomial,
    ascending); ``inner`` must have zero constant term.
    """
    outer = Series.from_coeffs(outer_coeffs, order)
    return outer.compose(Series.from_coeffs(inner.coeffs, order))
