"""Exact polynomial and rational-function calculus over the rationals.

Only what the moment identities need: a dense polynomial with
:class:`fractions.Fraction` coefficients, and rational functions of the
form ``P(x) / B(x)**m`` whose derivatives stay in that form, so repeated
differentiation never squares the denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Poly:
    """Polynomial ``sum c[i] x**i`` with exact rational coefficients."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence = ()):
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return Poly(c * Fraction(other) for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class PowerRational:
    """Rational function ``num(x) / base(x)**power``."""

    num: Poly
    base: Poly
    power: int

    def derivative(self) -> PowerRational:
        # (N / B^m)' = (N' B - m N B') / B^(m+1)
        top = self.num.derivative() * self.base - self.num * self.base.derivative() * self.power
        return PowerRational(top, self.base, self.power + 1)

    def __call__(self, x) -> Fraction:
        den = self.base(x) ** self.power
        if den == 0:
            raise ZeroDivisionError("pole of the rational function")
        return self.num(x) / den


def damped_cosine_moment(r: int, beta) -> Fraction:
    """``int_0^inf exp(-beta x) x^(2r) cos x dx`` as an exact rational.

    The integral is ``(d/dbeta)^(2r)`` of ``beta / (1 + beta^2)``; at
    ``beta = 0`` it is the Abel-regularised moment.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    f = PowerRational(Poly([0, 1]), Poly([1, 0, 1]), 1)
    for _ in range(2 * r):
        f = f.derivative()
    return f(Fraction(beta))
