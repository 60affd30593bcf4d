"""Exact arithmetic in Z[ω], ω = e^{2πi/3}, in the basis {1, ω}."""

from __future__ import annotations

from dataclasses import dataclass


class NonRealValue(ArithmeticError):
    """An Eisenstein value expected to be a rational integer has an ω-part."""


@dataclass(frozen=True, slots=True)
class Eisenstein:
    a: int
    b: int = 0

    def __add__(self, other: Eisenstein | int) -> Eisenstein:
        if isinstance(other, int):
            return Eisenstein(self.a + other, self.b)
        if isinstance(other, Eisenstein):
            return Eisenstein(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> Eisenstein:
        return Eisenstein(-self.a, -self.b)

    def __sub__(self, other: Eisenstein | int) -> Eisenstein:
        return self + (-other)

    def __rsub__(self, other: int) -> Eisenstein:
        return (-self) + other

    def __mul__(self, other: Eisenstein | int) -> Eisenstein:
        if isinstance(other, int):
            return Eisenstein(self.a * other, self.b * other)
        if isinstance(other, Eisenstein):
            a, b, c, d = self.a, self.b, other.a, other.b
            # ω² = -1 - ω
            bd = b * d
            return Eisenstein(a * c - bd, a * d + b * c - bd)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Eisenstein:
        if n < 0:
            raise ValueError("negative powers are not defined in Z[ω]")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> Eisenstein:
        # a + bω ↦ a + bω² = (a - b) - bω
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> int:
        a, b = self.a, self.b
        return a * a - a * b + b * b

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{self.b:+}ω"


ZERO = Eisenstein(0, 0)
ONE = Eisenstein(1, 0)
OMEGA = Eisenstein(0, 1)
OMEGA2 = Eisenstein(-1, -1)
# ω^k for k = 0, 1, 2
OMEGA_POWERS = (ONE, OMEGA, OMEGA2)


def eis_add(x: Eisenstein, y: Eisenstein) -> Eisenstein:
    return x + y


def eis_mul(x: Eisenstein, y: Eisenstein) -> Eisenstein:
    return x * y


def eis_neg(x: Eisenstein) -> Eisenstein:
    return -x


def eis_conj(x: Eisenstein) -> Eisenstein:
    return x.conj()


def as_rational_integer(z: Eisenstein) -> int:
    if z.b != 0:
        raise NonRealValue(f"{z} is not a rational integer")
    return z.a
