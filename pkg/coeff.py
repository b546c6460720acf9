"""
Exact amplitudes in the ring Z[ω, 1/2], ω = e^{iπ/4}

A value is (a + bω + cω² + dω³) / 2^h. Numerators are Python integers, so
arithmetic never overflows.
"""

import math
from typing import Dict, Tuple, Union

_SQRT_HALF = math.sqrt(0.5)


def canonicalize(a: int, b: int, c: int, d: int, h: int) -> Tuple[int, int, int, int, int]:
    """Reduce to the unique form where h == 0 or some numerator is odd"""
    if a == 0 and b == 0 and c == 0 and d == 0:
        return (0, 0, 0, 0, 0)
    while h > 0 and not ((a | b | c | d) & 1):
        a >>= 1
        b >>= 1
        c >>= 1
        d >>= 1
        h -= 1
    while h < 0:
        a <<= 1
        b <<= 1
        c <<= 1
        d <<= 1
        h += 1
    return (a, b, c, d, h)


class CycCoeff:
    """Immutable element of Z[ω, 1/2] held in canonical form"""

    __slots__ = ("a", "b", "c", "d", "h")

    def __init__(self, a: int = 0, b: int = 0, c: int = 0, d: int = 0, h: int = 0):
        a, b, c, d, h = canonicalize(int(a), int(b), int(c), int(d), int(h))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "h", h)

    def __setattr__(self, name, value):
        raise AttributeError("CycCoeff is immutable")

    @classmethod
    def from_int(cls, value: int) -> "CycCoeff":
        return cls(value, 0, 0, 0, 0)

    @classmethod
    def omega_power(cls, k: int) -> "CycCoeff":
        """ω^k for any integer k"""
        k %= 8
        parts = [0, 0, 0, 0]
        parts[k % 4] = -1 if k >= 4 else 1
        return cls(*parts, 0)

    def as_tuple(self) -> Tuple[int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.h)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other) -> "CycCoeff":
        if isinstance(other, CycCoeff):
            return other
        if isinstance(other, int):
            return CycCoeff.from_int(other)
        return NotImplemented

    def __add__(self, other: Union["CycCoeff", int]) -> "CycCoeff":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        h = max(self.h, other.h)
        sa, sb = h - self.h, h - other.h
        return CycCoeff(
            (self.a << sa) + (other.a << sb),
            (self.b << sa) + (other.b << sb),
            (self.c << sa) + (other.c << sb),
            (self.d << sa) + (other.d << sb),
            h,
        )

    __radd__ = __add__

    def __neg__(self) -> "CycCoeff":
        return CycCoeff(-self.a, -self.b, -self.c, -self.d, self.h)

    def __sub__(self, other: Union["CycCoeff", int]) -> "CycCoeff":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union["CycCoeff", int]) -> "CycCoeff":
        return (-self) + other

    def __mul__(self, other: Union["CycCoeff", int]) -> "CycCoeff":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a0, a1, a2, a3 = self.a, self.b, self.c, self.d
        b0, b1, b2, b3 = other.a, other.b, other.c, other.d
        # ω^4 = -1 folds the high powers back with a sign
        return CycCoeff(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            self.h + other.h,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CycCoeff":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def mul_omega(self, k: int) -> "CycCoeff":
        """Multiply by ω^k by rotating numerators"""
        a, b, c, d = self.a, self.b, self.c, self.d
        for _ in range(k % 8):
            a, b, c, d = -d, a, b, c
        return CycCoeff(a, b, c, d, self.h)

    def conjugate(self) -> "CycCoeff":
        """Complex conjugate: ω ↦ ω^{-1} = -ω³"""
        return CycCoeff(self.a, -self.d, -self.c, -self.b, self.h)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycCoeff.from_int(other)
        if not isinstance(other, CycCoeff):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def to_complex(self) -> complex:
        scale = 2.0 ** (-self.h)
        re = self.a + (self.b - self.d) * _SQRT_HALF
        im = self.c + (self.b + self.d) * _SQRT_HALF
        return complex(re * scale, im * scale)

    def approx(self) -> str:
        value = self.to_complex()
        re = 0.0 if abs(value.real) < 5e-7 else value.real
        im = 0.0 if abs(value.imag) < 5e-7 else value.imag
        return f"{re:.6f}{im:+.6f}i"

    def to_dict(self) -> Dict[str, Union[int, str]]:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "h": self.h,
            "approx": self.approx(),
        }

    def __repr__(self) -> str:
        return f"CycCoeff({self.a}, {self.b}, {self.c}, {self.d}; h={self.h})"


def add(x: CycCoeff, y: CycCoeff) -> CycCoeff:
    return x + y


def mul(x: CycCoeff, y: CycCoeff) -> CycCoeff:
    return x * y


ZERO = CycCoeff(0, 0, 0, 0, 0)
ONE = CycCoeff(1, 0, 0, 0, 0)
OMEGA = CycCoeff(0, 1, 0, 0, 0)
I = CycCoeff(0, 0, 1, 0, 0)
HALF = CycCoeff(1, 0, 0, 0, 1)
SQRT2 = CycCoeff(0, 1, 0, -1, 0)
INV_SQRT2 = CycCoeff(0, 1, 0, -1, 1)


def i_power(k: int) -> CycCoeff:
    return CycCoeff.omega_power(2 * k)
