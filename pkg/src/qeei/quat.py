"""Quaternion scalar arithmetic.

Hamilton's conventions: i**2 = j**2 = k**2 = ijk = -1, so ij = k = -ji,
jk = i = -kj, ki = j = -ik.  Multiplication is associative but not
commutative; everything downstream (determinants, eigenvectors) leans on
keeping factor order straight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroDivisor


@dataclass(frozen=True)
class Quaternion:
    """w + x*i + y*j + z*k with double-precision components."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @staticmethod
    def from_real(r: float) -> "Quaternion":
        return Quaternion(float(r), 0.0, 0.0, 0.0)

    def __add__(self, other):
        other = _coerce(other)
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = other.w, other.x, other.y, other.z
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def __rmul__(self, other):
        # only reals reach here; they commute
        return self * other

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def modulus(self) -> float:
        return math.sqrt(self.norm_sq())

    __abs__ = modulus

    def inverse(self) -> "Quaternion":
        n = self.norm_sq()
        if n == 0.0:
            raise ZeroDivisor("cannot invert the zero quaternion")
        return Quaternion(self.w / n, -self.x / n, -self.y / n, -self.z / n)

    def is_real(self, tol: float = 0.0) -> bool:
        return abs(self.x) <= tol and abs(self.y) <= tol and abs(self.z) <= tol

    def isclose(self, other, tol: float = 1e-10) -> bool:
        other = _coerce(other)
        return (abs(self.w - other.w) <= tol and abs(self.x - other.x) <= tol
                and abs(self.y - other.y) <= tol and abs(self.z - other.z) <= tol)

    def components(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def __str__(self):
        terms = []
        for value, unit in zip(self.components(), ("", "i", "j", "k")):
            if value == 0.0:
                continue
            sign = "-" if value < 0 else ("+" if terms else "")
            mag = abs(value)
            body = unit if (mag == 1.0 and unit) else f"{mag:g}{unit}"
            terms.append(sign + body)
        return "".join(terms) if terms else "0"


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def _coerce(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    return Quaternion.from_real(value)
