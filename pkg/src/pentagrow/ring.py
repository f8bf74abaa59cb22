"""Exact arithmetic for pentagon structures.

Every vertex and center of a grown structure lives in the ring of
cyclotomic integers Z[zeta], zeta = exp(2*pi*i/5), represented by four
integer coefficients over the basis (1, zeta, zeta^2, zeta^3) with
zeta^4 reduced via zeta^4 = -1 - zeta - zeta^2 - zeta^3.

Scalars (projections, squared lengths, areas) live in Q(sqrt5) and are
represented exactly by :class:`QSqrt5`.  All geometric predicates bottom
out in integer sign tests on values of the form a + b*sqrt5; the helpers
``sign_pair`` / ``cmp_pair`` operate on such ``(a, b)`` integer pairs.

Python integers are unbounded, so coefficient growth can never overflow;
no width checks are needed.
"""

from __future__ import annotations

from math import gcd, sqrt


# ---------------------------------------------------------------------------
# integer-pair kernel: values a + b*sqrt5 with a, b plain ints


def sign_pair(a: int, b: int) -> int:
    """Sign of a + b*sqrt5, by integer comparison only."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: the term with the larger square dominates
    aa = a * a
    bb = 5 * b * b
    if aa == bb:  # sqrt5 is irrational; only a = b = 0 gives zero
        return 0
    if aa > bb:
        return 1 if a > 0 else -1
    return 1 if b > 0 else -1


def cmp_pair(x: tuple[int, int], y: tuple[int, int]) -> int:
    """Three-way comparison of two a + b*sqrt5 values."""
    return sign_pair(x[0] - y[0], x[1] - y[1])


def mul_pair(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    a, b = x
    c, d = y
    return (a * c + 5 * b * d, a * d + b * c)


_SQRT5 = sqrt(5.0)


def float_pair(x: tuple[int, int]) -> float:
    return x[0] + x[1] * _SQRT5


# ---------------------------------------------------------------------------
# QSqrt5: (p + q*sqrt5)/d, normalized


class QSqrt5:
    """An exact element (p + q*sqrt5)/d of Q(sqrt5).

    Stored normalized: gcd(p, q, d) = 1 and d > 0.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, p: int, q: int = 0, d: int = 1):
        if d == 0:
            raise ZeroDivisionError("QSqrt5 denominator is zero")
        if d < 0:
            p, q, d = -p, -q, -d
        g = gcd(gcd(abs(p), abs(q)), d)
        if g > 1:
            p //= g
            q //= g
            d //= g
        self.p = p
        self.q = q
        self.d = d

    @classmethod
    def from_int(cls, n: int) -> "QSqrt5":
        return cls(n, 0, 1)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt5(self.p * other.d + other.p * self.d,
                      self.q * other.d + other.q * self.d,
                      self.d * other.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt5(self.p * other.d - other.p * self.d,
                      self.q * other.d - other.q * self.d,
                      self.d * other.d)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt5(self.p * other.p + 5 * self.q * other.q,
                      self.p * other.q + self.q * other.p,
                      self.d * other.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # 1/((p+q*sqrt5)/d) = d*(p - q*sqrt5)/(p^2 - 5 q^2)
        norm = other.p * other.p - 5 * other.q * other.q
        if norm == 0:
            raise ZeroDivisionError("division by zero QSqrt5")
        inv = QSqrt5(other.d * other.p, -other.d * other.q, norm)
        return self * inv

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return QSqrt5(-self.p, -self.q, self.d)

    def sign(self) -> int:
        """Sign of the real value, computed without floating point."""
        return sign_pair(self.p, self.q)

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def is_integer(self) -> bool:
        return self.d == 1 and self.q == 0

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.p == other.p and self.q == other.q and self.d == other.d

    def __hash__(self):
        return hash((self.p, self.q, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return (self.p + self.q * _SQRT5) / self.d

    def __repr__(self):
        return f"QSqrt5({self.p}, {self.q}, {self.d})"

    def __str__(self):
        if self.q == 0:
            s = str(self.p)
        else:
            s = f"{self.p}{self.q:+}*sqrt5"
        return s if self.d == 1 else f"({s})/{self.d}"


def _coerce(x):
    if isinstance(x, QSqrt5):
        return x
    if isinstance(x, int):
        return QSqrt5(x)
    return NotImplemented


#: phi = 2*cos(72 deg) = (sqrt5 - 1)/2, the golden-ratio coefficient in the
#: center-displacement basis relations.
PHI = QSqrt5(-1, 1, 2)

#: squared pentagon side length for circumradius 1: |zeta - 1|^2 = (5 - sqrt5)/2
SIDE_SQ = QSqrt5(5, -1, 2)


# ---------------------------------------------------------------------------
# coefficient-tuple kernel (hot paths work on raw 4-tuples of ints)
#
# Exact planar embedding of a0 + a1*zeta + a2*zeta^2 + a3*zeta^3:
#   X = a0 + a1*cos72 + (a2 + a3)*cos144
#     = (4*a0 - a1 - a2 - a3  +  (a1 - a2 - a3)*sqrt5) / 4
#   Y = Im / sin36 = (a1 + 2*a2 - 2*a3  +  a1*sqrt5) / 2
# The kernel functions below carry 4X and 2Y as integer (a, b) pairs.


def xy_quads(t: tuple[int, int, int, int]):
    """Return (XA, XB, YA, YB) with 4X = XA + XB*sqrt5, 2Y = YA + YB*sqrt5."""
    a0, a1, a2, a3 = t
    return (4 * a0 - a1 - a2 - a3, a1 - a2 - a3, a1 + 2 * a2 - 2 * a3, a1)


def cross_pair(u: tuple[int, int, int, int],
               v: tuple[int, int, int, int]) -> tuple[int, int]:
    """Cross product u x v as an integer pair, scaled by 8/sin36 (positive).

    The sign equals the sign of the true cross product.
    """
    xa, xb, ya, yb = xy_quads(u)
    wa, wb, za, zb = xy_quads(v)
    # (4Xu)(2Yv) - (4Xv)(2Yu)
    return (xa * za + 5 * xb * zb - wa * ya - 5 * wb * yb,
            xa * zb + xb * za - wa * yb - wb * ya)


def dot_pair(u: tuple[int, int, int, int],
             v: tuple[int, int, int, int]) -> tuple[int, int]:
    """Dot product u . v as an integer pair, scaled by 32 (positive).

    32*(u.v) = 2*(4Xu)(4Xv) + (2Yu)(2Yv)*(5 - sqrt5), using
    sin^2(36 deg) = (5 - sqrt5)/8.
    """
    xa, xb, ya, yb = xy_quads(u)
    wa, wb, za, zb = xy_quads(v)
    pa = xa * wa + 5 * xb * wb
    pb = xa * wb + xb * wa
    qa = ya * za + 5 * yb * zb
    qb = ya * zb + yb * za
    # 2*(pa,pb) + (qa,qb)*(5,-1)
    return (2 * pa + 5 * (qa - qb), 2 * pb + 5 * qb - qa)


def norm_pair(u: tuple[int, int, int, int]) -> tuple[int, int]:
    """32 * |u|^2 as an integer pair."""
    return dot_pair(u, u)


def add4(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3])


def sub4(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3])


def neg4(u):
    return (-u[0], -u[1], -u[2], -u[3])


# float embedding constants (bucketing and rendering only, never predicates)
_COS72 = (_SQRT5 - 1.0) / 4.0
_COS144 = -(_SQRT5 + 1.0) / 4.0
_SIN72 = sqrt((5.0 + _SQRT5) / 8.0)
_SIN144 = sqrt((5.0 - _SQRT5) / 8.0)
SIN36 = _SIN144
SIDE_LEN = sqrt((5.0 - _SQRT5) / 2.0)


def xy_float(t: tuple[int, int, int, int]) -> tuple[float, float]:
    """Approximate Cartesian coordinates (true x, y; not the scaled Y)."""
    a0, a1, a2, a3 = t
    return (a0 + a1 * _COS72 + (a2 + a3) * _COS144,
            a1 * _SIN72 + a2 * _SIN144 - a3 * _SIN144)


# ---------------------------------------------------------------------------
# CycPoint: public wrapper over a coefficient tuple


class CycPoint:
    """A point a0 + a1*zeta + a2*zeta^2 + a3*zeta^3 with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, a0: int = 0, a1: int = 0, a2: int = 0, a3: int = 0):
        self.coeffs = (a0, a1, a2, a3)

    @classmethod
    def from_tuple(cls, t) -> "CycPoint":
        p = cls.__new__(cls)
        p.coeffs = (t[0], t[1], t[2], t[3])
        return p

    @classmethod
    def zeta(cls, k: int) -> "CycPoint":
        """zeta^k, reduced to the 4-coefficient basis."""
        k %= 5
        if k < 4:
            t = [0, 0, 0, 0]
            t[k] = 1
            return cls(*t)
        return cls(-1, -1, -1, -1)

    def __add__(self, other: "CycPoint") -> "CycPoint":
        return CycPoint.from_tuple(add4(self.coeffs, other.coeffs))

    def __sub__(self, other: "CycPoint") -> "CycPoint":
        return CycPoint.from_tuple(sub4(self.coeffs, other.coeffs))

    def __neg__(self) -> "CycPoint":
        return CycPoint.from_tuple(neg4(self.coeffs))

    def __mul__(self, n: int) -> "CycPoint":
        return CycPoint.from_tuple(tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, CycPoint) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return self.coeffs == (0, 0, 0, 0)

    def project(self) -> tuple[QSqrt5, QSqrt5]:
        """Exact (X, Y): X the real part, Y the imaginary part / sin36."""
        xa, xb, ya, yb = xy_quads(self.coeffs)
        return QSqrt5(xa, xb, 4), QSqrt5(ya, yb, 2)

    def xy(self) -> tuple[float, float]:
        return xy_float(self.coeffs)

    def __repr__(self):
        return f"CycPoint{self.coeffs}"


ZERO = CycPoint()
ONE = CycPoint(1)
