"""Quaternionic 2x2 matrix groups over Q(tau), their Lorentz images under the
double cover onto the hyperbolic isometries, and the ball/hyperboloid models."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .exactfield import (GoldenNumber, GoldenComplex, QuadExtNumber, Scalar,
                         ONE, ZERO, TAU)

ScalarLike = Union[Scalar, int, Fraction]


class InvalidElementError(ValueError):
    """Matrix fails the defining exact identity of its group."""


class DomainError(ValueError):
    """Point lies outside the domain of the requested map."""


def _scalar(value: ScalarLike) -> Scalar:
    if isinstance(value, (GoldenNumber, QuadExtNumber)):
        return value
    return GoldenNumber.coerce(value)


def _is_zero(value: Scalar) -> bool:
    return value.is_zero()


class Quaternion:
    """Quaternion with coordinates in Q(tau) or a quadratic extension of it."""

    __slots__ = ("_coords",)

    def __init__(self, w: ScalarLike = 0, x: ScalarLike = 0,
                 y: ScalarLike = 0, z: ScalarLike = 0) -> None:
        self._coords = (_scalar(w), _scalar(x), _scalar(y), _scalar(z))

    @property
    def coords(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return self._coords

    @property
    def re(self) -> Scalar:
        return self._coords[0]

    @classmethod
    def from_scalar(cls, value: ScalarLike) -> Quaternion:
        return cls(value, 0, 0, 0)

    def __add__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(*(s + o for s, o in zip(self._coords, other._coords)))

    def __sub__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(*(s - o for s, o in zip(self._coords, other._coords)))

    def __neg__(self) -> Quaternion:
        return Quaternion(*(-s for s in self._coords))

    def __mul__(self, other: Quaternion | ScalarLike) -> Quaternion:
        if isinstance(other, (int, Fraction, GoldenNumber, QuadExtNumber)):
            return Quaternion(*(s * other for s in self._coords))
        if not isinstance(other, Quaternion):
            return NotImplemented
        w1, x1, y1, z1 = self._coords
        w2, x2, y2, z2 = other._coords
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2)

    def __rmul__(self, other: ScalarLike) -> Quaternion:
        if isinstance(other, (int, Fraction, GoldenNumber, QuadExtNumber)):
            return Quaternion(*(other * s for s in self._coords))
        return NotImplemented

    def __pow__(self, exponent: int) -> Quaternion:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Quaternion(1, 0, 0, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> Quaternion:
        w, x, y, z = self._coords
        return Quaternion(w, -x, -y, -z)

    def norm_sq(self) -> Scalar:
        w, x, y, z = self._coords
        return w * w + x * x + y * y + z * z

    def inverse(self) -> Quaternion:
        return self.conjugate() * _inverse_scalar(self.norm_sq())

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self._coords)

    def is_unit(self) -> bool:
        return self.norm_sq() == ONE

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return all(s == o for s, o in zip(self._coords, other._coords))

    def __hash__(self) -> int:
        return hash(self._coords)

    def real(self) -> tuple[float, float, float, float]:
        return tuple(c.real() for c in self._coords)

    def __str__(self) -> str:
        w, x, y, z = self._coords
        return f"({w}) + ({x})i + ({y})j + ({z})k"

    __repr__ = __str__


def _inverse_scalar(value: Scalar) -> Scalar:
    return value.inverse()


QUAT_ONE = Quaternion(1, 0, 0, 0)
QUAT_I = Quaternion(0, 1, 0, 0)
QUAT_J = Quaternion(0, 0, 1, 0)
QUAT_K = Quaternion(0, 0, 0, 1)


def _mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]):
    n, m, p = len(a), len(b), len(b[0])
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(m)),
                           start=GoldenNumber(0)) for j in range(p))
                 for i in range(n))


def _mat_det(rows) -> Scalar:
    n = len(rows)
    work = [list(r) for r in rows]
    det: Scalar = GoldenNumber(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot is None:
            return GoldenNumber(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det = det * work[col][col]
        inv = work[col][col].inverse()
        for r in range(col + 1, n):
            if work[r][col].is_zero():
                continue
            factor = work[r][col] * inv
            work[r] = [work[r][c] - factor * work[col][c] for c in range(n)]
    return det


def _minkowski_check(rows, signs) -> bool:
    n = len(rows)
    for i in range(n):
        for j in range(i, n):
            total = sum((signs[k] * (rows[k][i] * rows[k][j]) for k in range(n)),
                        start=GoldenNumber(0))
            expected = GoldenNumber(signs[i]) if i == j else GoldenNumber(0)
            if not total == expected:
                return False
    return True


class LorentzMatrix5:
    """5x5 Lorentz matrix preserving x1^2+...+x4^2-x5^2, future-preserving, det 1."""

    __slots__ = ("_rows",)

    _SIGNS = (1, 1, 1, 1, -1)

    def __init__(self, rows, validate: bool = True) -> None:
        self._rows = tuple(tuple(_scalar(v) for v in row) for row in rows)
        if len(self._rows) != 5 or any(len(r) != 5 for r in self._rows):
            raise InvalidElementError("expected a 5x5 matrix")
        if validate:
            if not _minkowski_check(self._rows, self._SIGNS):
                raise InvalidElementError("matrix does not preserve the Lorentz form")
            if self._rows[4][4].sign() < 0:
                raise InvalidElementError("matrix does not preserve the future cone")
            if not _mat_det(self._rows) == ONE:
                raise InvalidElementError("matrix does not have determinant one")

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, index: int):
        return self._rows[index]

    def __mul__(self, other: LorentzMatrix5) -> LorentzMatrix5:
        if not isinstance(other, LorentzMatrix5):
            return NotImplemented
        return LorentzMatrix5(_mat_mul(self._rows, other._rows), validate=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LorentzMatrix5):
            return NotImplemented
        return all(a == b for ra, rb in zip(self._rows, other._rows)
                   for a, b in zip(ra, rb))

    def apply(self, point: HyperboloidPoint) -> HyperboloidPoint:
        coords = tuple(sum((self._rows[i][j] * point.coords[j] for j in range(5)),
                           start=GoldenNumber(0)) for i in range(5))
        return HyperboloidPoint(coords)

    def real(self) -> list[list[float]]:
        return [[v.real() for v in row] for row in self._rows]

    @classmethod
    def identity(cls) -> LorentzMatrix5:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(5)) for i in range(5)),
                   validate=False)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(v) for v in row) + "]" for row in self._rows)

    __repr__ = __str__


class LorentzMatrix3:
    """3x3 Lorentz matrix preserving x1^2+x2^2-x3^2, future-preserving, det 1."""

    __slots__ = ("_rows",)

    _SIGNS = (1, 1, -1)

    def __init__(self, rows, validate: bool = True) -> None:
        self._rows = tuple(tuple(_scalar(v) for v in row) for row in rows)
        if len(self._rows) != 3 or any(len(r) != 3 for r in self._rows):
            raise InvalidElementError("expected a 3x3 matrix")
        if validate:
            if not _minkowski_check(self._rows, self._SIGNS):
                raise InvalidElementError("matrix does not preserve the Lorentz form")
            if self._rows[2][2].sign() < 0:
                raise InvalidElementError("matrix does not preserve the future cone")
            if not _mat_det(self._rows) == ONE:
                raise InvalidElementError("matrix does not have determinant one")

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, index: int):
        return self._rows[index]

    def __mul__(self, other: LorentzMatrix3) -> LorentzMatrix3:
        if not isinstance(other, LorentzMatrix3):
            return NotImplemented
        return LorentzMatrix3(_mat_mul(self._rows, other._rows), validate=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LorentzMatrix3):
            return NotImplemented
        return all(a == b for ra, rb in zip(self._rows, other._rows)
                   for a, b in zip(ra, rb))

    def apply(self, point: HyperboloidPoint2) -> HyperboloidPoint2:
        coords = tuple(sum((self._rows[i][j] * point.coords[j] for j in range(3)),
                           start=GoldenNumber(0)) for i in range(3))
        return HyperboloidPoint2(coords)

    def real(self) -> list[list[float]]:
        return [[v.real() for v in row] for row in self._rows]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(v) for v in row) + "]" for row in self._rows)

    __repr__ = __str__


class SpinMatrix4:
    """2x2 quaternionic matrix A with A* J A = J (J = diag(1,-1)), possibly
    carrying an implicit positive scalar factor mu with mu^2 = scale_sq."""

    __slots__ = ("_a", "_b", "_c", "_d", "_scale_sq", "_member")

    def __init__(self, a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion,
                 scale_sq: GoldenNumber | int | Fraction = 1,
                 validate: bool = True) -> None:
        self._a, self._b, self._c, self._d = a, b, c, d
        self._scale_sq = GoldenNumber.coerce(scale_sq)
        self._member: bool | None = None
        if validate and not self.is_member():
            raise InvalidElementError("matrix does not satisfy A* J A = J")

    @property
    def a(self) -> Quaternion:
        return self._a

    @property
    def b(self) -> Quaternion:
        return self._b

    @property
    def c(self) -> Quaternion:
        return self._c

    @property
    def d(self) -> Quaternion:
        return self._d

    @property
    def scale_sq(self) -> GoldenNumber:
        return self._scale_sq

    @classmethod
    def diagonal(cls, p: Quaternion, q: Quaternion, validate: bool = True) -> SpinMatrix4:
        zero = Quaternion(0, 0, 0, 0)
        return cls(p, zero, zero, q, validate=validate)

    def is_member(self) -> bool:
        if self._member is None:
            s = self._scale_sq
            a, b, c, d = self._a, self._b, self._c, self._d
            norm_first = (a.conjugate() * a - c.conjugate() * c).re
            norm_second = (b.conjugate() * b - d.conjugate() * d).re
            cross = a.conjugate() * b - c.conjugate() * d
            self._member = (s * norm_first == ONE and s * norm_second == -ONE
                            and cross.is_zero())
        return self._member

    def __mul__(self, other: SpinMatrix4) -> SpinMatrix4:
        if not isinstance(other, SpinMatrix4):
            return NotImplemented
        result = SpinMatrix4(
            self._a * other._a + self._b * other._c,
            self._a * other._b + self._b * other._d,
            self._c * other._a + self._d * other._c,
            self._c * other._b + self._d * other._d,
            scale_sq=self._scale_sq * other._scale_sq,
            validate=False)
        result._member = True
        return result

    def __neg__(self) -> SpinMatrix4:
        result = SpinMatrix4(-self._a, -self._b, -self._c, -self._d,
                             scale_sq=self._scale_sq, validate=False)
        result._member = self._member
        return result

    def inverse(self) -> SpinMatrix4:
        result = SpinMatrix4(
            self._a.conjugate(), -self._c.conjugate(),
            -self._b.conjugate(), self._d.conjugate(),
            scale_sq=self._scale_sq, validate=False)
        result._member = self._member
        return result

    def __pow__(self, exponent: int) -> SpinMatrix4:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = SpinMatrix4.diagonal(QUAT_ONE, QUAT_ONE, validate=False)
        result._member = True
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def normalized(self) -> SpinMatrix4:
        if self._scale_sq == ONE:
            return self
        root = self._scale_sq.sqrt()
        if root is not None:
            factor, residue = root, ONE
        else:
            reduced = self._scale_sq / (TAU - 1)
            root = reduced.sqrt()
            if root is None:
                raise ValueError("scale square is not normalizable over Q(tau)")
            factor, residue = root, TAU - 1
        result = SpinMatrix4(self._a * factor, self._b * factor,
                             self._c * factor, self._d * factor,
                             scale_sq=residue, validate=False)
        result._member = self._member
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpinMatrix4):
            return NotImplemented
        lhs, rhs = self.normalized(), other.normalized()
        return (lhs._scale_sq == rhs._scale_sq and lhs._a == rhs._a
                and lhs._b == rhs._b and lhs._c == rhs._c and lhs._d == rhs._d)

    def real(self) -> list[list[tuple[float, float, float, float]]]:
        mu = self._scale_sq.real() ** 0.5
        return [[tuple(mu * f for f in q.real()) for q in row]
                for row in ((self._a, self._b), (self._c, self._d))]

    def __str__(self) -> str:
        head = "" if self._scale_sq == ONE else f"sqrt({self._scale_sq}) * "
        return f"{head}[[{self._a}, {self._b}], [{self._c}, {self._d}]]"

    __repr__ = __str__


class SpinMatrix2:
    """2x2 complex matrix [[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1."""

    __slots__ = ("_a", "_b", "_c", "_d")

    def __init__(self, a: GoldenComplex, b: GoldenComplex,
                 c: GoldenComplex | None = None, d: GoldenComplex | None = None,
                 validate: bool = True) -> None:
        self._a = GoldenComplex.coerce(a)
        self._b = GoldenComplex.coerce(b)
        self._c = GoldenComplex.coerce(c) if c is not None else self._b.conjugate()
        self._d = GoldenComplex.coerce(d) if d is not None else self._a.conjugate()
        if validate:
            if (self._c != self._b.conjugate() or self._d != self._a.conjugate()
                    or self._a.norm() - self._b.norm() != ONE):
                raise InvalidElementError(
                    "matrix is not of the form [[a, b], [conj(b), conj(a)]] with det 1")

    @property
    def a(self) -> GoldenComplex:
        return self._a

    @property
    def b(self) -> GoldenComplex:
        return self._b

    @property
    def c(self) -> GoldenComplex:
        return self._c

    @property
    def d(self) -> GoldenComplex:
        return self._d

    @classmethod
    def diagonal(cls, u: GoldenComplex, validate: bool = True) -> SpinMatrix2:
        return cls(u, GoldenComplex(0, 0), validate=validate)

    def __mul__(self, other: SpinMatrix2) -> SpinMatrix2:
        if not isinstance(other, SpinMatrix2):
            return NotImplemented
        return SpinMatrix2(self._a * other._a + self._b * other._c,
                           self._a * other._b + self._b * other._d,
                           validate=False)

    def __neg__(self) -> SpinMatrix2:
        return SpinMatrix2(-self._a, -self._b, validate=False)

    def inverse(self) -> SpinMatrix2:
        return SpinMatrix2(self._a.conjugate(), -self._b, validate=False)

    def __pow__(self, exponent: int) -> SpinMatrix2:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = SpinMatrix2(GoldenComplex(1, 0), GoldenComplex(0, 0), validate=False)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpinMatrix2):
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __str__(self) -> str:
        return f"[[{self._a}, {self._b}], [{self._c}, {self._d}]]"

    __repr__ = __str__


class BallPoint:
    """Point of the open unit ball in the quaternions."""

    __slots__ = ("_q",)

    def __init__(self, q: Quaternion) -> None:
        if (ONE - q.norm_sq()).sign() <= 0:
            raise DomainError("point lies outside the open unit ball")
        self._q = q

    @property
    def q(self) -> Quaternion:
        return self._q

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BallPoint):
            return NotImplemented
        return self._q == other._q

    def __str__(self) -> str:
        return f"ball point {self._q}"

    __repr__ = __str__


class BallPoint2:
    """Point of the open unit disc in the complex plane."""

    __slots__ = ("_z",)

    def __init__(self, z: GoldenComplex) -> None:
        if (ONE - z.norm()).sign() <= 0:
            raise DomainError("point lies outside the open unit disc")
        self._z = z

    @property
    def z(self) -> GoldenComplex:
        return self._z

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BallPoint2):
            return NotImplemented
        return self._z == other._z

    def __str__(self) -> str:
        return f"disc point {self._z}"

    __repr__ = __str__


class HyperboloidPoint:
    """Point (x1,...,x5) with x1^2+...+x4^2-x5^2 = -1 and x5 >= 1."""

    __slots__ = ("_coords",)

    def __init__(self, coords) -> None:
        self._coords = tuple(_scalar(v) for v in coords)
        if len(self._coords) != 5:
            raise DomainError("expected five coordinates")
        x1, x2, x3, x4, x5 = self._coords
        if x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 - x5 * x5 != -ONE:
            raise DomainError("point does not lie on the unit hyperboloid")
        if (x5 - ONE).sign() < 0:
            raise DomainError("point does not lie on the future sheet")

    @property
    def coords(self):
        return self._coords

    def __getitem__(self, index: int):
        return self._coords[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HyperboloidPoint):
            return NotImplemented
        return all(a == b for a, b in zip(self._coords, other._coords))

    def real(self) -> tuple[float, ...]:
        return tuple(v.real() for v in self._coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self._coords) + ")"

    __repr__ = __str__


class HyperboloidPoint2:
    """Point (x1, x2, x3) with x1^2+x2^2-x3^2 = -1 and x3 >= 1."""

    __slots__ = ("_coords",)

    def __init__(self, coords) -> None:
        self._coords = tuple(_scalar(v) for v in coords)
        if len(self._coords) != 3:
            raise DomainError("expected three coordinates")
        x1, x2, x3 = self._coords
        if x1 * x1 + x2 * x2 - x3 * x3 != -ONE:
            raise DomainError("point does not lie on the unit hyperboloid")
        if (x3 - ONE).sign() < 0:
            raise DomainError("point does not lie on the future sheet")

    @property
    def coords(self):
        return self._coords

    def __getitem__(self, index: int):
        return self._coords[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HyperboloidPoint2):
            return NotImplemented
        return all(a == b for a, b in zip(self._coords, other._coords))

    def real(self) -> tuple[float, ...]:
        return tuple(v.real() for v in self._coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self._coords) + ")"

    __repr__ = __str__


APEX = HyperboloidPoint((0, 0, 0, 0, 1))
APEX2 = HyperboloidPoint2((0, 0, 1))


def eta4(A: SpinMatrix4, validate_output: bool = True) -> LorentzMatrix5:
    """Image of A under the double cover onto the 4-dimensional hyperbolic
    isometries, written out entry by entry as bilinear forms in the
    coordinates of A's four quaternion entries."""
    if not A.is_member():
        raise InvalidElementError("matrix does not satisfy A* J A = J")
    a0, a1, a2, a3 = A.a.coords
    b0, b1, b2, b3 = A.b.coords
    c0, c1, c2, c3 = A.c.coords
    d0, d1, d2, d3 = A.d.coords
    s = A.scale_sq
    two = GoldenNumber(2)
    rows = (
        (b0 * c0 + b1 * c1 + b2 * c2 + b3 * c3 + a0 * d0 + a1 * d1 + a2 * d2 + a3 * d3,
         b1 * c0 - b0 * c1 - b3 * c2 + b2 * c3 - a1 * d0 + a0 * d1 + a3 * d2 - a2 * d3,
         b2 * c0 + b3 * c1 - b0 * c2 - b1 * c3 - a2 * d0 - a3 * d1 + a0 * d2 + a1 * d3,
         b3 * c0 - b2 * c1 + b1 * c2 - b0 * c3 - a3 * d0 + a2 * d1 - a1 * d2 + a0 * d3,
         two * (b0 * d0 + b1 * d1 + b2 * d2 + b3 * d3)),
        (b1 * c0 - b0 * c1 + b3 * c2 - b2 * c3 + a1 * d0 - a0 * d1 + a3 * d2 - a2 * d3,
         -(b0 * c0) - b1 * c1 + b2 * c2 + b3 * c3 + a0 * d0 + a1 * d1 - a2 * d2 - a3 * d3,
         b3 * c0 - b2 * c1 - b1 * c2 + b0 * c3 - a3 * d0 + a2 * d1 + a1 * d2 - a0 * d3,
         -(b2 * c0) - b3 * c1 - b0 * c2 - b1 * c3 + a2 * d0 + a3 * d1 + a0 * d2 + a1 * d3,
         two * (b1 * d0 - b0 * d1 + b3 * d2 - b2 * d3)),
        (b2 * c0 - b3 * c1 - b0 * c2 + b1 * c3 + a2 * d0 - a3 * d1 - a0 * d2 + a1 * d3,
         -(b3 * c0) - b2 * c1 - b1 * c2 - b0 * c3 + a3 * d0 + a2 * d1 + a1 * d2 + a0 * d3,
         -(b0 * c0) + b1 * c1 - b2 * c2 + b3 * c3 + a0 * d0 - a1 * d1 + a2 * d2 - a3 * d3,
         b1 * c0 + b0 * c1 - b3 * c2 - b2 * c3 - a1 * d0 - a0 * d1 + a3 * d2 + a2 * d3,
         two * (b2 * d0 - b3 * d1 - b0 * d2 + b1 * d3)),
        (b3 * c0 + b2 * c1 - b1 * c2 - b0 * c3 + a3 * d0 + a2 * d1 - a1 * d2 - a0 * d3,
         b2 * c0 - b3 * c1 + b0 * c2 - b1 * c3 - a2 * d0 + a3 * d1 - a0 * d2 + a1 * d3,
         -(b1 * c0) - b0 * c1 - b3 * c2 - b2 * c3 + a1 * d0 + a0 * d1 + a3 * d2 + a2 * d3,
         -(b0 * c0) + b1 * c1 + b2 * c2 - b3 * c3 + a0 * d0 - a1 * d1 - a2 * d2 + a3 * d3,
         two * (b3 * d0 + b2 * d1 - b1 * d2 - b0 * d3)),
        (two * (a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3),
         two * (-(a1 * b0) + a0 * b1 + a3 * b2 - a2 * b3),
         two * (-(a2 * b0) - a3 * b1 + a0 * b2 + a1 * b3),
         two * (-(a3 * b0) + a2 * b1 - a1 * b2 + a0 * b3),
         a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 + b0 * b0 + b1 * b1 + b2 * b2 + b3 * b3),
    )
    scaled = tuple(tuple(s * v for v in row) for row in rows)
    return LorentzMatrix5(scaled, validate=validate_output)


def eta2(A: SpinMatrix2, validate_output: bool = True) -> LorentzMatrix3:
    """Image of A under the double cover onto the 2-dimensional hyperbolic
    isometries."""
    a1, a2 = A.a.re, A.a.im
    b1, b2 = A.b.re, A.b.im
    one = ONE
    two = GoldenNumber(2)
    rows = (
        (one - two * a2 * a2 + two * b1 * b1, -two * a1 * a2 + two * b1 * b2,
         two * a1 * b1 - two * a2 * b2),
        (two * a1 * a2 + two * b1 * b2, one - two * a2 * a2 + two * b2 * b2,
         two * a1 * b2 + two * a2 * b1),
        (two * a1 * b1 + two * a2 * b2, two * a1 * b2 - two * a2 * b1,
         one + two * b1 * b1 + two * b2 * b2),
    )
    return LorentzMatrix3(rows, validate=validate_output)


def verify_lift(A: SpinMatrix4 | SpinMatrix2,
                M: LorentzMatrix5 | LorentzMatrix3) -> bool:
    if isinstance(A, SpinMatrix4) and isinstance(M, LorentzMatrix5):
        return eta4(A) == M
    if isinstance(A, SpinMatrix2) and isinstance(M, LorentzMatrix3):
        return eta2(A) == M
    raise TypeError("mismatched matrix dimensions")


def spin_matrix_relations(A: SpinMatrix4) -> bool:
    """Check the derived relations |a| = |d|, |b| = |c|,
    conj(b) a = conj(d) c and c conj(a) = d conj(b)."""
    a, b, c, d = A.a, A.b, A.c, A.d
    return (a.norm_sq() == d.norm_sq() and b.norm_sq() == c.norm_sq()
            and b.conjugate() * a == d.conjugate() * c
            and c * a.conjugate() == d * b.conjugate())


def act_ball(A: SpinMatrix4, point: BallPoint | Quaternion) -> BallPoint:
    q = point.q if isinstance(point, BallPoint) else point
    if (ONE - q.norm_sq()).sign() <= 0:
        raise DomainError("point lies outside the open unit ball")
    numerator = A.a * q + A.b
    denominator = A.c * q + A.d
    if denominator.is_zero():
        raise DomainError("ball action is undefined at this point")
    return BallPoint(numerator * denominator.inverse())


def act_ball2(A: SpinMatrix2, point: BallPoint2 | GoldenComplex) -> BallPoint2:
    z = point.z if isinstance(point, BallPoint2) else GoldenComplex.coerce(point)
    if (ONE - z.norm()).sign() <= 0:
        raise DomainError("point lies outside the open unit disc")
    numerator = A.a * z + A.b
    denominator = A.c * z + A.d
    if denominator.is_zero():
        raise DomainError("disc action is undefined at this point")
    return BallPoint2(numerator * denominator.inverse())


def zeta(point: BallPoint | Quaternion) -> HyperboloidPoint:
    q = point.q if isinstance(point, BallPoint) else point
    n = q.norm_sq()
    if (ONE - n).sign() <= 0:
        raise DomainError("point lies outside the open unit ball")
    inv = (ONE - n).inverse()
    q0, q1, q2, q3 = q.coords
    two = GoldenNumber(2)
    return HyperboloidPoint((two * q0 * inv, two * q1 * inv,
                             two * q2 * inv, two * q3 * inv,
                             (ONE + n) * inv))


def zeta_inv(point: HyperboloidPoint) -> BallPoint:
    x1, x2, x3, x4, x5 = point.coords
    inv = (ONE + x5).inverse()
    return BallPoint(Quaternion(x1 * inv, x2 * inv, x3 * inv, x4 * inv))


def zeta2(point: BallPoint2 | GoldenComplex) -> HyperboloidPoint2:
    z = point.z if isinstance(point, BallPoint2) else GoldenComplex.coerce(point)
    n = z.norm()
    if (ONE - n).sign() <= 0:
        raise DomainError("point lies outside the open unit disc")
    inv = (ONE - n).inverse()
    two = GoldenNumber(2)
    return HyperboloidPoint2((two * z.re * inv, two * z.im * inv, (ONE + n) * inv))


def zeta2_inv(point: HyperboloidPoint2) -> BallPoint2:
    x1, x2, x3 = point.coords
    inv = (ONE + x3).inverse()
    return BallPoint2(GoldenComplex(x1 * inv, x2 * inv))
