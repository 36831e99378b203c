"""Exact 2x2 integer/rational linear algebra on the torus R^2/Z^2.

Everything here works on Python ints and :class:`fractions.Fraction`, so no
value is ever rounded.  The one non-trivial routine is
:func:`solve_torus_congruence`, which lists the solutions of
``M x = b (mod Z^2)`` inside the unit square.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Tuple, Union

from .errors import NotUnimodular

Rat = Fraction
RationalLike = Union[int, Fraction, str]


@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix ``[[a, b], [c, d]]`` (row-major)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                # tolerate integral Fractions / numpy ints, reject anything lossy
                if Fraction(value).denominator != 1:
                    raise TypeError(f"Mat2 entry {name}={value!r} is not an integer")
                object.__setattr__(self, name, int(value))

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def zero(cls) -> "Mat2":
        return cls(0, 0, 0, 0)

    def rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def entries(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def is_identity(self) -> bool:
        return self.entries() == (1, 0, 0, 1)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, m: int) -> "Mat2":
        return mat_pow(self, m)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries())

    def __str__(self):
        return f"({self.a},{self.b};{self.c},{self.d})"


class Vec2Q(NamedTuple):
    """Rational column vector."""

    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: RationalLike, y: RationalLike) -> "Vec2Q":
        return cls(Fraction(x), Fraction(y))

    def __str__(self):
        return f"({self.x},{self.y})"


def reduce_mod1(v: Vec2Q) -> Vec2Q:
    """Representative of ``v`` in ``[0,1)^2``."""
    x, y = Fraction(v[0]), Fraction(v[1])
    return Vec2Q(x - math.floor(x), y - math.floor(y))


def is_integral(v: Vec2Q) -> bool:
    return Fraction(v[0]).denominator == 1 and Fraction(v[1]).denominator == 1


def mat_vec(A: Mat2, v: Vec2Q) -> Vec2Q:
    x, y = v
    return Vec2Q(Fraction(A.a * x + A.b * y), Fraction(A.c * x + A.d * y))


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return Mat2(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def mat_pow(A: Mat2, m: int) -> Mat2:
    """``A**m`` for ``m >= 0`` by repeated multiplication."""
    if m < 0:
        raise ValueError("negative exponent; invert first")
    result = Mat2.identity()
    for _ in range(m):
        result = mat_mul(result, A)
    return result


def det(A: Mat2) -> int:
    return A.det()


def trace(A: Mat2) -> int:
    return A.trace()


def adjugate(A: Mat2) -> Mat2:
    return Mat2(A.d, -A.b, -A.c, A.a)


def unimodular_inverse(A: Mat2) -> Mat2:
    """Integer inverse of a matrix with determinant +-1."""
    D = A.det()
    if D not in (1, -1):
        raise NotUnimodular(f"det{A} = {D}, expected +-1")
    adj = adjugate(A)
    # dividing by +-1 is multiplying by it
    return Mat2(D * adj.a, D * adj.b, D * adj.c, D * adj.d)


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = x*a + y*b = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def lattice_coset_representatives(M: Mat2) -> Iterator[Tuple[int, int]]:
    """Yield one integer vector from each coset of ``Z^2 / M Z^2``.

    Puts the columns of ``M`` in lower triangular (Hermite) form
    ``[(g, *), (0, det/g)]`` with a unimodular column operation; the box
    ``[0, g) x [0, |det/g|)`` is then a fundamental domain.
    """
    D = M.det()
    if D == 0:
        raise ValueError("singular matrix has infinitely many cosets")
    g, _, _ = _xgcd(M.a, M.b)
    h = abs(D // g)
    for i in range(g):
        for j in range(h):
            yield (i, j)


class SolutionKind(enum.Enum):
    FINITE = "finite"
    ALL_OF_TORUS = "all_of_torus"
    EMPTY = "empty"
    POSITIVE_DIMENSIONAL = "positive_dimensional"


@dataclass(frozen=True)
class SolutionSet:
    """Solutions of a congruence on the torus.

    ``points`` is only populated for ``FINITE``; it is sorted and every
    coordinate lies in ``[0, 1)``.
    """

    kind: SolutionKind
    points: Tuple[Vec2Q, ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.kind is SolutionKind.FINITE

    def __len__(self) -> int:
        if self.kind is SolutionKind.EMPTY:
            return 0
        if self.kind is not SolutionKind.FINITE:
            raise TypeError(f"{self.kind.value} solution set has no finite size")
        return len(self.points)

    def __iter__(self):
        if self.kind not in (SolutionKind.FINITE, SolutionKind.EMPTY):
            raise TypeError(f"cannot iterate a {self.kind.value} solution set")
        return iter(self.points)

    def __contains__(self, item) -> bool:
        return reduce_mod1(item) in self.points


def solve_torus_congruence(M: Mat2, b: Vec2Q) -> SolutionSet:
    """All ``x`` in ``[0,1)^2`` with ``M x = b (mod Z^2)``.

    For ``det M != 0`` the answer has exactly ``|det M|`` points,
    ``x = M^{-1}(b + k)`` with ``k`` ranging over coset representatives of
    ``Z^2 / M Z^2``.

    >>> solve_torus_congruence(Mat2(-2, 0, 0, -2), Vec2Q.of(0, 0)).points[1]
    Vec2Q(x=Fraction(0, 1), y=Fraction(1, 2))
    """
    b = Vec2Q(Fraction(b[0]), Fraction(b[1]))
    D = M.det()
    if D == 0:
        if M.entries() == (0, 0, 0, 0):
            return SolutionSet(SolutionKind.ALL_OF_TORUS if is_integral(b) else SolutionKind.EMPTY)
        return SolutionSet(SolutionKind.POSITIVE_DIMENSIONAL)

    adj = adjugate(M)
    found = set()
    for i, j in lattice_coset_representatives(M):
        rhs = Vec2Q(b.x + i, b.y + j)
        w = mat_vec(adj, rhs)
        found.add(reduce_mod1(Vec2Q(w.x / D, w.y / D)))
    points = tuple(sorted(found))
    assert len(points) == abs(D)
    return SolutionSet(SolutionKind.FINITE, points)
