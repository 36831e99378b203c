"""Affine maps of the torus ``x -> A x + v (mod Z^2)`` and their periodic data.

Covers algebraic automorphisms (``v = 0``), translations (``A = I``) and
everything in between.  For a periodic map the points of smaller period are
found by solving congruences for the powers of the map, then grouped into
orbits, and every orbit gets its local rotation number and valency.  Those
numbers make up the complete characteristic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from .characteristics import CompleteCharacteristic, equivalent, kappa_index
from .errors import (
    DegenerateFixedSet,
    NotCoprime,
    NotInvariant,
    NotPeriodic,
    NotSpecialLinear,
    NotUnimodular,
    OrientationReversing,
    WrongOrder,
)
from .exactlin import (
    Mat2,
    SolutionKind,
    SolutionSet,
    Vec2Q,
    mat_mul,
    mat_pow,
    mat_vec,
    reduce_mod1,
    solve_torus_congruence,
)
from .glz import period_of

TorusPoint = Vec2Q


def torus_point(x, y) -> TorusPoint:
    """Exact point of the torus, coordinates reduced into ``[0, 1)``."""
    return reduce_mod1(Vec2Q(Fraction(x), Fraction(y)))


@dataclass(frozen=True)
class AffineTorusMap:
    A: Mat2
    v: Vec2Q = field(default=Vec2Q(Fraction(0), Fraction(0)))

    def __post_init__(self):
        if self.A.det() not in (1, -1):
            raise NotUnimodular(f"det{self.A} = {self.A.det()}, expected +-1")
        object.__setattr__(self, "v", reduce_mod1(Vec2Q(Fraction(self.v[0]), Fraction(self.v[1]))))

    @classmethod
    def translation(cls, x, y) -> "AffineTorusMap":
        return cls(Mat2.identity(), Vec2Q.of(x, y))

    def __call__(self, point: TorusPoint) -> TorusPoint:
        return apply(self, point)

    def compose(self, other: "AffineTorusMap") -> "AffineTorusMap":
        """``self o other``."""
        w = mat_vec(self.A, other.v)
        return AffineTorusMap(mat_mul(self.A, other.A), Vec2Q(w.x + self.v.x, w.y + self.v.y))

    def power(self, m: int) -> "AffineTorusMap":
        if m < 0:
            raise ValueError("negative power")
        result = AffineTorusMap(Mat2.identity())
        for _ in range(m):
            result = self.compose(result)
        return result

    def is_identity(self) -> bool:
        return self.A.is_identity() and self.v == (0, 0)

    def is_orientation_preserving(self) -> bool:
        return self.A.det() == 1

    def __str__(self):
        if self.v == (0, 0):
            return f"x -> {self.A} x"
        return f"x -> {self.A} x + ({self.v.x},{self.v.y})"


def apply(f: AffineTorusMap, x: TorusPoint) -> TorusPoint:
    w = mat_vec(f.A, x)
    return reduce_mod1(Vec2Q(w.x + f.v.x, w.y + f.v.y))


def map_period(f: AffineTorusMap) -> Optional[int]:
    """Smallest ``n >= 1`` with ``f**n == id``, or ``None``.

    If ``A`` has order ``N`` then ``f**N`` is the translation by some rational
    ``w`` and the period is ``N`` times the order of ``w`` in ``Q^2/Z^2``.
    """
    N = period_of(f.A)
    if N is None:
        return None
    w = f.power(N).v
    return N * math.lcm(w.x.denominator, w.y.denominator)


def fixed_points(f: AffineTorusMap) -> SolutionSet:
    """Solutions of ``(A - I) x = -v (mod Z^2)``."""
    return solve_torus_congruence(f.A - Mat2.identity(), Vec2Q(-f.v.x, -f.v.y))


def lefschetz_number(A: Mat2) -> int:
    """``det(I - A)``, the signed fixed point count of the induced torus map."""
    return (Mat2.identity() - A).det()


def orbit_decomposition(f: AffineTorusMap, points: Iterable[TorusPoint]) -> List[Tuple[TorusPoint, ...]]:
    """Split an ``f``-invariant finite set into orbits.

    Each orbit starts at its least point and follows ``f``; orbits are
    ordered by decreasing length, then by least point.
    """
    pool = {reduce_mod1(p) for p in points}
    remaining = set(pool)
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = [start]
        x = apply(f, start)
        while x != start:
            if x not in pool or len(orbit) > len(pool):
                raise NotInvariant(f"{f} sends {orbit[-1]} to {x}, outside the given set")
            orbit.append(x)
            x = apply(f, x)
        remaining.difference_update(orbit)
        orbits.append(tuple(orbit))
    orbits.sort(key=lambda o: (-len(o), o[0]))
    return orbits


# 2 cos(2 pi / lam) for the orders an elliptic element of SL(2,Z) can have
_TWO_COS = {3: -1, 4: 0, 6: 1}


def local_rotation(B: Mat2, lam: int) -> int:
    """Numerator ``delta`` of the rotation angle ``2 pi delta / lam`` of ``B``.

    ``B`` must have determinant 1 and order exactly ``lam``.  It is then
    conjugate, by an orientation preserving real linear map, to a rotation;
    the cosine of the angle is ``trace/2`` and its sine has the sign of the
    lower-left entry (the sign of ``e1 x B e1``).
    """
    if B.det() != 1:
        raise NotSpecialLinear(f"det{B} = {B.det()}, expected 1")
    if period_of(B) != lam:
        raise WrongOrder(f"{B} does not have order {lam}")
    if lam == 1:
        raise WrongOrder("the identity has no rotation angle")
    if lam == 2:
        return 1
    assert B.trace() == _TWO_COS[lam]
    return 1 if B.c > 0 else lam - 1


def valency_d(delta: int, lam: int) -> int:
    """Inverse of ``delta`` modulo ``lam``, taken in ``1..lam-1``."""
    if lam < 2 or math.gcd(delta, lam) != 1:
        raise NotCoprime(f"{delta} is not invertible modulo {lam}")
    return pow(delta, -1, lam)


@dataclass(frozen=True)
class Orbit:
    points: Tuple[TorusPoint, ...]
    n_i: int
    lambda_i: int
    delta_i: int
    d_i: int

    @property
    def valency(self) -> Tuple[int, int]:
        return (self.n_i, self.d_i)


@dataclass(frozen=True)
class LowerPeriodSet:
    """Points whose period is strictly below the period of the map, by orbit."""

    period: int
    orbits: Tuple[Orbit, ...] = ()

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    def __bool__(self):
        return bool(self.orbits)

    def points(self) -> List[TorusPoint]:
        return sorted(p for o in self.orbits for p in o.points)


def _require_periodic(f: AffineTorusMap) -> int:
    n = map_period(f)
    if n is None:
        raise NotPeriodic(f"{f} is not periodic")
    return n


def lower_period_set(f: AffineTorusMap) -> LowerPeriodSet:
    n = _require_periodic(f)
    if not f.is_orientation_preserving():
        raise OrientationReversing(f"{f} reverses orientation")
    points = set()
    for m in range(1, n):
        if n % m:
            continue
        fixed = fixed_points(f.power(m))
        if fixed.kind in (SolutionKind.POSITIVE_DIMENSIONAL, SolutionKind.ALL_OF_TORUS):
            raise DegenerateFixedSet(f"f^{m} fixes a {fixed.kind.value} set")
        points.update(fixed.points)

    orbits = []
    for pts in orbit_decomposition(f, points):
        n_i = len(pts)
        lam = n // n_i
        delta = local_rotation(mat_pow(f.A, n_i), lam)
        orbits.append(Orbit(pts, n_i, lam, delta, valency_d(delta, lam)))
    return LowerPeriodSet(n, tuple(orbits))


def complete_characteristic(f: AffineTorusMap) -> CompleteCharacteristic:
    """Complete characteristic ``(n, 1, {(n_i, d_i)})`` of a periodic orientation preserving map.

    >>> from periodic_torus.exactlin import Mat2
    >>> str(complete_characteristic(AffineTorusMap(Mat2(1, 1, -1, 0))))
    '(6,1;(3,1),(2,2),(1,5))'
    """
    if not f.is_orientation_preserving():
        raise OrientationReversing(f"{f} reverses orientation")
    bset = lower_period_set(f)
    return CompleteCharacteristic(bset.period, 1, tuple(o.valency for o in bset.orbits))


@dataclass(frozen=True)
class ConjugacyVerdict:
    conjugate: bool
    reason: str
    first: CompleteCharacteristic
    second: CompleteCharacteristic

    def __bool__(self):
        return self.conjugate


def kappa_label(kappa: CompleteCharacteristic) -> str:
    j = kappa_index(kappa)
    return f"κ{j}" if j is not None else str(kappa)


def conjugate_test(f: AffineTorusMap, g: AffineTorusMap) -> ConjugacyVerdict:
    """Decide whether ``f`` and ``g`` are conjugate by an orientation preserving homeomorphism."""
    for h in (f, g):
        _require_periodic(h)
        if not h.is_orientation_preserving():
            raise OrientationReversing(f"{h} reverses orientation")
    kf, kg = complete_characteristic(f), complete_characteristic(g)
    if kf.is_free and kg.is_free:
        if kf.n == kg.n:
            return ConjugacyVerdict(True, f"both free, period {kf.n}", kf, kg)
        return ConjugacyVerdict(False, f"both free, periods {kf.n} and {kg.n} differ", kf, kg)
    if equivalent(kf, kg):
        return ConjugacyVerdict(True, f"equal characteristics {kappa_label(kf)} = {kf}", kf, kg)
    return ConjugacyVerdict(False, f"{kappa_label(kf)} ≠ {kappa_label(kg)}", kf, kg)

