"""Complete characteristics of periodic surface maps.

A complete characteristic ``(n, p, (n_1, d_1), ..., (n_k, d_k))`` records the
period ``n``, the genus ``p`` of the surface, and for each orbit of points
with smaller period its period ``n_i`` and valency ``d_i``.  Two
orientation-preserving periodic maps are conjugate exactly when these agree
(orbits compared as a multiset).

This module decides which characteristics occur (:func:`is_admissible`) and
enumerates them, either for the torus specifically
(:func:`enumerate_torus_nonfree`) or by brute force for any genus
(:func:`enumerate_general`).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import GenusNotZero, InvalidCharacteristic

OrbitType = Tuple[int, int]


def _orbit_sort_key(orbit: OrbitType):
    n_i, d_i = orbit
    return (-n_i, d_i)


@dataclass(frozen=True)
class CompleteCharacteristic:
    """Period, surface genus and the multiset of orbit valencies ``(n_i, d_i)``.

    Orbits are stored sorted by descending ``n_i`` then ascending ``d_i``, so
    ``==`` and ``hash`` compare the multiset.
    """

    n: int
    p: int
    orbits: Tuple[OrbitType, ...] = ()

    def __post_init__(self):
        orbits = tuple(sorted(((int(a), int(b)) for a, b in self.orbits), key=_orbit_sort_key))
        object.__setattr__(self, "orbits", orbits)
        if self.n < 1:
            raise InvalidCharacteristic(f"period must be positive, got {self.n}")
        if self.p < 0:
            raise InvalidCharacteristic(f"genus must be non-negative, got {self.p}")
        for n_i, d_i in orbits:
            if n_i < 1 or self.n % n_i or n_i >= self.n:
                raise InvalidCharacteristic(f"orbit period {n_i} is not a proper divisor of {self.n}")
            lam = self.n // n_i
            if not 1 <= d_i < lam or math.gcd(d_i, lam) != 1:
                raise InvalidCharacteristic(f"valency {d_i} is not a unit modulo {lam}")

    @property
    def k(self) -> int:
        return len(self.orbits)

    @property
    def is_free(self) -> bool:
        return not self.orbits

    @property
    def lambdas(self) -> Tuple[int, ...]:
        return tuple(self.n // n_i for n_i, _ in self.orbits)

    def as_tuple(self) -> Tuple[int, ...]:
        """Flat form ``(n, p, n_1..n_k, d_1..d_k)``."""
        return (self.n, self.p) + tuple(o[0] for o in self.orbits) + tuple(o[1] for o in self.orbits)

    def sort_key(self):
        return (self.p, self.n, self.k, tuple((-a, b) for a, b in self.orbits))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "orbits": [{"n_i": a, "d_i": b} for a, b in self.orbits],
        }

    def __str__(self):
        if not self.orbits:
            return f"({self.n},{self.p})"
        body = ",".join(f"({a},{b})" for a, b in self.orbits)
        return f"({self.n},{self.p};{body})"


def modular_genus(kappa: CompleteCharacteristic) -> Optional[int]:
    """Genus ``g >= 0`` of the quotient surface, from
    ``2p + sum(n_i) - 2 = n (2g + k - 2)``; ``None`` if no such integer exists."""
    lhs = 2 * kappa.p + sum(a for a, _ in kappa.orbits) - 2
    if lhs % kappa.n:
        return None
    twice_g = lhs // kappa.n - kappa.k + 2
    if twice_g < 0 or twice_g % 2:
        return None
    return twice_g // 2


def valency_sum_ok(kappa: CompleteCharacteristic) -> bool:
    return sum(a * b for a, b in kappa.orbits) % kappa.n == 0


def sphere_gcd_ok(kappa: CompleteCharacteristic) -> bool:
    """``gcd(n_1 d_1, ..., n_k d_k, n) == 1``; only meaningful when the quotient is a sphere."""
    g = modular_genus(kappa)
    if g != 0:
        raise GenusNotZero(f"modular genus of {kappa} is {g}, condition applies to genus 0 only")
    return math.gcd(kappa.n, *(a * b for a, b in kappa.orbits)) == 1


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    genus: Optional[int] = None
    failed: Optional[str] = None

    def __bool__(self):
        return self.ok


def is_admissible(kappa: CompleteCharacteristic) -> Admissibility:
    """Check the three existence conditions; ``failed`` names the first one violated."""
    g = modular_genus(kappa)
    if g is None:
        return Admissibility(False, None, "genus equation: no non-negative integer modular genus")
    if not valency_sum_ok(kappa):
        return Admissibility(False, g, "valency sum: sum(n_i*d_i) is not divisible by n")
    if g == 0 and not sphere_gcd_ok(kappa):
        return Admissibility(False, g, "sphere gcd: gcd(n_1*d_1, ..., n_k*d_k, n) != 1")
    return Admissibility(True, g)


def equivalent(k1: CompleteCharacteristic, k2: CompleteCharacteristic) -> bool:
    """Equal period, genus and orbit multiset."""
    return (k1.n, k1.p, sorted(k1.orbits)) == (k2.n, k2.p, sorted(k2.orbits))


#: The seven characteristics of orientation-preserving periodic torus maps
#: that have points of smaller period, indexed as in the classification.
TORUS_NONFREE_KAPPAS: Dict[int, CompleteCharacteristic] = {
    1: CompleteCharacteristic(2, 1, ((1, 1),) * 4),
    2: CompleteCharacteristic(3, 1, ((1, 1),) * 3),
    3: CompleteCharacteristic(3, 1, ((1, 2),) * 3),
    4: CompleteCharacteristic(6, 1, ((3, 1), (2, 1), (1, 1))),
    5: CompleteCharacteristic(6, 1, ((3, 1), (2, 2), (1, 5))),
    6: CompleteCharacteristic(4, 1, ((2, 1), (1, 1), (1, 1))),
    7: CompleteCharacteristic(4, 1, ((2, 1), (1, 3), (1, 3))),
}


def kappa_index(kappa: CompleteCharacteristic) -> Optional[int]:
    """Index ``j`` with ``kappa`` equivalent to ``kappa_j``, else ``None``."""
    for j, ref in TORUS_NONFREE_KAPPAS.items():
        if equivalent(kappa, ref):
            return j
    return None


def _units(lam: int) -> List[int]:
    return [d for d in range(1, lam) if math.gcd(d, lam) == 1]


def _proper_divisors(n: int) -> List[int]:
    return [m for m in range(1, n) if n % m == 0]


def _with_valencies(n: int, p: int, orbit_periods: Tuple[int, ...]) -> Iterable[CompleteCharacteristic]:
    seen = set()
    choices = [_units(n // a) for a in orbit_periods]
    for ds in itertools.product(*choices):
        kappa = CompleteCharacteristic(n, p, tuple(zip(orbit_periods, ds)))
        if kappa in seen:
            continue
        seen.add(kappa)
        yield kappa


def _reciprocal_partitions(total: Fraction, parts: int, min_denominator: int = 2):
    """Non-decreasing tuples of integers ``l_i >= min_denominator`` with ``sum(1/l_i) == total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total <= 0:
        return
    # smallest remaining denominator l satisfies 1/l <= total and parts/l >= total
    lo = max(min_denominator, math.ceil(1 / total))
    hi = math.floor(parts / total)
    for lam in range(lo, hi + 1):
        for rest in _reciprocal_partitions(total - Fraction(1, lam), parts - 1, lam):
            yield (lam,) + rest


def orbit_count_bounds_ok(n: int, k: int) -> bool:
    """``2n/(n-1) <= k <= 4``: the orbit count forced on a torus map with nonempty exceptional set."""
    return n >= 2 and Fraction(2 * n, n - 1) <= k <= 4


def enumerate_torus_nonfree() -> List[CompleteCharacteristic]:
    """All admissible characteristics of torus maps with points of smaller period.

    On the torus the quotient is a sphere and the genus equation becomes
    ``n k = sum(n_i) + 2n``.  Writing ``n_i = n / l_i`` turns it into
    ``sum(1/l_i) = k - 2`` with every ``l_i >= 2``, which forces ``k`` into
    ``{3, 4}`` and leaves finitely many ``l``-tuples.  Since every ``n_i``
    is a multiple of ``n / lcm(l)``, the gcd condition forces
    ``n = lcm(l)``.  Valencies are then tried exhaustively and filtered by
    :func:`is_admissible`.
    """
    found = set()
    # sum of k reciprocals each <= 1/2 caps k - 2 <= k/2, i.e. k <= 4
    for k in range(1, 5):
        for lams in _reciprocal_partitions(Fraction(k - 2), k):
            n = math.lcm(*lams)
            if not orbit_count_bounds_ok(n, k):
                continue
            periods = tuple(sorted((n // lam for lam in lams), reverse=True))
            assert n * k == sum(periods) + 2 * n
            for kappa in _with_valencies(n, 1, periods):
                if is_admissible(kappa):
                    found.add(kappa)
    return sorted(found, key=CompleteCharacteristic.sort_key)


def enumerate_general(p: int, n_max: int, k_max: int) -> List[CompleteCharacteristic]:
    """Brute-force every admissible characteristic with genus ``p``,
    period ``<= n_max`` and at most ``k_max`` exceptional orbits (free ones included)."""
    if p < 0 or n_max < 1 or k_max < 0:
        raise ValueError("need p >= 0, n_max >= 1, k_max >= 0")
    found = set()
    for n in range(1, n_max + 1):
        divisors = _proper_divisors(n)
        for k in range(0, k_max + 1):
            for periods in itertools.combinations_with_replacement(sorted(divisors, reverse=True), k):
                # cheap genus test before expanding valencies
                if modular_genus(CompleteCharacteristic(n, p, tuple((a, 1) for a in periods))) is None:
                    continue
                for kappa in _with_valencies(n, p, periods):
                    if is_admissible(kappa):
                        found.add(kappa)
    return sorted(found, key=CompleteCharacteristic.sort_key)
