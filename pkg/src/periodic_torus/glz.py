"""Periodicity and conjugacy classes of matrices in GL(2, Z).

Two classifications live here:

* :func:`batterson_class` -- similarity over Z (conjugators of determinant
  +-1), returning one of the families ``M1(m), M2(m), M3, ..., M7``;
* :func:`oriented_class` -- conjugacy of the induced torus maps by
  orientation preserving homeomorphisms, returning ``A1 .. A7``.  The second
  is strictly finer: ``M5`` and ``M5^{-1}`` are similar over Z but not
  orientation-preservingly conjugate.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Dict, Optional

from .errors import NotUnimodular, SpectrumNotUnitModulus
from .exactlin import Mat2, mat_mul, unimodular_inverse

# every finite order in GL(2,Z) is 1, 2, 3, 4 or 6, all dividing 12
PERIOD_SEARCH_CAP = 12


def _require_unimodular(A: Mat2) -> int:
    D = A.det()
    if D not in (1, -1):
        raise NotUnimodular(f"det{A} = {D}, expected +-1")
    return D


def has_unit_modulus_spectrum(A: Mat2) -> bool:
    """True iff both eigenvalues of the unimodular matrix ``A`` lie on the unit circle."""
    D = _require_unimodular(A)
    t = A.trace()
    if D == 1:
        return abs(t) <= 2
    return t == 0


def period_of(A: Mat2) -> Optional[int]:
    """Smallest ``n >= 1`` with ``A**n == I``, or ``None`` if ``A`` has infinite order."""
    _require_unimodular(A)
    P = A
    for n in range(1, PERIOD_SEARCH_CAP + 1):
        if P.is_identity():
            return n
        P = mat_mul(P, A)
    return None


# -- similarity over Z ------------------------------------------------------

class Family(enum.Enum):
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"
    M4 = "M4"
    M5 = "M5"
    M6 = "M6"
    M7 = "M7"


@dataclass(frozen=True, order=True)
class SimilarityClass:
    family: Family
    m: int = 0

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("family parameter m must be non-negative")
        if self.family not in (Family.M1, Family.M2) and self.m != 0:
            raise ValueError(f"{self.family.value} takes no parameter")

    def representative(self) -> Mat2:
        return canonical_matrix(self.family, self.m)

    def __str__(self):
        if self.family in (Family.M1, Family.M2):
            return f"{self.family.value}({self.m})"
        return self.family.value


def canonical_matrix(family: Family, m: int = 0) -> Mat2:
    if family is Family.M1:
        return Mat2(1, m, 0, 1)
    if family is Family.M2:
        return Mat2(-1, m, 0, -1)
    return _FIXED_REPRESENTATIVES[family]


_FIXED_REPRESENTATIVES: Dict[Family, Mat2] = {
    Family.M3: Mat2(1, 0, 0, -1),
    Family.M4: Mat2(1, 1, 0, -1),
    Family.M5: Mat2(0, 1, -1, 0),
    Family.M6: Mat2(0, 1, -1, -1),
    Family.M7: Mat2(0, -1, 1, 1),
}


def _content(A: Mat2) -> int:
    return math.gcd(*A.entries())


def batterson_class(A: Mat2) -> SimilarityClass:
    """Canonical representative of the Z-similarity class of ``A``.

    Decided from ``(det, trace)`` plus one more invariant where a pair of
    families share them: the content of ``A -+ I`` for the unipotent
    families, and the residue of ``A`` mod 2 for determinant ``-1``.
    """
    D = _require_unimodular(A)
    if not has_unit_modulus_spectrum(A):
        raise SpectrumNotUnitModulus(f"{A} is hyperbolic (trace {A.trace()}, det {D})")
    t = A.trace()
    if D == -1:
        reduced = tuple(e % 2 for e in A.entries())
        return SimilarityClass(Family.M3 if reduced == (1, 0, 0, 1) else Family.M4)
    if t == 2:
        return SimilarityClass(Family.M1, _content(A - Mat2.identity()))
    if t == -2:
        return SimilarityClass(Family.M2, _content(A + Mat2.identity()))
    return SimilarityClass({0: Family.M5, -1: Family.M6, 1: Family.M7}[t])


def are_similar_over_Z(A: Mat2, B: Mat2, bound: int) -> bool:
    """Brute-force search for ``S`` in GL(2,Z) with ``S B = A S``.

    Only conjugators with entries in ``[-bound, bound]`` are tried, so a
    ``False`` answer may be a false negative when ``bound`` is too small.
    """
    if A.det() != B.det() or A.trace() != B.trace():
        return False
    r = range(-bound, bound + 1)
    for p, q, s, u in itertools.product(r, repeat=4):
        if p * u - q * s not in (1, -1):
            continue
        # S = (p, q; s, u)
        if (p * B.a + q * B.c != A.a * p + A.b * s
                or p * B.b + q * B.d != A.a * q + A.b * u
                or s * B.a + u * B.c != A.c * p + A.d * s
                or s * B.b + u * B.d != A.c * q + A.d * u):
            continue
        return True
    return False


def conjugate_by(A: Mat2, S: Mat2) -> Mat2:
    """``S^{-1} A S``."""
    return mat_mul(mat_mul(unimodular_inverse(S), A), S)


# -- orientation preserving classes ----------------------------------------

class OrientedClass(enum.Enum):
    IDENTITY = "Identity"
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"
    A5 = "A5"
    A6 = "A6"
    A7 = "A7"
    NON_PERIODIC = "NonPeriodic"
    ORIENTATION_REVERSING = "OrientationReversing"

    @property
    def index(self) -> Optional[int]:
        if self.value.startswith("A") and len(self.value) == 2:
            return int(self.value[1])
        return None

    def __str__(self):
        return self.value


_M5, _M6, _M7 = (_FIXED_REPRESENTATIVES[f] for f in (Family.M5, Family.M6, Family.M7))

#: Representative matrix of each orientation-preserving class, A_j realising kappa_j.
ALGEBRAIC_REPRESENTATIVES: Dict[int, Mat2] = {
    1: Mat2(-1, 0, 0, -1),
    2: unimodular_inverse(_M6),
    3: _M6,
    4: _M7,
    5: unimodular_inverse(_M7),
    6: unimodular_inverse(_M5),
    7: _M5,
}


def oriented_class(A: Mat2) -> OrientedClass:
    """Orientation-preserving conjugacy class of the torus automorphism induced by ``A``.

    Periodic, determinant-one matrices are matched through the complete
    characteristic of ``x -> A x``, which is a complete invariant for this
    kind of conjugacy.
    """
    from .characteristics import kappa_index
    from .dynamics import AffineTorusMap, complete_characteristic

    D = _require_unimodular(A)
    if A.is_identity():
        return OrientedClass.IDENTITY
    if period_of(A) is None:
        return OrientedClass.NON_PERIODIC
    if D == -1:
        return OrientedClass.ORIENTATION_REVERSING
    kappa = complete_characteristic(AffineTorusMap(A))
    j = kappa_index(kappa)
    if j is None:  # pragma: no cover - would contradict the seven-class classification
        raise AssertionError(f"{A} has characteristic {kappa} outside the known list")
    return OrientedClass(f"A{j}")
