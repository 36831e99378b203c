"""Maps homotopic to the identity: translations, and the conjugacy test."""
from periodic_torus import ALGEBRAIC_REPRESENTATIVES, AffineTorusMap, Mat2, conjugate_by, conjugate_test

shift = AffineTorusMap.translation("1/6", 0)
diagonal = AffineTorusMap.translation("1/6", "1/3")
print(conjugate_test(shift, diagonal).reason)

A5 = ALGEBRAIC_REPRESENTATIVES[5]
twisted = AffineTorusMap(conjugate_by(A5, Mat2(2, 1, 1, 1)), ("1/2", "1/3"))
verdict = conjugate_test(AffineTorusMap(A5), twisted)
print(verdict.conjugate, verdict.reason)

verdict = conjugate_test(AffineTorusMap(ALGEBRAIC_REPRESENTATIVES[6]), AffineTorusMap(ALGEBRAIC_REPRESENTATIVES[7]))
print(verdict.conjugate, verdict.reason)
