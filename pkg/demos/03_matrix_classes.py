"""Similarity over Z versus orientation-preserving conjugacy.

M5 and its inverse are similar over Z (via a determinant -1 conjugator), but
the torus maps they induce rotate in opposite directions at the fixed point,
so no orientation preserving homeomorphism conjugates them.
"""
import random

from periodic_torus import (
    Family,
    Mat2,
    are_similar_over_Z,
    batterson_class,
    canonical_matrix,
    conjugate_by,
    oriented_class,
    period_of,
    unimodular_inverse,
)

M5 = canonical_matrix(Family.M5)
M5inv = unimodular_inverse(M5)
print("M5 =", M5, " M5^-1 =", M5inv)
print("similar over Z:", are_similar_over_Z(M5, M5inv, 2))
print("Batterson classes:", batterson_class(M5), batterson_class(M5inv))
print("oriented classes:", oriented_class(M5), oriented_class(M5inv))

# %% random conjugates keep their class
rng = random.Random(7)
for _ in range(5):
    while True:
        S = Mat2(*(rng.randint(-4, 4) for _ in range(4)))
        if S.det() == 1:
            break
    B = conjugate_by(canonical_matrix(Family.M7), S)
    print(f"{B}: period {period_of(B)}, class {batterson_class(B)}, oriented {oriented_class(B)}")

# %% a parabolic matrix has unit spectrum but infinite order
N = Mat2(1, 3, 0, 1)
print(N, "period:", period_of(N), "class:", batterson_class(N))
