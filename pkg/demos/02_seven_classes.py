"""Enumerate the admissible characteristics on the torus and realise each by a matrix."""
from periodic_torus import (
    ALGEBRAIC_REPRESENTATIVES,
    AffineTorusMap,
    complete_characteristic,
    enumerate_torus_nonfree,
    is_admissible,
    kappa_index,
)

print("characteristics with points of smaller period:")
for kappa in enumerate_torus_nonfree():
    adm = is_admissible(kappa)
    print(f"  kappa_{kappa_index(kappa)} = {kappa}   modular genus {adm.genus}")

print()
print("realisation by algebraic automorphisms:")
for j, A in ALGEBRAIC_REPRESENTATIVES.items():
    kappa = complete_characteristic(AffineTorusMap(A))
    print(f"  A{j} = {A}  ->  kappa_{kappa_index(kappa)}")
