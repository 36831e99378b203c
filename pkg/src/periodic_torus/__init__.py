"""Classification of periodic maps of the 2-torus with exact integer arithmetic."""
from .characteristics import (
    TORUS_NONFREE_KAPPAS,
    Admissibility,
    CompleteCharacteristic,
    enumerate_general,
    enumerate_torus_nonfree,
    equivalent,
    is_admissible,
    kappa_index,
    modular_genus,
    sphere_gcd_ok,
    valency_sum_ok,
)
from .dynamics import (
    AffineTorusMap,
    ConjugacyVerdict,
    LowerPeriodSet,
    Orbit,
    apply,
    complete_characteristic,
    conjugate_test,
    fixed_points,
    lefschetz_number,
    local_rotation,
    lower_period_set,
    map_period,
    orbit_decomposition,
    torus_point,
    valency_d,
)
from .exactlin import (
    Mat2,
    SolutionKind,
    SolutionSet,
    Vec2Q,
    det,
    mat_mul,
    mat_pow,
    solve_torus_congruence,
    trace,
    unimodular_inverse,
)
from .glz import (
    ALGEBRAIC_REPRESENTATIVES,
    Family,
    OrientedClass,
    SimilarityClass,
    are_similar_over_Z,
    batterson_class,
    canonical_matrix,
    conjugate_by,
    has_unit_modulus_spectrum,
    oriented_class,
    period_of,
)

__version__ = "0.1.0"
