from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from periodic_torus import Mat2, SolutionKind, Vec2Q, det, mat_mul, mat_pow, solve_torus_congruence, trace
from periodic_torus.errors import NotUnimodular
from periodic_torus.exactlin import lattice_coset_representatives, reduce_mod1, unimodular_inverse

from _support import brute_force_congruence

I = Mat2.identity()
A5 = Mat2(1, 1, -1, 0)
M3 = Mat2(1, 0, 0, -1)
M5 = Mat2(0, 1, -1, 0)
M6 = Mat2(0, 1, -1, -1)

ints = st.integers(-6, 6)
mats = st.builds(Mat2, ints, ints, ints, ints)


def test_mat_mul_examples():
    assert mat_mul(I, M5) == M5
    assert mat_mul(A5, A5) == Mat2(0, 1, -1, -1)
    assert mat_mul(M5, unimodular_inverse(M5)) == I


def test_mat_pow_examples():
    assert mat_pow(A5, 3) == Mat2(-1, 0, 0, -1)
    assert mat_pow(M6, 3) == I
    assert mat_pow(Mat2(7, -3, 2, 9), 0) == I
    assert A5 ** 6 == I


def test_big_entries_stay_exact():
    P = mat_pow(Mat2(2, 1, 1, 1), 200)
    assert det(P) == 1
    assert P.a > 2 ** 64


def test_det_trace():
    assert (det(M5), trace(M5)) == (1, 0)
    assert (det(M3), trace(M3)) == (-1, 0)
    assert (det(I), trace(I)) == (1, 2)


def test_unimodular_inverse():
    # adjugate of (0,1;-1,0) is (0,-1;1,0), det 1
    assert unimodular_inverse(M5) == Mat2(0, -1, 1, 0)
    assert unimodular_inverse(I) == I
    with pytest.raises(NotUnimodular):
        unimodular_inverse(Mat2(2, 0, 0, 2))


def test_non_integer_entry_rejected():
    with pytest.raises(TypeError):
        Mat2(Fraction(1, 2), 0, 0, 1)


def P(x, y):
    return Vec2Q.of(x, y)


@pytest.mark.parametrize("M, expected", [
    (Mat2(0, 1, -1, -1), [P(0, 0)]),
    (mat_pow(A5, 2) - I, [P(0, 0), P("1/3", "1/3"), P("2/3", "2/3")]),
    (Mat2(-2, 0, 0, -2), [P(0, 0), P(0, "1/2"), P("1/2", 0), P("1/2", "1/2")]),
])
def test_congruence_examples(M, expected):
    sol = solve_torus_congruence(M, P(0, 0))
    assert sol.kind is SolutionKind.FINITE
    assert list(sol.points) == expected


def test_congruence_degenerate_kinds():
    assert solve_torus_congruence(Mat2.zero(), P("1/2", 0)).kind is SolutionKind.EMPTY
    assert solve_torus_congruence(Mat2.zero(), P(3, -1)).kind is SolutionKind.ALL_OF_TORUS
    assert solve_torus_congruence(M3 - I, P(0, 0)).kind is SolutionKind.POSITIVE_DIMENSIONAL
    assert len(solve_torus_congruence(Mat2.zero(), P("1/2", 0))) == 0


def test_coset_representatives_count():
    M = Mat2(4, 6, 2, 9)
    reps = list(lattice_coset_representatives(M))
    assert len(reps) == abs(M.det()) == 24


@settings(max_examples=150, deadline=None)
@given(mats, st.fractions(min_value=-2, max_value=2, max_denominator=4),
       st.fractions(min_value=-2, max_value=2, max_denominator=4))
def test_congruence_matches_brute_force(M, bx, by):
    if M.det() == 0 or abs(M.det()) > 12:
        return
    b = Vec2Q(bx, by)
    sol = solve_torus_congruence(M, b)
    assert len(sol) == abs(M.det())
    assert list(sol.points) == brute_force_congruence(M, b)


@given(st.integers(0, 12), st.integers(0, 12), mats)
def test_power_law(m, k, A):
    assert mat_pow(A, m + k) == mat_mul(mat_pow(A, m), mat_pow(A, k))


@given(mats)
def test_inverse_law(A):
    if A.det() in (1, -1):
        assert mat_mul(unimodular_inverse(A), A) == I
    else:
        with pytest.raises(NotUnimodular):
            unimodular_inverse(A)


def test_reduce_mod1_negative():
    assert reduce_mod1(P("-1/3", "7/2")) == P("2/3", "1/2")
