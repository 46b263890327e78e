"""Exact integer linear algebra primitives."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from adlv.lattice import (QuotientPresentation, integer_kernel, mat_identity,
                          mat_inverse_unimodular, mat_mul, mat_vec,
                          rational_rank, smith_normal_form,
                          solve_in_cone, solve_integer_combination,
                          solve_rational_combination, vec_add, vec_scale)

small_int = st.integers(min_value=-6, max_value=6)


def square(n):
    return st.lists(st.lists(small_int, min_size=n, max_size=n),
                    min_size=n, max_size=n)


@settings(max_examples=60, deadline=None)
@given(st.one_of(square(1), square(2), square(3)))
def test_snf_factorization_and_divisibility(m):
    u, d, v = smith_normal_form(m)
    n = len(m)
    assert mat_mul(mat_mul(u, m), v) == [list(r) for r in d] or \
        mat_mul(mat_mul(u, m), v) == d
    diag = [d[i][i] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0
    for a, b in zip(diag, diag[1:]):
        if a != 0:
            assert b % a == 0
        else:
            assert b == 0
    # u and v are unimodular
    assert mat_mul(u, mat_inverse_unimodular(u)) == mat_identity(n)
    assert mat_mul(v, mat_inverse_unimodular(v)) == mat_identity(n)


@settings(max_examples=40, deadline=None)
@given(square(3), st.lists(small_int, min_size=3, max_size=3))
def test_integer_combination_roundtrip(gens, coeffs):
    target = (0, 0, 0)
    for c, g in zip(coeffs, gens):
        target = vec_add(target, vec_scale(c, tuple(g)))
    sol = solve_integer_combination([tuple(g) for g in gens], target)
    assert sol is not None
    rebuilt = (0, 0, 0)
    for c, g in zip(sol, gens):
        rebuilt = vec_add(rebuilt, vec_scale(c, tuple(g)))
    assert rebuilt == target


def test_integer_combination_infeasible():
    assert solve_integer_combination([(2, 0), (0, 2)], (1, 0)) is None


def test_rational_combination():
    from fractions import Fraction
    sol = solve_rational_combination([(2, 0), (0, 3)], (1, 1))
    assert sol == (Fraction(1, 2), Fraction(1, 3))
    assert solve_rational_combination([(1, 1)], (1, 0)) is None


def test_rational_rank():
    assert rational_rank([(1, 2), (2, 4)]) == 1
    assert rational_rank([(1, 0), (0, 1)]) == 2
    assert rational_rank([]) == 0


def test_integer_kernel_annihilates():
    gens = [(2, 4), (1, 2), (3, 0)]
    for k in integer_kernel(gens):
        total = (0, 0)
        for c, g in zip(k, gens):
            total = vec_add(total, vec_scale(c, g))
        assert total == (0, 0)


def test_solve_in_cone():
    assert solve_in_cone([(1, 0), (1, 1)], (3, 1),
                         positive_functional=(1, 1)) == (2, 1)
    assert solve_in_cone([(2,)], (-2,), positive_functional=(1,)) is None
    assert solve_in_cone([(1, 0), (0, 1)], (2, 3), bound=5) == (2, 3)
    assert solve_in_cone([], (0, 0)) == ()
    assert solve_in_cone([], (1, 0)) is None


def test_quotient_presentation_homomorphism():
    q = QuotientPresentation(2, [(2, 0), (0, 3)])
    assert q.order() == 6
    assert q.invariants == (6,)
    rng = random.Random(7)
    for _ in range(50):
        a = (rng.randint(-9, 9), rng.randint(-9, 9))
        b = (rng.randint(-9, 9), rng.randint(-9, 9))
        assert q.project(vec_add(a, b)) == q.add(q.project(a), q.project(b))
        assert q.project(q.lift(q.project(a))) == q.project(a)
    assert q.is_zero((2, 3)) and q.is_zero((0, 0)) and not q.is_zero((1, 0))


def test_quotient_presentation_free_part():
    q = QuotientPresentation(2, [(1, 1)])
    assert q.order() is None
    assert q.free_rank == 1
    assert q.is_zero((5, 5))
    assert not q.is_zero((1, 0))
