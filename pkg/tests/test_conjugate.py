import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import seeds, small_rationals
from wvo import (
    Cone,
    Polyhedron,
    Problem,
    VectorAffineMap,
    epi_member,
    epi_member_shifted,
    representation_equality_check,
)
from wvo.bruteforce import grid_epi_shifted
from wvo.errors import PreconditionError, QualificationError
from wvo.golden import column, in_N, in_P, in_Q
from wvo.random_instances import random_instance, random_queries
from wvo.rational import add, matvec, neg
from wvo.sampling import make_rng, random_L_plus_weak


def test_epi_member_examples(ex):
    v = epi_member(column(1, 0), (0, -1), ex)
    assert not v
    x = v.witness
    assert x[0] > 0  # any positive x violates
    assert epi_member(column(0, 0), (0, 0), ex)


def test_interior_point_of_K_is_member():
    prob = Problem(Cone.orthant(2), Cone.orthant(1), VectorAffineMap.zero(2, 1), VectorAffineMap.zero(1, 1), Polyhedron.full(1))
    assert epi_member(column(0, 0), (1, 2), prob)


def test_witness_reproduces_the_violation(ex):
    v = epi_member(column(1, 0), (0, -1), ex)
    (x,) = v.witness
    value = (0 - 1 * x, -1 - 0 * x)  # y - L x + F(x), F = 0
    assert all(c < 0 for c in value)


def test_multiplier_variant_matches_shifted_conjugate(ex):
    # with T the conjugate of F + I_C + T o G is N evaluated at (a + t1, b + t2)
    for t in [(-1, 0), (1, 1), (0, 2), (Fraction(1, 2), -1)]:
        for a, b, y1, y2 in [(1, 0, 0, -1), (0, 0, 0, 0), (2, -1, 1, 1), (-1, -1, -1, 1)]:
            got = epi_member(column(a, b), (y1, y2), ex, column(*t))
            assert bool(got) == in_Q(*t, a, b, y1, y2)


def test_unshifted_test_accepts_the_strictness_witness(ex):
    assert epi_member(column(1, 0), (0, -1), ex, column(-1, 0))
    assert in_Q(-1, 0, 1, 0, 0, -1) and not in_P(1, 0, 0, -1)


def test_shifted_test_rejects_with_slack_witness(ex):
    # adding T(s) with s = 1 pushes y - L x + F(x) + T G(x) into -int K at x = 0
    v = epi_member_shifted(column(1, 0), (0, -1), column(-1, 0), ex)
    assert not v
    x, s = v.witness
    T = column(-1, 0)
    value = add(add((0, -1), neg(matvec(column(1, 0), x))), add(matvec(T, (-x[0],)), matvec(T, s)))
    assert s[0] >= 0 and all(c < 0 for c in value)


def test_shifted_trivial(ex):
    zero_F = Problem(Cone.orthant(2), Cone.orthant(1), VectorAffineMap.zero(2, 1), VectorAffineMap.zero(1, 1), Polyhedron.full(1))
    assert epi_member_shifted(column(0, 0), (0, 0), column(0, 0), zero_F)


def test_shifted_requires_weakly_positive_T(ex):
    with pytest.raises(PreconditionError):
        epi_member_shifted(column(0, 0), (0, 0), column(-1, -1), ex)


@pytest.mark.parametrize("T", [column(1, 0), column(-1, 1), column(2, Fraction(-1, 2)), column(0, 0)])
def test_shifted_matches_grid_oracle(ex, T):
    L = column(1, 1)
    for y in [(0, 0), (Fraction(-1, 2), 2)]:
        assert bool(epi_member_shifted(L, y, T, ex)) == grid_epi_shifted(L, y, T, ex)


def test_empty_domain_is_vacuous():
    G = VectorAffineMap.make([[0]], [1])  # G(x) = 1 never lies in -S
    prob = Problem(Cone.orthant(2), Cone.orthant(1), VectorAffineMap.zero(2, 1), G, Polyhedron.full(1))
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        v = epi_member(column(5, 5), (-9, -9), prob)
    assert v and v.vacuous and w


@given(small_rationals(), small_rationals(), small_rationals(), small_rationals())
def test_plain_conjugate_closed_form(a, b, y1, y2):
    free = Problem(Cone.orthant(2), Cone.orthant(1), VectorAffineMap.zero(2, 1), VectorAffineMap.zero(1, 1), Polyhedron.full(1))
    assert bool(epi_member(column(a, b), (y1, y2), free)) == in_N(a, b, y1, y2)


@given(small_rationals(), small_rationals(), small_rationals(), small_rationals())
def test_constrained_conjugate_closed_form(a, b, y1, y2):
    from wvo.golden import example_problem

    assert bool(epi_member(column(a, b), (y1, y2), example_problem())) == in_P(a, b, y1, y2)


def test_representation_examples(ex):
    r = representation_equality_check(column(0, 0), (0, 0), ex)
    assert r.lhs and r.rhs_positive and r.rhs_weak and r.consistent
    r = representation_equality_check(column(1, 0), (0, -1), ex)
    assert not r.lhs and not r.rhs_positive and not r.rhs_weak


def test_representation_with_custom_searcher(ex):
    # a searcher that proposes a fixed weakly positive T is re-verified before it counts
    def fixed(L, y, prob, mode):
        return column(-1, 0) if mode == "L_plus_weak" else None

    r = representation_equality_check(column(1, 0), (0, -1), ex, fixed)
    assert not r.rhs_weak and r.T_weak is None


def test_representation_needs_qualification():
    G = VectorAffineMap.make([[1], [-1]], [0, 0])
    prob = Problem(Cone.orthant(2), Cone.orthant(2), VectorAffineMap.zero(2, 1), G, Polyhedron.full(1))
    with pytest.raises(QualificationError):
        representation_equality_check(column(0, 0), (0, 0), prob)


@given(seeds)
def test_random_representations_agree(seed):
    rng = make_rng(seed)
    prob = random_instance(rng)
    for q in random_queries(prob, rng, 3):
        assert representation_equality_check(q.L, q.y, prob).consistent


@given(seeds)
def test_shifted_implies_plain(seed):
    # for weakly positive T: shifted membership => membership in epi(F + I_A)*
    rng = make_rng(seed)
    prob = random_instance(rng)
    T = random_L_plus_weak(prob.S, prob.K, rng)
    for q in random_queries(prob, rng, 3):
        if epi_member_shifted(q.L, q.y, T, prob):
            assert epi_member(q.L, q.y, prob)
