import random
from fractions import Fraction

import pytest

from skewpbw import QQ, GradedEndo, NotHomogeneous, PbwAlgebra, PolyRing, State, degree_of, hilbert_A
from skewpbw.errors import AlgebraMismatch, NotGraded, NotLocallyFinite, NotValidated, ZeroInput
from skewpbw.pbw import multiply

from helpers import (F101, FIXTURES, STANDARD_GRADED, bubble_sort_scalar, fixture, quantum_affine,
                     random_element, random_exponent, random_q_matrix, rewrite_product,
                     series_coefficients_hilbert_R, series_divide_by_one_minus_t)


def shift_algebra(h, weight):
    R = PolyRing(["t"], [weight])
    t = R.gen(0)
    return PbwAlgebra(R, ["xh"], [GradedEndo(R, [t - h])])


def quantum_plane(q):
    return PbwAlgebra(PolyRing(), ["x1", "x2"], None, {(0, 1): q})


# --- validate -----------------------------------------------------------------


def test_validate_quantum_affine_over_x1():
    A = fixture("quantum_affine_3.alg")
    assert A.state is State.GRADED_QUASI_COMMUTATIVE
    assert A.n == 2 and A.ring.names == ("x1",)


def test_validate_shift_weight_one_not_graded():
    A = shift_algebra(2, weight=1)
    assert A.state is State.QUASI_COMMUTATIVE
    assert not A.report.passed("sigma[xh] graded")
    assert A.report.passed("sigma[xh] bijective")


def test_validate_shift_trivial_grading():
    assert shift_algebra(2, weight=0).state is State.GRADED_QUASI_COMMUTATIVE


def test_validate_zero_c():
    A = PbwAlgebra(PolyRing(), ["x", "y"], None, {(0, 1): 0})
    assert A.state is State.UNVALIDATED
    assert [c.name for c in A.report.failures()] == ["c[x,y] nonzero"]


def test_validate_noncommuting_sigmas():
    R = PolyRing(["t1", "t2"], [1, 1])
    t1, t2 = R.gens()
    s1 = GradedEndo(R, [2 * t1, t2])
    s2 = GradedEndo(R, [t2, t1])
    A = PbwAlgebra(R, ["x1", "x2"], [s1, s2])
    assert A.state is State.UNVALIDATED
    assert not A.report.passed("sigma[x1], sigma[x2] commute")


def test_validate_non_bijective_sigma():
    R = PolyRing(["t1", "t2"], [1, 1])
    t1, t2 = R.gens()
    A = PbwAlgebra(R, ["x"], [GradedEndo(R, [t1 + t2, t1 + t2])])
    assert A.state is State.UNVALIDATED
    assert not A.report.passed("sigma[x] injective")


def test_unvalidated_algebra_refuses_arithmetic():
    A = PbwAlgebra(PolyRing(), ["x", "y"], None, {(0, 1): 2}, validate=False)
    with pytest.raises(NotValidated):
        A.var(0) * A.var(1)
    with pytest.raises(NotValidated):
        A.monomial_commute_scalar((1, 0), (0, 1))
    with pytest.raises(NotValidated):
        A.sigma_power((1, 0))
    A.validate()
    assert A.var(1) * A.var(0) == 2 * (A.var(0) * A.var(1))


def test_too_many_variables():
    with pytest.raises(ValueError):
        PbwAlgebra(PolyRing(), [f"x{i}" for i in range(65)])


# --- monomial_commute_scalar ---------------------------------------------------


def test_monomial_commute_examples():
    q = Fraction(5, 3)
    A = quantum_plane(q)
    assert A.monomial_commute_scalar((1, 0), (0, 1)) == 1
    assert A.monomial_commute_scalar((0, 1), (1, 0)) == q
    # x1 x1 x2 . x1 x2 x2: only the x2 in alpha passes the x1 in beta
    assert bubble_sort_scalar(A, (2, 1), (1, 2)) == q
    assert A.monomial_commute_scalar((2, 1), (1, 2)) == q


@pytest.mark.parametrize("seed", range(10))
def test_monomial_commute_matches_bubble_sort(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    A = quantum_affine(random_q_matrix(rng, n, QQ), n, QQ)
    for _ in range(20):
        a, b = random_exponent(rng, n), random_exponent(rng, n)
        assert A.monomial_commute_scalar(a, b).value == bubble_sort_scalar(A, a, b)


# --- sigma_power -----------------------------------------------------------------


def test_sigma_power_examples():
    A = shift_algebra(Fraction(1, 2), weight=0)
    t = A.ring.gen(0)
    assert A.sigma_power((0,)).is_identity()
    for i in range(5):
        assert A.sigma_power((i,)) == GradedEndo(A.ring, [t - Fraction(i, 2)])
    R = PolyRing(["t"], [1])
    s = R.gen(0)
    B = PbwAlgebra(R, ["x1", "x2"], [GradedEndo(R, [2 * s]), GradedEndo(R, [3 * s])])
    assert B.sigma_power((1, 1)) == GradedEndo(R, [6 * s])


@pytest.mark.parametrize("name", FIXTURES)
def test_sigma_power_additive(name):
    A = fixture(name)
    rng = random.Random(name)
    for _ in range(30):
        a, b = random_exponent(rng, A.n), random_exponent(rng, A.n)
        ab = tuple(x + y for x, y in zip(a, b))
        assert A.sigma_power(a) @ A.sigma_power(b) == A.sigma_power(ab)


# --- multiply ------------------------------------------------------------------


def test_multiply_examples():
    h = Fraction(7, 2)
    S = shift_algebra(h, weight=0)
    t = S.ring.gen(0)
    assert multiply(S.var(0), S.coeff(t)) == S.element({(1,): t - h})
    f = S("(1/2)*t^2*xh + t")
    assert multiply(S.one(), f) == f
    assert multiply(f, S.one()) == f
    Q = quantum_plane(2)
    assert multiply(Q.var(1), Q.var(0)) == Q.element({(1, 1): 2})


def test_algebra_mismatch():
    with pytest.raises(AlgebraMismatch):
        quantum_plane(2).var(0) * quantum_plane(3).var(0)


@pytest.mark.parametrize("name", FIXTURES)
def test_multiply_matches_word_rewriting(name):
    A = fixture(name)
    rng = random.Random(name)
    for _ in range(40):
        f = random_element(rng, A, max_terms=2, max_exp=2, max_deg=1)
        g = random_element(rng, A, max_terms=2, max_exp=2, max_deg=1)
        assert f * g == rewrite_product(f, g)


@pytest.mark.parametrize("name", FIXTURES)
def test_pbw_monomials_are_fixed_points(name):
    A = fixture(name)
    rng = random.Random(name)
    for _ in range(20):
        alpha = random_exponent(rng, A.n)
        product = A.one()
        for i, a in enumerate(alpha):
            for _ in range(a):
                product = product * A.var(i)
        assert product == A.monomial(alpha)


@pytest.mark.parametrize("name", FIXTURES)
@pytest.mark.parametrize("field", [None, "fp:101"])
def test_associativity_sample(name, field):
    A = fixture(name, field)
    rng = random.Random(name)
    for _ in range(50):
        f, g, h = (random_element(rng, A) for _ in range(3))
        assert (f * g) * h == f * (g * h)


@pytest.mark.parametrize("name", FIXTURES)
def test_cocycle_identity(name):
    A = fixture(name)
    rng = random.Random(name)
    for _ in range(100):
        a, b, c = (random_exponent(rng, A.n) for _ in range(3))
        ab = tuple(x + y for x, y in zip(a, b))
        bc = tuple(x + y for x, y in zip(b, c))
        lhs = A.monomial_commute_scalar(a, b) * A.monomial_commute_scalar(ab, c)
        rhs = A.monomial_commute_scalar(b, c) * A.monomial_commute_scalar(a, bc)
        assert lhs == rhs


def test_distributivity_and_ring_ops():
    A = fixture("qdilation_2_2.alg")
    rng = random.Random(5)
    for _ in range(30):
        f, g, h = (random_element(rng, A) for _ in range(3))
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h
        assert f - f == A.zero()


# --- grading -------------------------------------------------------------------


def test_degree_examples():
    R = PolyRing(["t1"], [1])
    A = PbwAlgebra(R, ["x1", "x2"])
    assert degree_of(A("t1*x1")) == 2
    assert degree_of(A("x1 + x2")) == 1
    assert degree_of(A("1 + x1")) is NotHomogeneous
    with pytest.raises(ZeroInput):
        degree_of(A.zero())


def test_degree_requires_graded():
    S = shift_algebra(1, weight=1)
    with pytest.raises(NotGraded):
        degree_of(S.var(0))


@pytest.mark.parametrize("name", STANDARD_GRADED)
def test_degree_additive(name):
    A = fixture(name)
    rng = random.Random(name)
    checked = 0
    while checked < 30:
        f, g = random_element(rng, A, max_terms=1), random_element(rng, A, max_terms=1)
        df, dg = degree_of(f), degree_of(g)
        if df is NotHomogeneous or dg is NotHomogeneous:
            continue
        fg = f * g
        if fg:
            assert degree_of(fg) == df + dg
        checked += 1


def test_hilbert_examples():
    A = PbwAlgebra(PolyRing(), ["x1", "x2"])
    assert hilbert_A(A, 2) == 3
    B = PbwAlgebra(PolyRing(["t"], [1]), ["x"])
    assert [hilbert_A(B, d) for d in range(4)] == [1, 2, 3, 4]
    for name in STANDARD_GRADED:
        assert hilbert_A(fixture(name), 0) == 1


def test_hilbert_errors():
    with pytest.raises(NotLocallyFinite):
        hilbert_A(fixture("shift.alg"), 2)
    with pytest.raises(NotGraded):
        hilbert_A(shift_algebra(1, weight=1), 2)


@pytest.mark.parametrize("name", STANDARD_GRADED)
def test_hilbert_series(name):
    A = fixture(name)
    oracle = series_divide_by_one_minus_t(series_coefficients_hilbert_R(A.ring.weights, 10), A.n)
    assert [hilbert_A(A, d) for d in range(11)] == oracle


def test_prime_field_fixture():
    A = fixture("quantum_affine_3.alg", "fp:101")
    assert A.field == F101
    x2, x3 = A.var(0), A.var(1)
    assert x3 * x2 == 5 * (x2 * x3)
    assert A("x3*x2*x1") == A.element({(1, 1): A.ring.const(5 * 3 * 2) * A.ring.gen(0)})
