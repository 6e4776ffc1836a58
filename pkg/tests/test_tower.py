import random
from fractions import Fraction

import pytest

from skewpbw import QQ, GradedEndo, NotHomogeneous, PbwAlgebra, PolyRing, build_tower, degree_of, tower_multiply
from skewpbw.errors import AlgebraMismatch, NotGraded

from helpers import FIXTURES, STANDARD_GRADED, fixture, quantum_affine_over_x1, random_element, random_q_matrix


def test_quantum_affine_tower():
    rng = random.Random(3)
    n = 4
    q = random_q_matrix(rng, n, QQ)
    A = quantum_affine_over_x1(q, n, QQ)
    T = build_tower(A)
    assert len(T) == n - 1
    x1 = A.ring.gen(0)
    for s, stage in enumerate(T.stages):
        j = s + 1  # 0-based index of the variable adjoined at this stage
        assert stage.r_action.apply(x1) == x1 * A.ring.const(q[0, j])
        for i, scalar in enumerate(stage.var_scalars):
            assert scalar.value == q[i + 1, j]


def test_single_stage():
    A = fixture("shift.alg")
    T = build_tower(A)
    assert len(T) == 1
    assert T.stages[0].r_action == A.sigmas[0]
    assert T.stages[0].var_scalars == ()


def test_commuting_tower():
    A = fixture("commutative_2_2.alg")
    T = build_tower(A)
    assert all(st.r_action.is_identity() for st in T.stages)
    assert all(s == 1 for st in T.stages for s in st.var_scalars)


def test_requires_graded():
    R = PolyRing(["t"], [1])
    A = PbwAlgebra(R, ["x"], [GradedEndo(R, [R.gen(0) + 1])])
    with pytest.raises(NotGraded):
        build_tower(A)


def test_tower_multiply_examples():
    S = fixture("shift.alg")
    t = S.ring.gen(0)
    T = build_tower(S)
    assert tower_multiply(T, S.var(0), S.coeff(t)) == S.element({(1,): t - 3})
    f = S("(1/2)*t^2*xh + t")
    assert tower_multiply(T, S.one(), f) == f
    Q = PbwAlgebra(PolyRing(), ["z1", "z2"], None, {(0, 1): 2})
    TQ = build_tower(Q)
    assert tower_multiply(TQ, Q.var(1), Q.var(0)) == Q.element({(1, 1): 2})
    D = fixture("qdilation_2_2.alg")
    TD = build_tower(D)
    r = D.ring("t1^2 + t1*t2")
    assert tower_multiply(TD, D.var(0), D.coeff(r)) == D.element({(1, 0): D.sigmas[0].apply(r)})


def test_tower_algebra_mismatch():
    T = build_tower(fixture("quantum_plane.alg"))
    other = fixture("sklyanin_c0.alg")
    with pytest.raises(AlgebraMismatch):
        tower_multiply(T, other.var(0), other.var(1))


@pytest.mark.parametrize("name", FIXTURES)
def test_tower_matches_pbw_sample(name):
    A = fixture(name)
    T = build_tower(A)
    rng = random.Random(name)
    for _ in range(60):
        f, g = random_element(rng, A), random_element(rng, A)
        assert tower_multiply(T, f, g) == f * g


@pytest.mark.parametrize("name", STANDARD_GRADED)
def test_theta_is_graded(name):
    A = fixture(name)
    T = build_tower(A)
    rng = random.Random(name)
    for j in range(A.n):
        for _ in range(20):
            f = random_element(rng, A, max_terms=1)
            alpha = next(iter(f.terms))
            below = A.element({alpha[:j] + (0,) * (A.n - j): f.terms[alpha]})
            d = degree_of(below)
            if d is NotHomogeneous:
                continue
            img = T.theta(j, below)
            assert degree_of(img) == d


def test_format_lines():
    lines = build_tower(fixture("quantum_affine_3.alg")).format_lines()
    assert lines == [
        "stage 1: x2",
        "  theta_1(x1) = 2*x1",
        "stage 2: x3",
        "  theta_2(x1) = 3*x1",
        "  theta_2(x2) = 5*x2",
    ]
    sk = build_tower(fixture("sklyanin_c0.alg")).format_lines()
    assert "  theta_3(x) = (-1/2)*x" in sk
