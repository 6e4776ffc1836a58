"""Random data generators and independent oracles used across the test suite."""

import itertools
import random
from fractions import Fraction

from skewpbw import GF, QQ, GradedEndo, PbwAlgebra, PolyRing
from skewpbw.coeffring import exponents_of_degree
from skewpbw.frontend import bundled_fixture, list_fixtures, load_definition

FIXTURES = list_fixtures()
STANDARD_GRADED = ["quantum_affine_3.alg", "qdilation_2_2.alg", "iterated_skew.alg",
                   "sklyanin_c0.alg", "quantum_plane.alg", "commutative_2_2.alg"]


def fixture(name, field=None):
    return load_definition(bundled_fixture(name), field)


def random_scalar(rng, field):
    if field == QQ:
        return Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return rng.randrange(field.p)


def random_nonzero(rng, field):
    while True:
        v = random_scalar(rng, field)
        if v:
            return v


def random_coeff(rng, ring, max_deg=2, max_terms=3):
    monos = [e for d in range(max_deg + 1) for e in exponents_of_degree(ring.m, d)]
    f = ring.zero()
    for _ in range(rng.randint(1, max_terms)):
        f = f + ring.monomial(rng.choice(monos), ring.field(random_nonzero(rng, ring.field)))
    return f if f else ring.one()


def random_element(rng, algebra, max_terms=4, max_exp=3, max_deg=2):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        alpha = tuple(rng.randint(0, max_exp) for _ in range(algebra.n))
        terms[alpha] = random_coeff(rng, algebra.ring, max_deg)
    return algebra.element(terms)


def random_exponent(rng, n, max_exp=3):
    return tuple(rng.randint(0, max_exp) for _ in range(n))


def random_q_matrix(rng, n, field):
    """q with q_ii = 1 and q_ij q_ji = 1, as a dict of raw values."""
    q = {}
    for i in range(n):
        q[i, i] = field.one
        for j in range(i + 1, n):
            v = random_nonzero(rng, field)
            q[i, j] = field.normalize(v)
            q[j, i] = field.inv(q[i, j])
    return q


def quantum_affine(q, n, field):
    """O_q(K^n) presented over R = K: x_j x_i = q_ij x_i x_j, so c_ij = q_ij."""
    ring = PolyRing((), (), field)
    c = {(i, j): q[i, j] for i in range(n) for j in range(i + 1, n)}
    return PbwAlgebra(ring, [f"x{i + 1}" for i in range(n)], None, c)


def quantum_affine_over_x1(q, n, field):
    """O_q(K^n) presented over R = K[x1] with sigma_j(x1) = q_1j x1."""
    ring = PolyRing(["x1"], [1], field)
    sigmas = [GradedEndo.diagonal(ring, [q[0, j]]) for j in range(1, n)]
    c = {(i - 1, j - 1): q[i, j] for i in range(1, n) for j in range(i + 1, n)}
    return PbwAlgebra(ring, [f"x{i + 1}" for i in range(1, n)], sigmas, c)


def bubble_sort_scalar(algebra, alpha, beta):
    """Oracle for c(alpha, beta): sort the word x^alpha x^beta by adjacent swaps.

    Each swap of an adjacent pair x_j x_i (i < j) multiplies by c_ij.
    """
    F = algebra.field
    word = [i for i, a in enumerate(alpha) for _ in range(a)]
    word += [i for i, b in enumerate(beta) for _ in range(b)]
    scalar = F.one
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                i, j = word[k + 1], word[k]
                scalar = F.mul(scalar, algebra.c[i, j].value)
                word[k], word[k + 1] = word[k + 1], word[k]
                changed = True
    return scalar


def series_coefficients_hilbert_R(weights, max_degree):
    """Coefficients of prod_k 1/(1 - t^w_k), by repeated series multiplication."""
    coeffs = [1] + [0] * max_degree
    for w in weights:
        geometric = [1 if d % w == 0 else 0 for d in range(max_degree + 1)]
        coeffs = [sum(coeffs[a] * geometric[d - a] for a in range(d + 1))
                  for d in range(max_degree + 1)]
    return coeffs


def series_divide_by_one_minus_t(coeffs, times):
    """Multiply a truncated series by 1/(1 - t), ``times`` times (prefix sums)."""
    for _ in range(times):
        coeffs = list(itertools.accumulate(coeffs))
    return coeffs


F101 = GF(101)


def evaluate_poly(f, point):
    """Evaluate a CoeffPoly at a point of K^m (raw values), term by term."""
    F = f.ring.field
    total = F.zero
    for e, c in f.terms.items():
        v = c
        for x, a in zip(point, e):
            v = F.mul(v, F.pow(x, a))
        total = F.add(total, v)
    return total


def evaluate_endo(endo, point):
    return [evaluate_poly(img, point) for img in endo.images]


def word_rewrite(algebra, word):
    """Oracle: normal form of a word by local rewriting.

    ``word`` is a list of letters ``("r", CoeffPoly)`` or ``("x", i)``. The
    rules are x_i r -> sigma_i(r) x_i, x_j x_i -> c_ij x_i x_j (i < j) and
    r s -> rs; returns {alpha: CoeffPoly}.
    """
    ring = algebra.ring
    word = [("r", ring.one())] + list(word)
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            (ka, a), (kb, b) = word[k], word[k + 1]
            if ka == "r" and kb == "r":
                word[k:k + 2] = [("r", a * b)]
            elif ka == "x" and kb == "r":
                word[k:k + 2] = [("r", algebra.sigmas[a].apply(b)), ("x", a)]
            elif ka == "x" and kb == "x" and a > b:
                word[k:k + 2] = [("r", ring.const(algebra.c[b, a])), ("x", b), ("x", a)]
            else:
                continue
            changed = True
            break
    coef = word[0][1]
    alpha = [0] * algebra.n
    for kind, i in word[1:]:
        assert kind == "x"
        alpha[i] += 1
    return {tuple(alpha): coef} if coef else {}


def term_word(alpha, coef):
    return [("r", coef)] + [("x", i) for i, a in enumerate(alpha) for _ in range(a)]


def rewrite_product(f, g):
    """Oracle product of two elements, expanding term by term."""
    A = f.algebra
    out = A.zero()
    for a, r in f.terms.items():
        for b, s in g.terms.items():
            out = out + A.element(word_rewrite(A, term_word(a, r) + term_word(b, s)))
    return out
