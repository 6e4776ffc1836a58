"""Quasi-commutative skew PBW extensions A = σ(R)<x_1, ..., x_n>.

Elements are kept in PBW normal form: a finite sum of ``r * x^alpha`` with
coefficients ``r`` in R written on the left of the standard monomials
``x^alpha = x_1^alpha_1 ... x_n^alpha_n``. The defining relations are

    x_i r = sigma_i(r) x_i            (r in R)
    x_j x_i = c_ij x_i x_j            (i < j, c_ij a nonzero scalar)

so a product of two normal-form terms is

    (r x^a)(s x^b) = r sigma^a(s) c(a, b) x^(a+b),
    c(a, b) = prod_{i<j} c_ij^(a_j * b_i).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .coeffring import (CoeffPoly, NotHomogeneous, PolyRing, exponents_of_degree,
                        format_scalar_factor, grlex_key, hilbert_R, weight_of)
from .errors import (AlgebraMismatch, NotGraded, NotLocallyFinite, NotValidated,
                     ZeroInput)
from .gradedmap import GradedEndo
from .scalars import Field, RationalField, Scalar

MAX_VARIABLES = 64


class State(str, enum.Enum):
    UNVALIDATED = "unvalidated"
    QUASI_COMMUTATIVE = "quasi_commutative"
    GRADED_QUASI_COMMUTATIVE = "graded_quasi_commutative"

    @property
    def rank(self) -> int:
        return list(State).index(self)

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Clause:
    name: str
    ok: bool
    detail: str = ""

    def format(self) -> str:
        status = "ok" if self.ok else "FAIL"
        return f"{status:4} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class ValidationReport:
    clauses: list[Clause] = field(default_factory=list)
    state: State = State.UNVALIDATED

    def add(self, name, ok, detail=""):
        self.clauses.append(Clause(name, bool(ok), detail))

    def failures(self) -> list[Clause]:
        return [c for c in self.clauses if not c.ok]

    def passed(self, prefix: str) -> bool:
        return all(c.ok for c in self.clauses if c.name.startswith(prefix))

    def format(self) -> str:
        return "\n".join(c.format() for c in self.clauses)


class PbwAlgebra:
    """Data of a quasi-commutative skew PBW extension of R.

    ``sigmas[i]`` is the endomorphism attached to ``x_i``; ``c`` maps
    0-based pairs ``(i, j)`` with ``i < j`` to the scalar in
    ``x_j x_i = c[i, j] x_i x_j``. Pairs missing from ``c`` default to 1.
    The algebra is validated on construction unless ``validate=False``.
    """

    def __init__(self, ring: PolyRing, variables: Sequence[str],
                 sigmas: Sequence[GradedEndo] | None = None,
                 c: Mapping[tuple[int, int], object] | None = None,
                 validate: bool = True):
        variables = tuple(variables)
        n = len(variables)
        if n > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} variables are supported")
        if len(set(variables)) != n or set(variables) & set(ring.names):
            raise ValueError("variable names must be distinct from each other and from R's generators")
        if sigmas is None:
            sigmas = [GradedEndo.identity(ring)] * n
        sigmas = tuple(sigmas)
        if len(sigmas) != n:
            raise ValueError(f"expected {n} sigmas, got {len(sigmas)}")
        for s in sigmas:
            if s.ring != ring:
                raise ValueError("sigma defined over a different coefficient ring")
        F = ring.field
        cmap = {}
        for (i, j), v in (c or {}).items():
            if not 0 <= i < j < n:
                raise ValueError(f"c index ({i}, {j}) must satisfy 0 <= i < j < {n}")
            cmap[i, j] = F(v)
        for i in range(n):
            for j in range(i + 1, n):
                cmap.setdefault((i, j), Scalar(F.one, F))
        self.ring = ring
        self.field: Field = F
        self.variables = variables
        self.n = n
        self.sigmas = sigmas
        self.c = cmap
        self.state = State.UNVALIDATED
        self.report: ValidationReport | None = None
        self.definition = None
        self._nontrivial_c = [(i, j, v.value) for (i, j), v in sorted(cmap.items())
                              if v.value != F.one]
        self._sigma_cache: dict[tuple, GradedEndo] = {}
        self._zero = (0,) * n
        if validate:
            self.validate()

    # --- structure -----------------------------------------------------------

    def c_scalar(self, i: int, j: int) -> Scalar:
        """The scalar with ``x_j x_i = c x_i x_j``; c_ii = 1, c_ji = c_ij^{-1}."""
        if i == j:
            return Scalar(self.field.one, self.field)
        if i < j:
            return self.c[i, j]
        return self.c[j, i].inv()

    def validate(self) -> ValidationReport:
        """Check the axioms and record the strongest class satisfied."""
        report = ValidationReport()
        bijective = []
        for i, s in enumerate(self.sigmas):
            inj = s.is_invertible()
            # affine maps of a polynomial ring are injective iff bijective
            report.add(f"sigma[{self.variables[i]}] injective", inj)
            report.add(f"sigma[{self.variables[i]}] bijective", inj)
            bijective.append(inj)
        graded = []
        for i, s in enumerate(self.sigmas):
            ok = s.is_graded()
            report.add(f"sigma[{self.variables[i]}] graded", ok,
                       "" if ok else "some generator image is not homogeneous of its weight")
            graded.append(ok)
        commuting = True
        for i in range(self.n):
            for j in range(i + 1, self.n):
                ok = self.sigmas[i].commutes_with(self.sigmas[j])
                commuting &= ok
                report.add(f"sigma[{self.variables[i]}], sigma[{self.variables[j]}] commute", ok)
        c_ok = True
        for (i, j), v in sorted(self.c.items()):
            ok = not v.is_zero()
            c_ok &= ok
            report.add(f"c[{self.variables[i]},{self.variables[j]}] nonzero", ok, f"c = {v.value}")
        if all(bijective) and commuting and c_ok:
            report.state = State.QUASI_COMMUTATIVE
            if all(graded):
                report.state = State.GRADED_QUASI_COMMUTATIVE
        self.state = report.state
        self.report = report
        return report

    def require(self, state: State = State.QUASI_COMMUTATIVE):
        if self.state.rank < state.rank:
            if state is State.GRADED_QUASI_COMMUTATIVE and self.state is State.QUASI_COMMUTATIVE:
                raise NotGraded("algebra is not a graded quasi-commutative extension")
            raise NotValidated(f"algebra is {self.state}, operation needs {state}")

    @property
    def is_graded(self) -> bool:
        return self.state is State.GRADED_QUASI_COMMUTATIVE

    @property
    def connected(self) -> bool:
        return self.ring.connected

    def monomial_commute_scalar(self, alpha: Sequence[int], beta: Sequence[int]) -> Scalar:
        """c(alpha, beta) with x^alpha x^beta = c(alpha, beta) x^(alpha+beta)."""
        self.require()
        return Scalar(self._c_raw(tuple(alpha), tuple(beta)), self.field)

    def _c_raw(self, alpha, beta):
        F = self.field
        out = F.one
        for i, j, v in self._nontrivial_c:
            k = alpha[j] * beta[i]
            if k:
                out = F.mul(out, F.pow(v, k))
        return out

    def sigma_power(self, alpha: Sequence[int]) -> GradedEndo:
        """sigma_1^alpha_1 ∘ ... ∘ sigma_n^alpha_n."""
        self.require()
        return self._sigma_power(tuple(alpha))

    def _sigma_power(self, alpha: tuple) -> GradedEndo:
        cached = self._sigma_cache.get(alpha)
        if cached is not None:
            return cached
        k = max((i for i, a in enumerate(alpha) if a), default=None)
        if k is None:
            result = GradedEndo.identity(self.ring)
        else:
            prev = list(alpha)
            prev[k] -= 1
            result = self._sigma_power(tuple(prev)).compose(self.sigmas[k])
        self._sigma_cache[alpha] = result
        return result

    # --- elements ------------------------------------------------------------

    def element(self, terms: Mapping[Sequence[int], object] | None = None) -> "PbwElement":
        out = {}
        for alpha, coef in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.n or any(a < 0 for a in alpha):
                raise ValueError(f"bad exponent vector {alpha}")
            coef = self.ring(coef)
            if coef:
                out[alpha] = coef
        return PbwElement(self, out)

    def zero(self) -> "PbwElement":
        return PbwElement(self, {})

    def one(self) -> "PbwElement":
        return PbwElement(self, {self._zero: self.ring.one()})

    def scalar(self, c) -> "PbwElement":
        return self.coeff(self.ring.const(c))

    def coeff(self, r: CoeffPoly) -> "PbwElement":
        r = self.ring(r)
        return PbwElement(self, {self._zero: r} if r else {})

    def monomial(self, alpha: Sequence[int], coef=1) -> "PbwElement":
        return self.element({tuple(alpha): coef})

    def var(self, i) -> "PbwElement":
        if isinstance(i, str):
            i = self.variables.index(i)
        alpha = [0] * self.n
        alpha[i] = 1
        return PbwElement(self, {tuple(alpha): self.ring.one()})

    def gen(self, name: str) -> "PbwElement":
        """The element named ``name``: an R-generator or a variable."""
        if name in self.variables:
            return self.var(name)
        return self.coeff(self.ring.gen(name))

    def __call__(self, value) -> "PbwElement":
        if isinstance(value, PbwElement):
            if value.algebra is not self and value.algebra != self:
                raise AlgebraMismatch("element belongs to a different algebra")
            return value
        if isinstance(value, str):
            from .frontend.parser import parse_expr

            return parse_expr(value, self)
        if isinstance(value, CoeffPoly):
            return self.coeff(value)
        return self.scalar(value)

    # --- grading -------------------------------------------------------------

    def hilbert(self, d: int) -> int:
        """dim_K A_d, summing dim R_k times the number of alpha with |alpha| = d-k."""
        self.require(State.GRADED_QUASI_COMMUTATIVE)
        if d < 0:
            raise ValueError("degree must be nonnegative")
        if self.ring.m and not self.ring.connected:
            raise NotLocallyFinite("coefficient ring has weight-0 generators")
        total = 0
        for k in range(d + 1):
            dim_r = hilbert_R(self.ring.weights, k)
            if dim_r:
                total += dim_r * sum(1 for _ in exponents_of_degree(self.n, d - k))
        return total

    # --- identity ------------------------------------------------------------

    def _key(self):
        return (self.ring, self.variables, self.sigmas,
                tuple(sorted((k, v.value) for k, v in self.c.items())))

    def __eq__(self, other):
        return isinstance(other, PbwAlgebra) and (self is other or self._key() == other._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"PbwAlgebra(R={self.ring!r}, variables={self.variables}, "
                f"state={self.state})")


class PbwElement:
    """An element of a :class:`PbwAlgebra` in PBW normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: PbwAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _lift(self, other):
        if isinstance(other, PbwElement):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise AlgebraMismatch("elements belong to different algebras")
            return other
        if isinstance(other, (int, Fraction, Scalar, CoeffPoly)):
            return self.algebra(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for a, r in other.terms.items():
            if a in out:
                s = out[a] + r
                if s:
                    out[a] = s
                else:
                    del out[a]
            else:
                out[a] = r
        return PbwElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return PbwElement(self.algebra, {a: -r for a, r in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return multiply(other, self)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, PbwElement):
            return self.algebra == other.algebra and self.terms == other.terms
        lifted = self._lift(other) if isinstance(other, (int, Fraction, Scalar, CoeffPoly)) else None
        if lifted is None:
            return NotImplemented
        return self.terms == lifted.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, alpha: Sequence[int]) -> CoeffPoly:
        return self.terms.get(tuple(alpha), self.algebra.ring.zero())

    def items(self):
        for a in sorted(self.terms, key=grlex_key):
            yield a, self.terms[a]

    def degree(self):
        return degree_of(self)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"PbwElement({str(self)!r})"


def multiply(f: PbwElement, g: PbwElement) -> PbwElement:
    """Product of two normal-form elements, returned in normal form."""
    A = f.algebra
    if g.algebra is not A and g.algebra != A:
        raise AlgebraMismatch("elements belong to different algebras")
    A.require()
    F = A.field
    one = F.one
    out: dict[tuple, CoeffPoly] = {}
    trivial_sigma = A.ring.m == 0
    for a, r in f.terms.items():
        sig = None if trivial_sigma else A._sigma_power(a)
        for b, s in g.terms.items():
            s_moved = s if sig is None else sig.apply(s)
            coef = r * s_moved
            cab = A._c_raw(a, b)
            if cab != one:
                coef = coef.scale(cab)
            key = tuple(x + y for x, y in zip(a, b))
            if key in out:
                out[key] = out[key] + coef
            else:
                out[key] = coef
    return PbwElement(A, {k: v for k, v in out.items() if v})


def degree_of(f: PbwElement):
    """Common value of weight(r) + |alpha| over the terms, or NotHomogeneous."""
    f.algebra.require(State.GRADED_QUASI_COMMUTATIVE)
    if not f.terms:
        raise ZeroInput("the zero element has no degree")
    degrees = set()
    for a, r in f.terms.items():
        w = weight_of(r)
        if w is NotHomogeneous:
            return NotHomogeneous
        degrees.add(w + sum(a))
    return degrees.pop() if len(degrees) == 1 else NotHomogeneous


def hilbert_A(a: PbwAlgebra, d: int) -> int:
    return a.hilbert(d)


def monomial_text(names: Sequence[str], alpha: Sequence[int]) -> str:
    parts = []
    for name, e in zip(names, alpha):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_element(f: PbwElement) -> str:
    """Canonical text: terms in graded-lex order of exponent vectors.

    Multi-term coefficients are parenthesized; the output parses back to the
    same element.
    """
    A = f.algebra
    F = A.field
    rational = isinstance(F, RationalField)
    pieces: list[tuple[bool, str]] = []
    for alpha in sorted(f.terms, key=grlex_key):
        r = f.terms[alpha]
        xm = monomial_text(A.variables, alpha)
        if len(r.terms) == 1 or not xm:
            for e in sorted(r.terms, key=grlex_key):
                c = r.terms[e]
                neg = rational and c < 0
                if neg:
                    c = -c
                mono = "*".join(p for p in (r._monomial_str(e), xm) if p)
                if not mono:
                    body = F.format_raw(c)
                elif c == F.one:
                    body = mono
                else:
                    body = f"{format_scalar_factor(c, F)}*{mono}"
                pieces.append((neg, body))
        else:
            pieces.append((False, f"({r})*{xm}"))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out
