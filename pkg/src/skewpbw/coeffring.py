"""The graded commutative coefficient ring R = K[t_1, ..., t_m].

Polynomials are sparse dictionaries from exponent tuples to raw field values.
Each generator carries a nonnegative integer weight; all weights zero is the
trivial grading.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import NotLocallyFinite, RingMismatch, ZeroInput
from .scalars import QQ, Field, RationalField, Scalar


class _NotHomogeneous:
    """Marker returned by degree queries on non-homogeneous input."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotHomogeneous"

    def __bool__(self):
        return False


NotHomogeneous = _NotHomogeneous()


def grlex_key(exp: Sequence[int]):
    """Sort key putting higher total degree first, then lex-larger first."""
    return (-sum(exp), tuple(-e for e in exp))


class PolyRing:
    """Context for K[t_1..t_m]: generator names, weights, base field."""

    def __init__(self, names: Sequence[str] = (), weights: Sequence[int] | None = None,
                 field: Field = QQ):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise ValueError("need exactly one weight per generator")
        if any(w < 0 for w in weights):
            raise ValueError("weights must be nonnegative")
        self.names = names
        self.weights = weights
        self.field = field
        self.m = len(names)
        self._zero_exp = (0,) * self.m

    @property
    def trivially_graded(self) -> bool:
        return all(w == 0 for w in self.weights)

    @property
    def connected(self) -> bool:
        """True when R_0 = K, i.e. every generator has positive weight."""
        return all(w > 0 for w in self.weights)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.weights == other.weights and self.field == other.field)

    def __hash__(self):
        return hash((self.names, self.weights, self.field))

    def __repr__(self):
        gens = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"PolyRing({self.field!r}[{gens}])"

    # constructors

    def zero(self) -> "CoeffPoly":
        return CoeffPoly(self, {})

    def one(self) -> "CoeffPoly":
        return self.const(self.field.one)

    def const(self, c) -> "CoeffPoly":
        if isinstance(c, Scalar):
            c = self.field(c).value
        else:
            c = self.field.normalize(c)
        return CoeffPoly(self, {self._zero_exp: c} if c != self.field.zero else {})

    def gen(self, k) -> "CoeffPoly":
        if isinstance(k, str):
            k = self.index(k)
        exp = [0] * self.m
        exp[k] = 1
        return CoeffPoly(self, {tuple(exp): self.field.one})

    def gens(self) -> list["CoeffPoly"]:
        return [self.gen(k) for k in range(self.m)]

    def monomial(self, exp: Sequence[int], c=None) -> "CoeffPoly":
        c = self.field.one if c is None else self.field(c).value
        return CoeffPoly(self, {tuple(exp): c} if c != self.field.zero else {})

    def __call__(self, value) -> "CoeffPoly":
        if isinstance(value, CoeffPoly):
            if value.ring != self:
                raise RingMismatch(f"{value.ring} vs {self}")
            return value
        if isinstance(value, str):
            from .frontend.parser import parse_poly

            return parse_poly(value, self)
        return self.const(value)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.names, self.weights, field)


class CoeffPoly:
    """An immutable element of a :class:`PolyRing`.

    ``terms`` maps exponent tuples to nonzero raw field values.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, object], _clean=True):
        self.ring = ring
        if _clean:
            zero = ring.field.zero
            terms = {e: c for e, c in terms.items() if c != zero}
        self.terms = terms
        self._hash = None

    # arithmetic

    def _check(self, other: "CoeffPoly"):
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, CoeffPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = F.add(out[e], c)
                if s == F.zero:
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return CoeffPoly(self.ring, out, _clean=False)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return CoeffPoly(self.ring, {e: F.neg(c) for e, c in self.terms.items()}, _clean=False)

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
        F = self.ring.field
        zero = F.zero
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = F.mul(c1, c2)
                if e in out:
                    out[e] = F.add(out[e], c)
                else:
                    out[e] = c
        return CoeffPoly(self.ring, {e: c for e, c in out.items() if c != zero}, _clean=False)

    __rmul__ = __mul__

    def scale(self, c) -> "CoeffPoly":
        """Multiply by a raw field value."""
        F = self.ring.field
        if c == F.zero:
            return self.ring.zero()
        if c == F.one:
            return self
        return CoeffPoly(self.ring, {e: F.mul(v, c) for e, v in self.terms.items()}, _clean=False)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison

    def __eq__(self, other):
        if isinstance(other, CoeffPoly):
            return self.ring == other.ring and self.terms == other.terms
        lifted = self._lift(other) if isinstance(other, (int, Fraction, Scalar)) else None
        if lifted is None:
            return NotImplemented
        return self.terms == lifted.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_term(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coefficient(self, exp: Sequence[int]) -> Scalar:
        return Scalar(self.terms.get(tuple(exp), self.ring.field.zero), self.ring.field)

    def items(self):
        """(exponent, Scalar) pairs in graded-lex order."""
        F = self.ring.field
        for e in sorted(self.terms, key=grlex_key):
            yield e, Scalar(self.terms[e], F)

    def substitute(self, images: Sequence["CoeffPoly"]) -> "CoeffPoly":
        """Replace generator k by ``images[k]`` and expand."""
        ring = images[0].ring if images else self.ring
        if not self.terms:
            return ring.zero()
        if self.ring.m == 0:
            return ring.const(Scalar(self.constant_term(), self.ring.field))
        powers = [[ring.one()] for _ in range(self.ring.m)]
        result = ring.zero()
        for e, c in self.terms.items():
            term = ring.const(Scalar(c, self.ring.field))
            for k, a in enumerate(e):
                if a:
                    pk = powers[k]
                    while len(pk) <= a:
                        pk.append(pk[-1] * images[k])
                    term = term * pk[a]
            result = result + term
        return result

    # printing

    def _monomial_str(self, e) -> str:
        parts = []
        for name, a in zip(self.ring.names, e):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts)

    def __str__(self):
        return format_linear_combination(
            ((self._monomial_str(e), self.terms[e]) for e in sorted(self.terms, key=grlex_key)),
            self.ring.field,
        )

    def __repr__(self):
        return f"CoeffPoly({str(self)!r})"


def format_scalar_factor(c, field: Field) -> str:
    """Format a nonzero raw scalar so it can prefix ``*monomial``."""
    text = field.format_raw(c)
    return f"({text})" if "/" in text else text


def format_linear_combination(pairs, field: Field) -> str:
    """Render ``(monomial_text, raw_coeff)`` pairs, omitting unit coefficients.

    Over F_p coefficients are printed as residues in [0, p) so the output is
    canonical; over the rationals negative coefficients become subtraction.
    """
    out = []
    for mono, c in pairs:
        neg = False
        if isinstance(field, RationalField):
            if c < 0:
                neg, c = True, -c
        if mono:
            body = mono if c == field.one else f"{format_scalar_factor(c, field)}*{mono}"
        else:
            body = field.format_raw(c)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


# --- graded structure -------------------------------------------------------


def weight_of(f: CoeffPoly, weights: Sequence[int] | None = None):
    """Common weighted degree of all terms of f, or ``NotHomogeneous``."""
    if not f.terms:
        raise ZeroInput("the zero polynomial has no weight")
    weights = f.ring.weights if weights is None else tuple(weights)
    degrees = {sum(w * a for w, a in zip(weights, e)) for e in f.terms}
    return degrees.pop() if len(degrees) == 1 else NotHomogeneous


def homogeneous_components(f: CoeffPoly, weights: Sequence[int] | None = None) -> dict:
    weights = f.ring.weights if weights is None else tuple(weights)
    parts: dict[int, dict] = {}
    for e, c in f.terms.items():
        d = sum(w * a for w, a in zip(weights, e))
        parts.setdefault(d, {})[e] = c
    return {d: CoeffPoly(f.ring, parts[d], _clean=False) for d in sorted(parts)}


def is_homogeneous(f: CoeffPoly, weights: Sequence[int] | None = None) -> bool:
    return not f.terms or weight_of(f, weights) is not NotHomogeneous


def hilbert_R(weights: Sequence[int], d: int) -> int:
    """dim_K R_d by enumerating exponent vectors of weighted degree d."""
    weights = tuple(weights)
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if any(w <= 0 for w in weights):
        raise NotLocallyFinite("a generator of weight 0 makes R_0 infinite-dimensional")
    return sum(1 for _ in _weighted_exponents(weights, d))


def _weighted_exponents(weights, d):
    if not weights:
        if d == 0:
            yield ()
        return
    w, rest = weights[0], weights[1:]
    for a in range(d // w + 1):
        for tail in _weighted_exponents(rest, d - a * w):
            yield (a,) + tail


def exponents_of_degree(n: int, d: int):
    """All exponent vectors in N^n with entries summing to d."""
    if n == 0:
        if d == 0:
            yield ()
        return
    for combo in itertools.combinations_with_replacement(range(n), d):
        exp = [0] * n
        for i in combo:
            exp[i] += 1
        yield tuple(exp)


def poly_mul(f: CoeffPoly, g: CoeffPoly) -> CoeffPoly:
    return f * g
