"""Affine-linear endomorphisms of R = K[t_1..t_m] given by generator images."""

from __future__ import annotations

from typing import Mapping, Sequence

from .coeffring import CoeffPoly, PolyRing, weight_of
from .errors import NotAffineLinear, NotGradedRestrictable, NotInvertible, RingMismatch
from .scalars import Field, Scalar


def determinant(matrix: Sequence[Sequence], field: Field):
    """Determinant of a square matrix of raw field values (Bareiss elimination)."""
    n = len(matrix)
    if n == 0:
        return field.one
    a = [list(row) for row in matrix]
    sign = field.one
    prev = field.one
    for k in range(n - 1):
        if a[k][k] == field.zero:
            for r in range(k + 1, n):
                if a[r][k] != field.zero:
                    a[k], a[r] = a[r], a[k]
                    sign = field.neg(sign)
                    break
            else:
                return field.zero
        inv_prev = field.inv(prev)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = field.sub(field.mul(a[i][j], a[k][k]), field.mul(a[i][k], a[k][j]))
                a[i][j] = field.mul(num, inv_prev)
        prev = a[k][k]
    return field.mul(sign, a[n - 1][n - 1])


def inverse_matrix(matrix: Sequence[Sequence], field: Field):
    """Inverse by Gauss-Jordan elimination; raises NotInvertible if singular."""
    n = len(matrix)
    a = [list(row) + [field.one if i == j else field.zero for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != field.zero), None)
        if pivot is None:
            raise NotInvertible("linear part is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p_inv = field.inv(a[col][col])
        a[col] = [field.mul(v, p_inv) for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != field.zero:
                f = a[r][col]
                a[r] = [field.sub(v, field.mul(f, w)) for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


class GradedEndo:
    """An endomorphism of R sending generator ``t_k`` to ``images[k]``.

    Images must be affine-linear (total degree at most 1). Whether the map
    respects the grading is a property (:meth:`is_graded`), not a
    construction requirement, so that validation can report it.
    """

    __slots__ = ("ring", "images", "_matrix", "_offset")

    def __init__(self, ring: PolyRing, images: Sequence[CoeffPoly]):
        images = tuple(ring(img) for img in images)
        if len(images) != ring.m:
            raise ValueError(f"expected {ring.m} generator images, got {len(images)}")
        for k, img in enumerate(images):
            if img.total_degree() > 1:
                raise NotAffineLinear(
                    f"image of {ring.names[k]} is not affine-linear: {img}")
        self.ring = ring
        self.images = images
        F = ring.field
        unit = [tuple(1 if j == k else 0 for j in range(ring.m)) for k in range(ring.m)]
        self._matrix = tuple(
            tuple(img.terms.get(unit[j], F.zero) for j in range(ring.m)) for img in images)
        self._offset = tuple(img.constant_term() for img in images)

    @classmethod
    def identity(cls, ring: PolyRing) -> "GradedEndo":
        return cls(ring, ring.gens())

    @classmethod
    def from_mapping(cls, ring: PolyRing, mapping: Mapping[str, object]) -> "GradedEndo":
        """Build from ``{generator name: image}``; omitted generators are fixed."""
        unknown = set(mapping) - set(ring.names)
        if unknown:
            raise KeyError(f"unknown generators {sorted(unknown)}")
        return cls(ring, [ring(mapping[name]) if name in mapping else ring.gen(k)
                          for k, name in enumerate(ring.names)])

    @classmethod
    def diagonal(cls, ring: PolyRing, factors: Sequence) -> "GradedEndo":
        """``t_k -> factors[k] * t_k``."""
        return cls(ring, [ring.gen(k) * ring.const(f) for k, f in enumerate(factors)])

    def _check(self, other_ring: PolyRing):
        if other_ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other_ring}")

    def apply(self, f: CoeffPoly) -> CoeffPoly:
        self._check(f.ring)
        if self.ring.m == 0:
            return f
        return f.substitute(self.images)

    __call__ = apply

    def compose(self, other: "GradedEndo") -> "GradedEndo":
        """``self ∘ other``: apply ``other`` first."""
        self._check(other.ring)
        return GradedEndo(self.ring, [self.apply(img) for img in other.images])

    def __matmul__(self, other: "GradedEndo") -> "GradedEndo":
        return self.compose(other)

    def __pow__(self, k: int) -> "GradedEndo":
        if k < 0:
            return self.invert() ** (-k)
        result = GradedEndo.identity(self.ring)
        base = self
        while k:
            if k & 1:
                result = result.compose(base)
            k >>= 1
            if k:
                base = base.compose(base)
        return result

    def is_invertible(self) -> bool:
        return determinant(self._matrix, self.ring.field) != self.ring.field.zero

    def invert(self) -> "GradedEndo":
        # t -> M t + b has inverse t -> M^{-1} t - M^{-1} b
        F = self.ring.field
        m = self.ring.m
        n_inv = inverse_matrix(self._matrix, F)
        images = []
        for k in range(m):
            terms = {}
            const = F.zero
            for j in range(m):
                v = n_inv[k][j]
                if v != F.zero:
                    e = tuple(1 if i == j else 0 for i in range(m))
                    terms[e] = v
                    const = F.sub(const, F.mul(v, self._offset[j]))
            if const != F.zero:
                terms[(0,) * m] = const
            images.append(CoeffPoly(self.ring, terms, _clean=False))
        return GradedEndo(self.ring, images)

    def is_graded(self) -> bool:
        """Each weight-w generator maps to a homogeneous element of weight w."""
        for img, w in zip(self.images, self.ring.weights):
            if not img.terms:
                continue
            if weight_of(img) != w:
                return False
        return True

    def is_identity(self) -> bool:
        return all(img == g for img, g in zip(self.images, self.ring.gens()))

    def linear_part_matrix(self) -> list[list[Scalar]]:
        """Matrix of the map on the span of weight-1 generators.

        Row a holds the coefficients of the image of the a-th weight-1
        generator.
        """
        rows = self._weight_one_matrix()
        F = self.ring.field
        return [[Scalar(v, F) for v in row] for row in rows]

    def _weight_one_matrix(self):
        idx = [k for k, w in enumerate(self.ring.weights) if w == 1]
        allowed = {tuple(1 if i == j else 0 for i in range(self.ring.m)) for j in idx}
        for k in idx:
            stray = set(self.images[k].terms) - allowed
            if stray:
                raise NotGradedRestrictable(
                    f"image of {self.ring.names[k]} leaves the weight-1 span: {self.images[k]}")
        return [[self._matrix[a][b] for b in idx] for a in idx]

    def weight_one_determinant(self) -> Scalar:
        """det of :meth:`linear_part_matrix` (1 for an empty weight-1 span)."""
        F = self.ring.field
        return Scalar(determinant(self._weight_one_matrix(), F), F)

    def commutes_with(self, other: "GradedEndo") -> bool:
        return self.compose(other).images == other.compose(self).images

    def __eq__(self, other):
        return isinstance(other, GradedEndo) and self.ring == other.ring and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def format_lines(self) -> list[str]:
        return [f"{name} -> {img}" for name, img in zip(self.ring.names, self.images)]

    def __repr__(self):
        return "GradedEndo(" + ", ".join(self.format_lines()) + ")"


def apply(e: GradedEndo, f: CoeffPoly) -> CoeffPoly:
    return e.apply(f)


def compose(e1: GradedEndo, e2: GradedEndo) -> GradedEndo:
    return e1.compose(e2)


def invert(e: GradedEndo) -> GradedEndo:
    return e.invert()


def linear_part_matrix(e: GradedEndo) -> list[list[Scalar]]:
    return e.linear_part_matrix()
