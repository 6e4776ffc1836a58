"""Exact arithmetic and Nakayama automorphisms for graded quasi-commutative
skew PBW extensions."""

from .coeffring import CoeffPoly, NotHomogeneous, PolyRing, hilbert_R, homogeneous_components, weight_of
from .gradedmap import GradedEndo
from .nakayama import (AlgebraAutomorphism, extend_by, hdet_stage, is_calabi_yau, nakayama,
                       verify_automorphism)
from .pbw import PbwAlgebra, PbwElement, State, degree_of, hilbert_A, multiply
from .scalars import GF, QQ, PrimeField, Scalar
from .tower import OreTower, build_tower, tower_multiply

__all__ = [
    "AlgebraAutomorphism",
    "CoeffPoly",
    "GF",
    "GradedEndo",
    "NotHomogeneous",
    "OreTower",
    "PbwAlgebra",
    "PbwElement",
    "PolyRing",
    "PrimeField",
    "QQ",
    "Scalar",
    "State",
    "build_tower",
    "degree_of",
    "extend_by",
    "hdet_stage",
    "hilbert_A",
    "hilbert_R",
    "homogeneous_components",
    "is_calabi_yau",
    "multiply",
    "nakayama",
    "tower_multiply",
    "verify_automorphism",
    "weight_of",
]
