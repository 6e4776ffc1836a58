"""Iterated Ore-extension presentation R[z_1; θ_1]...[z_n; θ_n].

Stage j adjoins z_j with z_j a = θ_j(a) z_j for every a of lower stage, where
θ_j acts on R by sigma_j and on earlier variables by θ_j(z_i) = c_ij z_i.

:func:`tower_multiply` multiplies by pushing single letters through one at a
time with these stage rules. It never forms sigma^alpha or the closed-form
scalar c(alpha, beta), which makes it an independent check on
:func:`skewpbw.pbw.multiply`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffring import CoeffPoly
from .errors import AlgebraMismatch
from .gradedmap import GradedEndo
from .pbw import PbwAlgebra, PbwElement, State
from .scalars import Scalar


@dataclass(frozen=True)
class Stage:
    index: int
    variable: str
    r_action: GradedEndo
    var_scalars: tuple[Scalar, ...]  # θ_j(z_i) = var_scalars[i] * z_i for i < j

    def format_lines(self, variables) -> list[str]:
        theta = f"theta_{self.index + 1}"
        ring = self.r_action.ring
        lines = [f"{theta}({name}) = {img}" for name, img in zip(ring.names, self.r_action.images)]
        for i, s in enumerate(self.var_scalars):
            coef = "" if s.value == s.field.one else f"{_fmt(s)}*"
            lines.append(f"{theta}({variables[i]}) = {coef}{variables[i]}")
        return lines


def _fmt(s: Scalar) -> str:
    text = s.field.format_raw(s.value)
    return f"({text})" if "/" in text or text.startswith("-") else text


class OreTower:
    """The stages θ_1..θ_n of the iterated Ore extension isomorphic to A."""

    def __init__(self, algebra: PbwAlgebra, stages):
        self.algebra = algebra
        self.stages = tuple(stages)

    def __len__(self):
        return len(self.stages)

    def theta(self, j: int, f: PbwElement) -> PbwElement:
        """Apply θ_j to an element involving only variables of stage < j."""
        A = self.algebra
        stage = self.stages[j]
        F = A.field
        out = {}
        for alpha, r in f.terms.items():
            if any(alpha[j:]):
                raise ValueError(f"theta_{j + 1} is only defined below stage {j + 1}")
            scale = F.one
            for i in range(j):
                if alpha[i]:
                    scale = F.mul(scale, F.pow(stage.var_scalars[i].value, alpha[i]))
            img = stage.r_action.apply(r).scale(scale)
            if img:
                out[alpha] = img
        return PbwElement(A, out)

    def format_lines(self) -> list[str]:
        lines = []
        for st in self.stages:
            lines.append(f"stage {st.index + 1}: {st.variable}")
            lines += ["  " + line for line in st.format_lines(self.algebra.variables)]
        return lines


def build_tower(a: PbwAlgebra) -> OreTower:
    a.require(State.GRADED_QUASI_COMMUTATIVE)
    stages = []
    for j in range(a.n):
        scalars = tuple(a.c[i, j] for i in range(j))
        stages.append(Stage(j, a.variables[j], a.sigmas[j], scalars))
    return OreTower(a, stages)


def _push_letter(tower: OreTower, k: int, g: dict) -> dict:
    """Left-multiply the normal-form element ``g`` by the single letter z_k."""
    A = tower.algebra
    F = A.field
    stage = tower.stages[k]
    out: dict[tuple, CoeffPoly] = {}
    for beta, s in g.items():
        # z_k s = θ_k(s) z_k; z_k then passes z_i (i < k) picking up θ_k(z_i) = c_ik z_i
        # and stops in front of z_{k+1}
        moved = stage.r_action.apply(s)
        scale = F.one
        for i in range(k):
            if beta[i]:
                scale = F.mul(scale, F.pow(stage.var_scalars[i].value, beta[i]))
        key = list(beta)
        key[k] += 1
        key = tuple(key)
        coef = moved.scale(scale)
        out[key] = out[key] + coef if key in out else coef
    return {b: r for b, r in out.items() if r}


def tower_multiply(t: OreTower, f: PbwElement, g: PbwElement) -> PbwElement:
    A = t.algebra
    for e in (f, g):
        if e.algebra is not A and e.algebra != A:
            raise AlgebraMismatch("element does not belong to the tower's algebra")
    result: dict = {}
    for alpha, r in f.terms.items():
        current = dict(g.terms)
        # x^alpha = z_1^a1 ... z_n^an: push letters starting from the rightmost
        for k in reversed(range(A.n)):
            for _ in range(alpha[k]):
                current = _push_letter(t, k, current)
        for beta, s in current.items():
            coef = r * s
            result[beta] = result[beta] + coef if beta in result else coef
    return PbwElement(A, {b: v for b, v in result.items() if v})
