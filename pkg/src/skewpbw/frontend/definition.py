"""Algebra definition files (``.alg``).

A definition is an INI-style document with these sections::

    [field]
    kind = q                 # or fp:<p>

    [ring]                   # coefficient generators, in order, with weights
    t1 = 1
    t2 = 1

    [variables]
    names = x1 x2

    [sigma]                  # <variable>.<generator> = image; omitted = fixed
    x1.t1 = 3*t1

    [c]                      # <xi>,<xj> = scalar with xj*xi = c*xi*xj, i < j
    x1,x2 = 2

    [nu]                     # optional automorphism of R; omitted = fixed
    t1 = t1

    [doc]                    # free-form notes, kept verbatim
    title = ...

Only ``[field]`` and ``[variables]`` are required.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

from ..coeffring import PolyRing
from ..errors import InputError, SchemaError, ValidationFailed
from ..gradedmap import GradedEndo
from ..pbw import PbwAlgebra, State
from ..scalars import field_from_spec
from .parser import parse_poly, parse_scalar_expr

SECTIONS = ("field", "ring", "variables", "sigma", "c", "nu", "doc")


@dataclass
class AlgebraDefinition:
    field: str = "q"
    ring: list[tuple[str, int]] = dc_field(default_factory=list)
    variables: list[str] = dc_field(default_factory=list)
    sigma: dict[tuple[str, str], str] = dc_field(default_factory=dict)
    c: dict[tuple[str, str], str] = dc_field(default_factory=dict)
    nu: dict[str, str] = dc_field(default_factory=dict)
    doc: dict[str, str] = dc_field(default_factory=dict)

    @classmethod
    def parse(cls, src: str) -> "AlgebraDefinition":
        cp = configparser.ConfigParser(
            delimiters=("=",), comment_prefixes=("#",), inline_comment_prefixes=("#",),
            strict=True, interpolation=None, empty_lines_in_values=False)
        cp.optionxform = str
        try:
            cp.read_string(src)
        except configparser.Error as exc:
            raise SchemaError(f"malformed definition: {exc}") from None
        unknown = set(cp.sections()) - set(SECTIONS)
        if unknown:
            raise SchemaError(f"unknown sections: {sorted(unknown)}")
        for required in ("field", "variables"):
            if not cp.has_section(required):
                raise SchemaError(f"missing [{required}] section")

        d = cls()
        d.field = _get_only(cp, "field", "kind")
        field_from_spec(d.field)

        if cp.has_section("ring"):
            for name, w in cp.items("ring"):
                _check_ident(name, "generator")
                try:
                    weight = int(w)
                except ValueError:
                    raise SchemaError(f"weight of {name!r} must be an integer, got {w!r}") from None
                if weight < 0:
                    raise SchemaError(f"weight of {name!r} must be nonnegative")
                d.ring.append((name, weight))
        gens = [g for g, _ in d.ring]

        names = _get_only(cp, "variables", "names").replace(",", " ").split()
        for v in names:
            _check_ident(v, "variable")
        if len(set(names)) != len(names):
            raise SchemaError("duplicate variable names")
        if set(names) & set(gens):
            raise SchemaError("variable names clash with generator names")
        d.variables = names

        if cp.has_section("sigma"):
            for key, text in cp.items("sigma"):
                var, _, gen = key.partition(".")
                var, gen = var.strip(), gen.strip()
                if var not in names:
                    raise SchemaError(f"[sigma] {key!r}: unknown variable {var!r}")
                if gen not in gens:
                    raise SchemaError(f"[sigma] {key!r}: unknown generator {gen!r}")
                if (var, gen) in d.sigma:
                    raise SchemaError(f"[sigma] duplicate entry {key!r}")
                d.sigma[var, gen] = text.strip()

        if cp.has_section("c"):
            for key, text in cp.items("c"):
                parts = [p.strip() for p in key.split(",")]
                if len(parts) != 2 or not all(p in names for p in parts):
                    raise SchemaError(f"[c] key {key!r} must be '<xi>,<xj>' with known variables")
                xi, xj = parts
                if names.index(xi) >= names.index(xj):
                    raise SchemaError(f"[c] key {key!r} must list the earlier variable first")
                if (xi, xj) in d.c:
                    raise SchemaError(f"[c] duplicate entry {key!r}")
                d.c[xi, xj] = text.strip()

        if cp.has_section("nu"):
            for gen, text in cp.items("nu"):
                if gen not in gens:
                    raise SchemaError(f"[nu] unknown generator {gen!r}")
                d.nu[gen] = text.strip()

        if cp.has_section("doc"):
            d.doc = {k: v.strip() for k, v in cp.items("doc")}
        return d

    def to_text(self) -> str:
        lines = ["[field]", f"kind = {self.field}", "", "[ring]"]
        lines += [f"{g} = {w}" for g, w in self.ring]
        lines += ["", "[variables]", "names = " + " ".join(self.variables)]
        if self.sigma:
            lines += ["", "[sigma]"] + [f"{v}.{g} = {t}" for (v, g), t in self.sigma.items()]
        if self.c:
            lines += ["", "[c]"] + [f"{a},{b} = {t}" for (a, b), t in self.c.items()]
        if self.nu:
            lines += ["", "[nu]"] + [f"{g} = {t}" for g, t in self.nu.items()]
        if self.doc:
            lines += ["", "[doc]"]
            for k, v in self.doc.items():
                body = v.split("\n")
                lines.append(f"{k} = {body[0]}")
                lines += [f"    {cont}" for cont in body[1:]]
        return "\n".join(lines) + "\n"

    def coefficient_ring(self, field_spec: str | None = None) -> PolyRing:
        F = field_from_spec(field_spec or self.field)
        return PolyRing([g for g, _ in self.ring], [w for _, w in self.ring], F)

    def build(self, field_spec: str | None = None, validate: bool = True) -> PbwAlgebra:
        """Construct the algebra, optionally reading all data over another field."""
        ring = self.coefficient_ring(field_spec)
        sigmas = []
        for v in self.variables:
            images = {g: parse_poly(t, ring) for (var, g), t in self.sigma.items() if var == v}
            sigmas.append(GradedEndo.from_mapping(ring, images))
        idx = {v: i for i, v in enumerate(self.variables)}
        c = {(idx[a], idx[b]): parse_scalar_expr(t, ring.field) for (a, b), t in self.c.items()}
        algebra = PbwAlgebra(ring, self.variables, sigmas, c, validate=validate)
        algebra.definition = self
        return algebra

    def nu_endo(self, ring: PolyRing) -> GradedEndo | None:
        if not self.nu:
            return None
        return GradedEndo.from_mapping(ring, {g: parse_poly(t, ring) for g, t in self.nu.items()})


def _get_only(cp, section, key):
    items = dict(cp.items(section))
    if key not in items:
        raise SchemaError(f"[{section}] needs a {key!r} entry")
    extra = set(items) - {key}
    if extra:
        raise SchemaError(f"[{section}] has unexpected keys {sorted(extra)}")
    return items[key].strip()


def _check_ident(name, what):
    if not name.isidentifier():
        raise SchemaError(f"{what} name {name!r} is not an identifier")


def load_definition(src: str, field_spec: str | None = None) -> PbwAlgebra:
    """Parse, build and validate an algebra from definition text.

    Raises :class:`ValidationFailed` when the data satisfy none of the
    supported classes (e.g. a zero commutation scalar).
    """
    d = AlgebraDefinition.parse(src)
    try:
        algebra = d.build(field_spec)
    except (KeyError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise SchemaError(str(exc)) from None
    if algebra.state is State.UNVALIDATED:
        raise ValidationFailed(algebra.report)
    return algebra


def _fixture_dir():
    return resources.files("skewpbw") / "fixtures"


def list_fixtures() -> list[str]:
    return sorted(p.name for p in _fixture_dir().iterdir() if p.name.endswith(".alg"))


def bundled_fixture(name: str) -> str:
    """Text of a bundled fixture, e.g. ``bundled_fixture("quantum_affine_3.alg")``."""
    if not name.endswith(".alg"):
        name += ".alg"
    path = _fixture_dir() / name
    if not path.is_file():
        raise FileNotFoundError(f"no bundled fixture named {name!r}")
    return path.read_text()


def read_definition_source(path_or_name: str) -> str:
    """Read a definition from disk, falling back to the bundled fixtures."""
    p = Path(path_or_name)
    if p.is_file():
        return p.read_text()
    try:
        return bundled_fixture(p.name)
    except FileNotFoundError:
        raise FileNotFoundError(f"definition file not found: {path_or_name}") from None
