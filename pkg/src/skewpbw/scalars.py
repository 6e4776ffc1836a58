"""Exact base fields: the rationals and prime fields F_p.

A field object knows how to do arithmetic on *raw* values (``Fraction`` for
the rationals, ``int`` residues for F_p). Polynomials store raw values for
speed; :class:`Scalar` wraps a raw value together with its field for the
public API.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, FieldMismatch, InputError


class Field:
    """Common interface of the exact base fields."""

    zero = None
    one = None

    def normalize(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        return a**k if k else self.one

    def format_raw(self, a) -> str:
        raise NotImplementedError

    def parse_raw(self, text: str):
        raise NotImplementedError

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not an element of {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return Scalar(self.normalize(value), self)

    def parse(self, text: str) -> "Scalar":
        return Scalar(self.parse_raw(text), self)

    def spec(self) -> str:
        """Short field tag used by definition files and ``--field``."""
        raise NotImplementedError


class RationalField(Field):
    """The field of rational numbers, backed by :class:`fractions.Fraction`."""

    zero = Fraction(0)
    one = Fraction(1)

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def normalize(self, value):
        if isinstance(value, float):
            raise TypeError("floats are not exact; pass a Fraction, int or string")
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def pow(self, a, k):
        if k < 0 and not a:
            raise DivisionByZero("negative power of zero")
        return a**k

    def format_raw(self, a) -> str:
        return str(a)

    _rx = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

    def parse_raw(self, text):
        m = self._rx.match(text)
        if not m:
            raise InputError(f"not a rational literal: {text!r}")
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den or 1))

    def spec(self):
        return "q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (RationalField, ())


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


class PrimeField(Field):
    """The prime field F_p; elements are canonical residues in ``[0, p)``."""

    zero = 0
    one = 1

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def normalize(self, value):
        if isinstance(value, Fraction):
            return self.mul(value.numerator % self.p, self.inv(value.denominator % self.p))
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot convert {value!r} into F_{self.p}")

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        s = a - b
        return s + self.p if s < 0 else s

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return (self.p - a) if a else 0

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, k):
        if k < 0:
            return pow(self.inv(a), -k, self.p)
        return pow(a, k, self.p)

    def format_raw(self, a) -> str:
        return str(a)

    def parse_raw(self, text):
        text = text.strip()
        m = re.fullmatch(r"([+-]?\d+)\s*mod\s*(\d+)", text)
        if m:
            if int(m.group(2)) != self.p:
                raise FieldMismatch(f"{text!r} is not an element of F_{self.p}")
            return int(m.group(1)) % self.p
        return self.normalize(QQ.parse_raw(text))

    def spec(self):
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Build a field from ``"q"`` or ``"fp:<p>"``."""
    spec = spec.strip().lower()
    if spec in ("q", "qq", "rationals"):
        return QQ
    if spec.startswith("fp:"):
        try:
            return PrimeField(int(spec[3:]))
        except ValueError as exc:
            raise InputError(f"bad prime field spec {spec!r}: {exc}") from None
    raise InputError(f"unknown field spec {spec!r} (expected 'q' or 'fp:<p>')")


class Scalar:
    """An immutable element of a base field."""

    __slots__ = ("value", "field")

    def __init__(self, value, field: Field = QQ):
        object.__setattr__(self, "value", field.normalize(value))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.normalize(other)
        return None

    def _new(self, raw):
        s = object.__new__(Scalar)
        object.__setattr__(s, "value", raw)
        object.__setattr__(s, "field", self.field)
        return s

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._new(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._new(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._new(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._new(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._new(self.field.mul(self.value, self.field.inv(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._new(self.field.mul(b, self.field.inv(self.value)))

    def __neg__(self):
        return self._new(self.field.neg(self.value))

    def __pow__(self, k: int):
        return self._new(self.field.pow(self.value, k))

    def inv(self) -> "Scalar":
        return self._new(self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == self.field.zero

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.normalize(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field))

    def __str__(self):
        if isinstance(self.field, PrimeField):
            return f"{self.value} mod {self.field.p}"
        return str(self.value)

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def parse_scalar(text: str, field: Field | None = None) -> Scalar:
    """Parse the textual form ``"a/b"``, ``"a"`` or ``"k mod p"``.

    Without an explicit field, ``"k mod p"`` selects F_p and anything else
    is read as a rational.
    """
    if field is None:
        m = re.fullmatch(r"\s*[+-]?\d+\s*mod\s*(\d+)\s*", text)
        field = PrimeField(int(m.group(1))) if m else QQ
    return field.parse(text)


# Functional forms of the scalar operations.


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def inv(a: Scalar) -> Scalar:
    return a.inv()
