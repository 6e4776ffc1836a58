"""Expression parser shared by elements of R and of A.

Grammar (whitespace insensitive)::

    expr   := sign? term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := scalar | ident | '(' expr ')'
    scalar := nat ('/' nat)?

Products are evaluated left to right with the target structure's own
multiplication, so unordered variable products come out in PBW normal form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

from ..errors import ExprSyntaxError, UnknownIdentifier

_TOKEN = re.compile(r"\s*(?:(\d+(?:\s*/\s*\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass(frozen=True)
class Num:
    text: str
    pos: int


@dataclass(frozen=True)
class Name:
    ident: str
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # (sign, node) pairs, sign in {+1, -1}


Node = Union[Num, Name, Pow, Prod, Sum]


def tokenize(src: str):
    pos = 0
    tokens = []
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            break
        num, ident, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", num.replace(" ", ""), start))
        elif ident is not None:
            tokens.append(("ident", ident, start))
        else:
            if sym not in "+-*^()":
                raise ExprSyntaxError(f"unexpected character {sym!r}", start, src)
            tokens.append((sym, sym, start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprSyntaxError(f"expected {kind!r}, found {what}", tok[2], self.src)
        self.i += 1
        return tok

    def parse(self) -> Node:
        if self.peek()[0] == "end":
            raise ExprSyntaxError("empty expression", 0, self.src)
        node = self.expr()
        self.take("end")
        return node

    def expr(self) -> Node:
        terms = []
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        terms.append((sign, self.term()))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Prod(tuple(factors))

    def factor(self) -> Node:
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            if "/" in tok[1]:
                raise ExprSyntaxError("exponent must be a natural number", tok[2], self.src)
            node = Pow(node, int(tok[1]))
        return node

    def atom(self) -> Node:
        kind, text, pos = self.peek()
        if kind == "num":
            self.take()
            return Num(text, pos)
        if kind == "ident":
            self.take()
            return Name(text, pos)
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        what = "end of input" if kind == "end" else repr(text)
        raise ExprSyntaxError(f"unexpected {what}", pos, self.src)


def parse_ast(src: str) -> Node:
    return _Parser(src).parse()


def evaluate(node: Node, literal: Callable, lookup: Callable, zero):
    """Fold an AST using the target's operators.

    ``literal(text)`` builds a scalar, ``lookup(name)`` resolves identifiers.
    """
    if isinstance(node, Num):
        return literal(node.text)
    if isinstance(node, Name):
        return lookup(node.ident)
    if isinstance(node, Pow):
        base = evaluate(node.base, literal, lookup, zero)
        result = literal("1")
        for _ in range(node.exp):
            result = result * base
        return result
    if isinstance(node, Prod):
        result = evaluate(node.factors[0], literal, lookup, zero)
        for f in node.factors[1:]:
            result = result * evaluate(f, literal, lookup, zero)
        return result
    result = zero
    for sign, t in node.terms:
        v = evaluate(t, literal, lookup, zero)
        result = result + v if sign > 0 else result - v
    return result


def parse_poly(src: str, ring):
    """Parse ``src`` as an element of the coefficient ring."""
    node = parse_ast(src)
    F = ring.field

    def lookup(name):
        if name not in ring.names:
            raise UnknownIdentifier(f"unknown generator {name!r}")
        return ring.gen(name)

    return evaluate(node, lambda t: ring.const(F.parse(t)), lookup, ring.zero())


def parse_scalar_expr(src: str, field):
    """Parse a constant expression such as ``-2/3`` or ``(1/2)^3``."""
    node = parse_ast(src)

    def lookup(name):
        raise UnknownIdentifier(f"identifier {name!r} in a scalar expression")

    return evaluate(node, field.parse, lookup, field(0))


def parse_expr(src: str, algebra):
    """Parse ``src`` as an element of the PBW algebra ``algebra``."""
    algebra.require()
    node = parse_ast(src)
    F = algebra.field
    known = set(algebra.variables) | set(algebra.ring.names)

    def lookup(name):
        if name not in known:
            raise UnknownIdentifier(f"unknown identifier {name!r}")
        return algebra.gen(name)

    return evaluate(node, lambda t: algebra.scalar(F.parse(t)), lookup, algebra.zero())
