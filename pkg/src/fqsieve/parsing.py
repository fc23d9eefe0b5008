"""Text grammar for polynomials over F_q.

Terms are ``c``, ``t``, ``t^k``, ``c*t^k`` joined by ``+`` (a minus sign is
accepted as well); coefficients are integers reduced mod p, or expressions
in ``u`` for extension fields, parenthesized when they multiply a power,
e.g. ``(u+1)*t^2 + u``.  Bivariate input adds the variable ``x``.
Whitespace is insignificant.  Canonical output (the ``str`` of ``Poly`` and
``BiPoly``) uses descending powers, omits zero terms and unit coefficients.
"""

from __future__ import annotations

from .bivariate import BiPoly
from .errors import ParseError
from .finitefield import FiniteField
from .polyring import Poly

_OPS = set("+-*^()")


def _tokenize(text: str):
    """Yields (kind, value, position); kind in {'int', 'name', 'op'}."""
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            name = text[i:j]
            if name in ("t", "x", "u"):
                out.append(("name", name, i))
                i = j
                continue
            raise ParseError(f"unknown variable {name!r}", i)
        if ch in _OPS:
            out.append(("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return out


class _Parser:
    """Recursive descent over +, -, *, ^ with integer-literal exponents."""

    def __init__(self, tokens, text_len):
        self.tokens = tokens
        self.pos = 0
        self.text_len = text_len

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.text_len)
        self.pos += 1
        return tok

    def expr(self):
        negate_first = False
        tok = self.peek()
        if tok is not None and tok[:2] == ("op", "-"):
            self.take()
            negate_first = True
        node = self.term()
        if negate_first:
            node = ("neg", node)
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                return node
            self.take()
            rhs = self.term()
            node = ("add", node, ("neg", rhs) if tok[1] == "-" else rhs)

    def term(self):
        node = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok[:2] != ("op", "*"):
                return node
            self.take()
            node = ("mul", node, self.factor())

    def factor(self):
        node = self.atom()
        tok = self.peek()
        if tok is not None and tok[:2] == ("op", "^"):
            self.take()
            expt = self.take()
            if expt[0] != "int":
                raise ParseError("exponent must be an integer literal", expt[2])
            node = ("pow", node, expt[1])
        return node

    def atom(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "int":
            return ("int", value)
        if kind == "name":
            return ("var", value, pos)
        if kind == "op" and value == "(":
            node = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise ParseError("expected ')'", close[2])
            return node
        raise ParseError(f"unexpected token {value!r}", pos)


def _parse_ast(text: str):
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input", 0)
    parser = _Parser(tokens, len(text))
    node = parser.expr()
    leftover = parser.peek()
    if leftover is not None:
        raise ParseError(f"unexpected token {leftover[1]!r}", leftover[2])
    return node


def _eval_bipoly(node, field: FiniteField) -> BiPoly:
    kind = node[0]
    if kind == "int":
        return BiPoly.constant(field, node[1])
    if kind == "var":
        name, pos = node[1], node[2]
        if name == "t":
            return BiPoly.variable_t(field)
        if name == "x":
            return BiPoly.variable_x(field)
        if field.m == 1:
            raise ParseError("u is not defined over a prime field", pos)
        return BiPoly.constant(field, Poly.constant(field, field.generator_u))
    if kind == "add":
        return _eval_bipoly(node[1], field) + _eval_bipoly(node[2], field)
    if kind == "mul":
        return _eval_bipoly(node[1], field) * _eval_bipoly(node[2], field)
    if kind == "neg":
        return -_eval_bipoly(node[1], field)
    if kind == "pow":
        return _eval_bipoly(node[1], field) ** node[2]
    raise AssertionError(f"unhandled node {kind}")


def parse_bipoly(text: str, field: FiniteField) -> BiPoly:
    """Parse an expression in t and x (and u over extension fields)."""
    return _eval_bipoly(_parse_ast(text), field)


def parse_poly(text: str, field: FiniteField) -> Poly:
    """Parse an expression in t only."""
    for kind, value, pos in _tokenize(text):
        if kind == "name" and value == "x":
            raise ParseError("x is not allowed here", pos)
    b = parse_bipoly(text, field)
    if b.is_zero():
        return Poly.zero(field)
    return b.xcoeffs[0]


def parse_prime_field_poly(text: str, p: int, var: str = "u") -> list[int]:
    """Parse an expression in a single variable over F_p into a coefficient
    list (low degree first).  Used for extension-field moduli, before any
    field descriptor exists."""

    def ev(node):
        kind = node[0]
        if kind == "int":
            return [node[1] % p]
        if kind == "var":
            if node[1] != var:
                raise ParseError(
                    f"only {var!r} is allowed in a modulus", node[2]
                )
            return [0, 1]
        if kind == "add":
            a, b = ev(node[1]), ev(node[2])
            n = max(len(a), len(b))
            out = [
                ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                for i in range(n)
            ]
            while out and out[-1] == 0:
                out.pop()
            return out
        if kind == "neg":
            return [(-c) % p for c in ev(node[1])]
        if kind == "mul":
            a, b = ev(node[1]), ev(node[2])
            if not a or not b:
                return []
            out = [0] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                for j, cb in enumerate(b):
                    out[i + j] = (out[i + j] + ca * cb) % p
            while out and out[-1] == 0:
                out.pop()
            return out
        if kind == "pow":
            acc = [1]
            base = ev(node[1])
            for _ in range(node[2]):
                nxt = [0] * (len(acc) + len(base) - 1) if acc and base else []
                for i, ca in enumerate(acc):
                    for j, cb in enumerate(base):
                        nxt[i + j] = (nxt[i + j] + ca * cb) % p
                while nxt and nxt[-1] == 0:
                    nxt.pop()
                acc = nxt
            return acc
        raise AssertionError(f"unhandled node {kind}")

    return ev(_parse_ast(text))
