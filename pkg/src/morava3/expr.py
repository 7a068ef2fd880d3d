"""Recursive-descent parser and evaluator for ring-element expressions.

Grammar (whitespace insensitive, exponents are nonnegative integer
literals):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ('-')? atom ('^' nat)?
    atom   := nat | 'h' | 'c' | 'i' | '(' expr ')'

There is no division: inversion is a command-line flag, which keeps the
grammar total.
"""

from dataclasses import dataclass

from .errors import ParseError
from .galois import PrecisionProfile
from .series import DeformationElement, make_c


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


_SYMBOLS = ("h", "c", "i")
_ATOM_EXPECTED = ("integer", "'h'", "'c'", "'i'", "'('")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(("nat", int(text[start:pos]), start))
            continue
        if ch in _SYMBOLS:
            tokens.append(("sym", ch, pos))
            pos += 1
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        raise ParseError(pos, _ATOM_EXPECTED + ("operator",), ch)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        kind, value, offset = self.peek()
        found = "end of input" if kind == "end" else str(value)
        raise ParseError(offset, expected, found)

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail(("'+'", "'-'", "'*'", "end of input"))
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        negate = False
        if self.peek()[0] == "-":
            self.advance()
            negate = True
        node = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            if self.peek()[0] != "nat":
                self.fail(("integer",))
            node = Pow(node, self.advance()[1])
        return Neg(node) if negate else node

    def atom(self):
        kind, value, _ = self.peek()
        if kind == "nat":
            self.advance()
            return Lit(value)
        if kind == "sym":
            self.advance()
            return Sym(value)
        if kind == "(":
            self.advance()
            node = self.expr()
            if self.peek()[0] != ")":
                self.fail(("')'",))
            self.advance()
            return node
        self.fail(_ATOM_EXPECTED)


def parse_element(text: str):
    """Parse an expression over the symbols h, c, i; raises ParseError."""
    return _Parser(text).parse()


def eval_expr(node, profile: PrecisionProfile) -> DeformationElement:
    """Bottom-up evaluation at the given working precision."""
    cache = {}

    def value_of(sym):
        if sym not in cache:
            if sym == "h":
                cache[sym] = DeformationElement.h(profile)
            elif sym == "c":
                cache[sym] = make_c(profile)
            else:
                cache[sym] = DeformationElement.i_unit(profile)
        return cache[sym]

    def walk(n):
        if isinstance(n, Lit):
            return DeformationElement.constant(n.value, profile)
        if isinstance(n, Sym):
            return value_of(n.name)
        if isinstance(n, Neg):
            return -walk(n.operand)
        if isinstance(n, Add):
            return walk(n.left) + walk(n.right)
        if isinstance(n, Sub):
            return walk(n.left) - walk(n.right)
        if isinstance(n, Mul):
            return walk(n.left) * walk(n.right)
        if isinstance(n, Pow):
            return walk(n.base) ** n.exponent
        raise TypeError(f"unknown node {n!r}")

    return walk(node)
