"""Arithmetic and set expressions for the command line.

Grammar, with the usual precedence (^ binds tightest and associates right,
then *, then left-associative + and -):

    expression := term (('+' | '-') term)*
    term       := factor ('*' factor)*
    factor     := primary ('^' factor)?
    primary    := literal | NAME '(' expression (',' expression)* ')'
                | '(' expression ')'
    literal    := decimal | bij2 | hfs      (the latter two by bracket shape)

Function names form a closed set; subset and in produce booleans, which are
printable but not usable as operands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import Limits, Numeral, convert
from .errors import DomainError, ParseError
from . import textio

FUNCTION_ARITY = {
    "s": 1,
    "p": 1,
    "double": 1,
    "half": 1,
    "exp2": 1,
    "powset": 1,
    "augment": 1,
    "ordinal": 1,
    "union": 2,
    "inter": 2,
    "diff": 2,
    "subset": 2,
    "in": 2,
}


@dataclass(frozen=True)
class Literal:
    fmt: str
    text: str
    position: int


@dataclass(frozen=True)
class BinOp:
    op: str
    lhs: "Node"
    rhs: "Node"
    position: int


@dataclass(frozen=True)
class Call:
    name: str
    args: "tuple[Node, ...]"
    position: int


Node = Union[Literal, BinOp, Call]


@dataclass(frozen=True)
class _Token:
    kind: str  # op, lparen, rparen, comma, name, literal-<fmt>, end
    text: str
    position: int


def _tokenize(source: str) -> "list[_Token]":
    tokens = []
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^":
            tokens.append(_Token("op", ch, i))
            i += 1
        elif ch == "(":
            tokens.append(_Token("lparen", ch, i))
            i += 1
        elif ch == ")":
            tokens.append(_Token("rparen", ch, i))
            i += 1
        elif ch == ",":
            tokens.append(_Token("comma", ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(_Token("literal-decimal", source[i:j], i))
            i = j
        elif ch == "[":
            j = source.find("]", i)
            if j < 0:
                raise ParseError("unterminated '['", i)
            tokens.append(_Token("literal-bij2", source[i : j + 1], i))
            i = j + 1
        elif ch == "{":
            depth = 0
            j = i
            while j < n:
                if source[j] == "{":
                    depth += 1
                elif source[j] == "}":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            if depth:
                raise ParseError("unterminated '{'", i)
            tokens.append(_Token("literal-hfs", source[i : j + 1], i))
            i = j + 1
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(_Token("name", source[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: "list[_Token]"):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.position)
        return self.advance()

    def expression(self) -> Node:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance()
            node = BinOp(op.text, node, self.term(), op.position)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek().kind == "op" and self.peek().text == "*":
            op = self.advance()
            node = BinOp(op.text, node, self.factor(), op.position)
        return node

    def factor(self) -> Node:
        node = self.primary()
        if self.peek().kind == "op" and self.peek().text == "^":
            op = self.advance()
            node = BinOp(op.text, node, self.factor(), op.position)
        return node

    def primary(self) -> Node:
        tok = self.peek()
        if tok.kind.startswith("literal-"):
            self.advance()
            return Literal(tok.kind.removeprefix("literal-"), tok.text, tok.position)
        if tok.kind == "lparen":
            self.advance()
            node = self.expression()
            self.expect("rparen", "')'")
            return node
        if tok.kind == "name":
            self.advance()
            arity = FUNCTION_ARITY.get(tok.text)
            if arity is None:
                raise ParseError(f"unknown function {tok.text!r}", tok.position)
            self.expect("lparen", "'(' after function name")
            args = [self.expression()]
            while self.peek().kind == "comma":
                self.advance()
                args.append(self.expression())
            self.expect("rparen", "')'")
            if len(args) != arity:
                raise ParseError(
                    f"{tok.text} takes {arity} argument(s), got {len(args)}",
                    tok.position,
                )
            return Call(tok.text, tuple(args), tok.position)
        raise ParseError("expected a value", tok.position)


def parse_expression(source: str) -> Node:
    parser = _Parser(_tokenize(source))
    node = parser.expression()
    parser.expect("end", "end of expression")
    return node


Result = Union[Numeral, bool]


def evaluate(node: Node, target: "type[Numeral]", limits: Limits) -> Result:
    """Evaluate every node under the chosen representation."""
    if isinstance(node, Literal):
        if node.fmt == "hfs":
            return convert(textio.parse_hfs(node.text, limits), target)
        return textio.parse_value(node.text, node.fmt, target, limits)
    if isinstance(node, BinOp):
        lhs = _numeral(evaluate(node.lhs, target, limits), node)
        rhs = _numeral(evaluate(node.rhs, target, limits), node)
        if node.op == "+":
            return lhs.add(rhs)
        if node.op == "-":
            return lhs.subtract(rhs)
        if node.op == "*":
            return lhs.multiply(rhs)
        return lhs.power(rhs, limits)
    args = [_numeral(evaluate(a, target, limits), node) for a in node.args]
    if node.name == "s":
        return args[0].succ()
    if node.name == "p":
        return args[0].pred()
    if node.name == "double":
        return args[0].double()
    if node.name == "half":
        return args[0].half()
    if node.name == "exp2":
        return args[0].exp2(limits)
    if node.name == "powset":
        return args[0].powerset(limits)
    if node.name == "augment":
        return args[0].augment_set(limits)
    if node.name == "ordinal":
        return args[0].nth_ordinal(limits)
    if node.name == "union":
        return args[0].set_union(args[1], limits)
    if node.name == "inter":
        return args[0].set_intersection(args[1], limits)
    if node.name == "diff":
        return args[0].set_difference(args[1], limits)
    if node.name == "subset":
        return args[0].set_subset(args[1], limits)
    return args[0].in_set(args[1], limits)


def _numeral(value: Result, node: Node) -> Numeral:
    if isinstance(value, bool):
        raise DomainError("boolean results cannot be used as operands")
    return value
