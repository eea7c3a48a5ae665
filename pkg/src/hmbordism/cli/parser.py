"""Tokenizer, recursive-descent parser, static type checker and printer for
the bordism expression language.

Grammar::

    expr  := term (('+' | '-' | '*') term)*        '*' binds tighter
    term  := rational '·' term
           | name '(' [arg (',' arg)*] ')'
           | 'H' '(' expr ',' 'i' '=' int ')'
           | 'CP' int | 'pt'
           | rational | '(' expr ')' | '(' expr ',' ... ')' | '[' ... ']'
           | name
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..exact import format_rational


class ExpressionError(Exception):
    exit_code = 1

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message, self.line, self.col = message, line, col
        super().__init__(f"{line}:{col}: {message}" if line else message)


class ExprSyntaxError(ExpressionError):
    def __init__(self, message, line=0, col=0, expected=()):
        self.expected = tuple(sorted(set(expected)))
        if self.expected:
            message = f"{message}; expected one of: {', '.join(self.expected)}"
        super().__init__(message, line, col)


class ExprTypeError(ExpressionError):
    pass


# --- tokens -------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*·(),=\[\]])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            if "\n" in chunk:
                line += chunk.count("\n")
                line_start = pos + chunk.rfind("\n") + 1
        else:
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# --- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    pos: tuple[int, int] = field(default=(0, 0), compare=False, kw_only=True)


@dataclass(frozen=True)
class Number(Node):
    value: Fraction


@dataclass(frozen=True)
class Generator(Node):
    k: int


@dataclass(frozen=True)
class Symbol(Node):
    name: str


@dataclass(frozen=True)
class Lift(Node):
    body: Node
    index: int


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Scale(Node):
    coefficient: Fraction
    body: Node


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: tuple


@dataclass(frozen=True)
class ListExpr(Node):
    items: tuple


@dataclass(frozen=True)
class TupleExpr(Node):
    items: tuple


_GENERATOR_RE = re.compile(r"CP(\d+)")


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, expected):
        t = self.tok
        what = "end of input" if t.kind == "eof" else f"{t.text!r}"
        raise ExprSyntaxError(f"unexpected {what}", t.line, t.col, expected)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("op", "name"):
            self.fail([text])
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "eof":
            self.fail(["+", "-", "*", "end of input"])
        return node

    def expr(self) -> Node:
        node = self.product()
        while self.tok.kind == "op" and self.tok.text in "+-":
            t = self.advance()
            node = BinOp(t.text, node, self.product(), pos=(t.line, t.col))
        return node

    def product(self) -> Node:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text == "*":
            t = self.advance()
            node = BinOp("*", node, self.term(), pos=(t.line, t.col))
        return node

    def integer(self) -> int:
        value = self.rational()
        if value.denominator != 1:
            t = self.tokens[self.i - 1]
            raise ExprSyntaxError("integer expected", t.line, t.col)
        return int(value)

    def rational(self) -> Fraction:
        sign = 1
        if self.tok.text == "-" and self.tok.kind == "op":
            self.advance()
            sign = -1
        if self.tok.kind != "number":
            self.fail(["number"])
        return sign * Fraction(self.advance().text)

    def term(self) -> Node:
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "number" or (t.kind == "op" and t.text == "-"):
            value = self.rational()
            if self.tok.text == "·":
                self.advance()
                return Scale(value, self.term(), pos=pos)
            return Number(value, pos=pos)
        if t.kind == "name":
            self.advance()
            if t.text == "H" and self.tok.text == "(":
                self.advance()
                body = self.expr()
                self.expect(",")
                self.expect("i")
                self.expect("=")
                index = self.integer()
                self.expect(")")
                return Lift(body, index, pos=pos)
            if self.tok.text == "(":
                self.advance()
                args = []
                if self.tok.text != ")":
                    args.append(self.expr())
                    while self.tok.text == ",":
                        self.advance()
                        args.append(self.expr())
                self.expect(")")
                return Call(t.text, tuple(args), pos=pos)
            m = _GENERATOR_RE.fullmatch(t.text)
            if m:
                return Generator(int(m.group(1)), pos=pos)
            if t.text == "pt":
                return Generator(0, pos=pos)
            return Symbol(t.text, pos=pos)
        if t.kind == "op" and t.text == "(":
            self.advance()
            first = self.expr()
            if self.tok.text == ",":
                items = [first]
                while self.tok.text == ",":
                    self.advance()
                    items.append(self.expr())
                self.expect(")")
                return TupleExpr(tuple(items), pos=pos)
            self.expect(")")
            return first
        if t.kind == "op" and t.text == "[":
            self.advance()
            items = []
            if self.tok.text != "]":
                items.append(self.expr())
                while self.tok.text == ",":
                    self.advance()
                    items.append(self.expr())
            self.expect("]")
            return ListExpr(tuple(items), pos=pos)
        self.fail(["number", "name", "CP<k>", "H(", "(", "["])


def to_source(node: Node) -> str:
    """Print ``node`` so that parsing the text gives back an equal AST."""
    if isinstance(node, Number):
        return format_rational(node.value)
    if isinstance(node, Generator):
        return f"CP{node.k}"
    if isinstance(node, Symbol):
        return node.name
    if isinstance(node, Lift):
        return f"H({to_source(node.body)}, i={node.index})"
    if isinstance(node, BinOp):
        return f"({to_source(node.left)} {node.op} {to_source(node.right)})"
    if isinstance(node, Scale):
        return f"{format_rational(node.coefficient)}·{to_source(node.body)}"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_source(a) for a in node.args)})"
    if isinstance(node, ListExpr):
        return f"[{', '.join(to_source(a) for a in node.items)}]"
    if isinstance(node, TupleExpr):
        return f"({', '.join(to_source(a) for a in node.items)})"
    raise TypeError(f"not an expression node: {node!r}")


# --- static typing ------------------------------------------------------------


@dataclass(frozen=True)
class Type:
    kind: str
    dim: Optional[int] = None

    def __str__(self):
        return self.kind if self.dim is None else f"{self.kind}[dim {self.dim}]"


RATIONAL = Type("rational")
CLASS_KINDS = ("top", "h")

# name -> (argument kinds, result kind); "class" accepts top or h classes
SIGNATURES = {
    "sig": (("class",), "rational"),
    "omega": (("class",), "omega"),
    "pnum": (("class",), "numbers"),
    "lnum": (("class",), "numbers"),
    "Lpoly": (("int",), "poly"),
    "Linv": (("int",), "poly"),
    "pclass": (("int",) * 5, "bigraded"),
    "canon": (("top", "int", "top", "int"), "top"),
    "psi": (("h",), "h"),
    "phi": (("h",), "h"),
    "naive": (("h", "h"), "h"),
    "star": (("int", "int"), "rational"),
    "itilde": (("pairs",), "obstruction"),
    "decide_transverse": (("int", "obstruction"), "decision"),
    "resolvable": (("int", "int"), "decision"),
    "lgroup": (("int", "symbol?"), "group"),
    "slh": (("int",), "group"),
    "check": (("int",), "check"),
}


def _err(node: Node, message: str):
    raise ExprTypeError(message, *node.pos)


def _is_int(node: Node) -> bool:
    return isinstance(node, Number) and node.value.denominator == 1


def infer(node: Node) -> Type:
    """Static type of ``node``; raises :class:`ExprTypeError` with location."""
    if isinstance(node, Number):
        return RATIONAL
    if isinstance(node, Generator):
        if node.k % 2:
            _err(node, f"CP{node.k}: only even-dimensional complex projective spaces are supported")
        return Type("top", 2 * node.k)
    if isinstance(node, Symbol):
        return Type("symbol")
    if isinstance(node, Lift):
        body = infer(node.body)
        if body.kind != "top":
            _err(node, f"H(...) lifts a topological class, got {body}")
        return Type("h", body.dim)
    if isinstance(node, Scale):
        body = infer(node.body)
        if body.kind not in CLASS_KINDS + ("rational",):
            _err(node, f"cannot scale {body}")
        return body
    if isinstance(node, BinOp):
        a, b = infer(node.left), infer(node.right)
        if a.kind == "rational" and b.kind == "rational":
            return RATIONAL
        if node.op == "*":
            if a.kind == "rational" and b.kind in CLASS_KINDS:
                return b
            if b.kind == "rational" and a.kind in CLASS_KINDS:
                return a
            if a.kind in CLASS_KINDS and b.kind in CLASS_KINDS:
                kind = "h" if "h" in (a.kind, b.kind) else "top"
                return Type(kind, a.dim + b.dim)
            _err(node, f"cannot multiply {a} by {b}")
        if a.kind in CLASS_KINDS and b.kind in CLASS_KINDS:
            if a.dim != b.dim:
                _err(node, f"cannot add classes of dimensions {a.dim} and {b.dim}")
            kind = "h" if "h" in (a.kind, b.kind) else "top"
            return Type(kind, a.dim)
        _err(node, f"cannot apply {node.op!r} to {a} and {b}")
    if isinstance(node, (ListExpr, TupleExpr)):
        for item in node.items:
            infer(item)
        return Type("list" if isinstance(node, ListExpr) else "tuple")
    if isinstance(node, Call):
        return _infer_call(node)
    _err(node, f"unknown node {node!r}")


def _infer_call(node: Call) -> Type:
    if node.name not in SIGNATURES:
        _err(node, f"unknown function {node.name!r}")
    kinds, result = SIGNATURES[node.name]
    required = [k for k in kinds if not k.endswith("?")]
    if not len(required) <= len(node.args) <= len(kinds):
        _err(node, f"{node.name} takes {len(kinds)} argument(s), got {len(node.args)}")
    for kind, arg in zip(kinds, node.args):
        kind = kind.rstrip("?")
        t = infer(arg)
        if kind == "int":
            if not _is_int(arg):
                _err(arg, f"{node.name}: integer literal expected")
        elif kind == "class":
            if t.kind not in CLASS_KINDS:
                _err(arg, f"{node.name}: class expected, got {t}")
        elif kind == "pairs":
            if not isinstance(arg, ListExpr) or not all(
                isinstance(p, TupleExpr) and len(p.items) == 2 and all(map(_is_int, p.items))
                for p in arg.items
            ):
                _err(arg, f"{node.name}: list of (degree, index) integer pairs expected")
        elif t.kind != kind:
            _err(arg, f"{node.name}: {kind} expected, got {t}")
    if node.name == "canon":
        return Type("top", infer(node.args[0]).dim + infer(node.args[2]).dim)
    if node.name in ("psi", "phi"):
        return infer(node.args[0])
    if node.name == "naive":
        return Type("h", infer(node.args[0]).dim + infer(node.args[1]).dim)
    return Type(result)


def parse_expression(text: str) -> Node:
    """Parse and type-check ``text``."""
    node = Parser(text).parse()
    infer(node)
    return node
