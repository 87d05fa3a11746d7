"""Element expressions such as ``d + z`` or ``z9 + 2``.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | "d" | "z" | "z" N | "(" expr ")"

``d`` is the tower's delta, ``z`` is zeta_p and ``zN`` is zeta_N for N | m.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .cyclo import CycloElement, NotInSubfield

__all__ = [
    "ExprSyntaxError",
    "UndefinedSymbol",
    "Num",
    "Sym",
    "Neg",
    "BinOp",
    "Pow",
    "parse_element",
    "to_text",
    "evaluate",
    "element_from_text",
]


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UndefinedSymbol(ValueError):
    pass


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str  # "d", "z" or "zN"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Sym, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|(d|z\d*)|([-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.start(m.lastindex) != pos:
            if text[pos].isalpha():
                word = re.match(r"[A-Za-z_]\w*", text[pos:]).group(0)
                raise UndefinedSymbol(f"undefined symbol {word!r} at offset {pos}")
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = "int" if m.group(1) else "sym" if m.group(2) else "op"
        out.append((kind, m.group(m.lastindex), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            raise ExprSyntaxError(f"expected {value!r}", pos)

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                self.take()
                sign = -1
            kind, val, pos = self.take()
            if kind != "int":
                raise ExprSyntaxError("expected an integer exponent", pos)
            return Pow(base, sign * int(val))
        return base

    def atom(self) -> Node:
        kind, val, pos = self.take()
        if kind == "int":
            return Num(int(val))
        if kind == "sym":
            return Sym(val)
        if (kind, val) == ("op", "("):
            node = self.expr()
            self.expect(")")
            return node
        what = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"unexpected {what}", pos)


def parse_element(text: str) -> Node:
    parser = _Parser(text)
    node = parser.expr()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected {val!r}", pos)
    return node


_LEVEL = {"+": 1, "-": 1, "*": 2}


def _level(node: Node) -> int:
    if isinstance(node, BinOp):
        return _LEVEL[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def to_text(node: Node) -> str:
    """Render with the fewest parentheses that parse back to the same tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Neg):
        inner = to_text(node.operand)
        return "-" + (inner if _level(node.operand) >= 3 else f"({inner})")
    if isinstance(node, Pow):
        inner = to_text(node.base)
        return (inner if _level(node.base) == 5 else f"({inner})") + f"^{node.exponent}"
    lvl = _LEVEL[node.op]
    left = to_text(node.left)
    right = to_text(node.right)
    if _level(node.left) < lvl:
        left = f"({left})"
    # left-associative: a right operand of equal level needs parentheses
    if _level(node.right) <= lvl:
        right = f"({right})"
    return f"{left} {node.op} {right}"


def evaluate(node: Node, tower) -> CycloElement:
    m = tower.m
    if isinstance(node, Num):
        return CycloElement.rational(m, node.value)
    if isinstance(node, Sym):
        if node.name == "d":
            return tower.delta
        if node.name == "z":
            return tower.zeta_p
        n = int(node.name[1:])
        if n < 1 or m % n:
            raise UndefinedSymbol(f"{node.name} is not defined in Q(zeta_{m})")
        return CycloElement.zeta(m, m // n)
    if isinstance(node, Neg):
        return -evaluate(node.operand, tower)
    if isinstance(node, Pow):
        return evaluate(node.base, tower) ** node.exponent
    a, b = evaluate(node.left, tower), evaluate(node.right, tower)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    return a * b


def element_from_text(text: str, tower, require_L: bool = True) -> CycloElement:
    x = evaluate(parse_element(text), tower)
    if require_L and not tower.contains("L", x):
        raise NotInSubfield(f"{text!r} does not lie in L")
    return x
