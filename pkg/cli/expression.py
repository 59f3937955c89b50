"""
A small language for diagram expressions.

    expr   := chain { "+" chain }
    chain  := term { ";" term }          f ; g  is g o f (bottom first)
    term   := factor { "@" factor }      tensor product, binds tighter than ";"
    factor := scalar "*" factor | atom
    atom   := "x" | "cap" | "cup" | "capL" | "capR" | "cupL" | "cupR"
            | "x(" word ")" | "id(" word ")" | "tok(" element ")" | "dtok(" element ")"
            | "(" expr ")"
    scalar := p/q | p/q+r/s i | r/s i | "[" any scalar "]"

Words are a nonnegative integer for unoriented expressions and a string over u, d
for oriented ones. Elements are signed sums such as `1/2*i - eps`.
"""
import logging
import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from helpers.errors import ExpressionSyntaxError, TypeMismatchError, UnknownNameError
from oriented.category import OrientedCategory
from oriented.diagram import DOWN, UP, OrMorphism, validate_word
from superalg.scalars import ONE, Scalar, format_scalar, parse_scalar
from unoriented.category import UnorientedCategory
from unoriented.diagram import Layer, UnDiagram, UnMorphism

logger = logging.getLogger(__name__)

ORIENTED_ONLY = {"capL", "capR", "cupL", "cupR", "dtok"}
NAMES = {"x", "cap", "cup", "capL", "capR", "cupL", "cupR"}
CALLS = {"x", "id", "tok", "dtok"}

_SCALAR = re.compile(r"-?(?:\d+(?:/\d+)?(?:[+-](?:\d+(?:/\d+)?)?i)?|(?:\d+(?:/\d+)?)?i)(?![A-Za-z_(])")
_NAME = re.compile(r"[A-Za-z_]+")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int
    argument: Optional[str] = None


@dataclass
class Node:
    """
    A node of a DiagramExpr.

    kind is "gen" (name, argument), "scaled" (value, children[0]), "compose"
    (children bottom first), "tensor" (children left to right) or "sum".
    """

    kind: str
    position: int
    name: str = ""
    argument: Optional[str] = None
    value: Optional[Scalar] = None
    children: List["Node"] = field(default_factory=list)

    def generators(self):
        if self.kind == "gen":
            yield self
        for child in self.children:
            yield from child.generators()


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        char = text[position]
        if char.isspace():
            position += 1
            continue
        if char == "[":
            end = text.find("]", position)
            if end < 0:
                raise ExpressionSyntaxError("unclosed '['", position)
            tokens.append(Token("scalar", text[position + 1:end], position))
            position = end + 1
            continue
        match = _SCALAR.match(text, position)
        if match and (char.isdigit() or char in "-i"):
            tokens.append(Token("scalar", match.group(0), position))
            position = match.end()
            continue
        if char in ";@()+*":
            tokens.append(Token(char, char, position))
            position += 1
            continue
        match = _NAME.match(text, position)
        if match:
            name = match.group(0)
            end = match.end()
            if end < len(text) and text[end] == "(" and name in CALLS:
                depth, close = 0, end
                while close < len(text):
                    if text[close] == "(":
                        depth += 1
                    elif text[close] == ")":
                        depth -= 1
                        if depth == 0:
                            break
                    close += 1
                if depth:
                    raise ExpressionSyntaxError(f"unclosed '(' after {name}", end)
                tokens.append(Token("call", name, position, text[end + 1:close].strip()))
                position = close + 1
                continue
            if name not in NAMES:
                raise ExpressionSyntaxError(f"unknown generator {name!r}", position)
            tokens.append(Token("name", name, position))
            position = end
            continue
        raise ExpressionSyntaxError(f"unexpected character {char!r}", position)
    return tokens


class Parser:
    """Recursive descent over the token list; `parse` returns the root Node."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self, kind: Optional[str] = None) -> Token:
        token = self.peek()
        if token is None:
            raise ExpressionSyntaxError("unexpected end of expression", len(self.text))
        if kind is not None and token.kind != kind:
            raise ExpressionSyntaxError(f"expected {kind!r}, found {token.text!r}", token.position)
        self.index += 1
        return token

    def parse(self) -> Node:
        if not self.tokens:
            raise ExpressionSyntaxError("empty expression", 0)
        node = self.expr()
        token = self.peek()
        if token is not None:
            raise ExpressionSyntaxError(f"unexpected {token.text!r}", token.position)
        return node

    def _sequence(self, kind: str, separator: str, item) -> Node:
        first = item()
        parts = [first]
        while self.peek() is not None and self.peek().kind == separator:
            self.take(separator)
            parts.append(item())
        return parts[0] if len(parts) == 1 else Node(kind, first.position, children=parts)

    def expr(self) -> Node:
        return self._sequence("sum", "+", self.chain)

    def chain(self) -> Node:
        return self._sequence("compose", ";", self.term)

    def term(self) -> Node:
        return self._sequence("tensor", "@", self.factor)

    def factor(self) -> Node:
        token = self.peek()
        if token is not None and token.kind == "scalar":
            self.take()
            self.take("*")
            return Node("scaled", token.position, value=parse_scalar(token.text, token.position), children=[self.factor()])
        return self.atom()

    def atom(self) -> Node:
        token = self.take()
        if token.kind == "(":
            node = self.expr()
            self.take(")")
            return node
        if token.kind in ("name", "call"):
            return Node("gen", token.position, name=token.text, argument=token.argument)
        raise ExpressionSyntaxError(f"unexpected {token.text!r}", token.position)


def parse(text: str) -> Node:
    """
    Parses an expression.

    Raises:
        ExpressionSyntaxError: With the position of the offending token.
    """
    return Parser(text).parse()


def is_oriented(node: Node) -> bool:
    for gen in node.generators():
        if gen.name in ORIENTED_ONLY:
            return True
        if gen.name in ("id", "x") and gen.argument and not gen.argument.isdigit():
            return True
    return False


class Elaborator:
    """
    Turns a parsed expression into a normal-form morphism of a category.

    Args:
        category (Union[UnorientedCategory, OrientedCategory]): Where the expression lives.
    """

    def __init__(self, category: Union[UnorientedCategory, OrientedCategory]):
        self.category = category
        self.oriented = isinstance(category, OrientedCategory)

    def _endpoints(self, f) -> Tuple:
        return (f.source, f.target) if self.oriented else (f.r, f.s)

    def generator(self, node: Node):
        category, algebra = self.category, self.category.algebra
        name, argument = node.name, node.argument
        if name == "tok" or name == "dtok":
            a = algebra.parse(argument or "", node.position)
            if self.oriented:
                return category.token(a, DOWN if name == "dtok" else UP)
            if name == "dtok":
                raise TypeMismatchError(f"down tokens need an oriented expression at position {node.position}")
            return category.token(a)
        if name == "id":
            text = argument or ""
            if self.oriented:
                return category.identity(validate_word(text))
            if not text.isdigit():
                raise ExpressionSyntaxError(f"id expects a number of strands, got {text!r}", node.position)
            return category.identity(int(text))
        if self.oriented:
            if name == "x":
                return category.crossing(validate_word(argument) if argument else UP + UP)
            if name in ("cap", "cup"):
                raise TypeMismatchError(f"oriented expressions use {name}L or {name}R at position {node.position}")
            return category.generator(name)
        if name in ORIENTED_ONLY:
            raise TypeMismatchError(f"{name} needs an oriented expression at position {node.position}")
        try:
            return category.generator({"x": "cross"}.get(name, name))
        except UnknownNameError:
            raise ExpressionSyntaxError(f"unknown generator {name!r}", node.position) from None

    def evaluate(self, node: Node):
        if node.kind == "gen":
            return self.generator(node)
        if node.kind == "scaled":
            return self.evaluate(node.children[0]).scale(node.value)
        parts = [self.evaluate(child) for child in node.children]
        result = parts[0]
        if node.kind == "tensor":
            for part in parts[1:]:
                result = self.category.tensor(result, part)
        elif node.kind == "compose":
            for child, part in zip(node.children[1:], parts[1:]):
                if self._endpoints(result)[1] != self._endpoints(part)[0]:
                    raise TypeMismatchError(
                        f"cannot stack {self._endpoints(part)} on top of {self._endpoints(result)} at position {child.position}"
                    )
                result = self.category.compose(part, result)
        else:
            for child, part in zip(node.children[1:], parts[1:]):
                if self._endpoints(result) != self._endpoints(part):
                    raise TypeMismatchError(f"cannot add {self._endpoints(part)} to {self._endpoints(result)} at position {child.position}")
                result = result + part
        return result


def elaborate(text: str, category: Union[UnorientedCategory, OrientedCategory]) -> Union[UnMorphism, OrMorphism]:
    node = parse(text)
    logger.debug(f"Parsed {text!r}")
    return Elaborator(category).evaluate(node)


def _strands(count: int) -> List[str]:
    return [f"id({count})"] if count else []


def _unit_index(algebra) -> Optional[int]:
    coeffs = algebra.one().coeffs
    if len(coeffs) == 1 and ONE in coeffs.values():
        return next(iter(coeffs))
    return None


def _layer_text(layer: Layer, algebra) -> Optional[str]:
    if layer.kind == "tokens":
        unit = _unit_index(algebra)
        tokens = {position: index for position, index in layer.tokens if index != unit}
        if not tokens:
            return None
        parts: List[str] = []
        run = 0
        for position in range(layer.width):
            if position in tokens:
                parts += _strands(run)
                run = 0
                parts.append(f"tok({algebra.names[tokens[position]]})")
            else:
                run += 1
        parts += _strands(run)
        return " @ ".join(parts)
    consumed = 0 if layer.kind == "cup" else 2
    name = "x" if layer.kind == "cross" else layer.kind
    parts = _strands(layer.left) + [name] + _strands(layer.width - layer.left - consumed)
    return " @ ".join(parts)


def diagram_text(diagram: UnDiagram, algebra) -> str:
    """A composite of layers equal to the basis diagram up to sign."""
    layers = [text for text in (_layer_text(layer, algebra) for layer in diagram.layers()) if text]
    if not layers:
        return f"id({diagram.r})"
    return " ; ".join(f"({text})" for text in layers)


def print_morphism(f: UnMorphism, category: UnorientedCategory) -> str:
    """
    Writes a normal form so that elaborating the text gives f back.

    Each basis diagram is printed as its layer factorization, with the coefficient
    corrected by the sign that factorization produces.
    """
    if not f:
        return f"0 * (id({f.r}))" if f.r == f.s else "0"
    pieces = []
    for diagram, value in f.sorted_terms():
        text = diagram_text(diagram, category.algebra)
        produced = elaborate(text, category).terms.get(diagram)
        if not produced:
            raise TypeMismatchError(f"layer factorization does not reproduce {diagram.to_dict(category.algebra)}")
        pieces.append(f"[{format_scalar(value / produced)}] * ({text})")
    return " + ".join(pieces)
