"""
Tangle parser module for skein4

This module provides a recursive-descent parser for the tangle expression
grammar, e.g. ``N(sum(rat(2 2),int(-1)))`` or ``close(braid3[1 -2 1 -2])``.
"""

import logging
import re
from typing import Callable, List, Optional, Tuple

from skein4.app.errors import Skein4Error, TangleSyntaxError
from skein4.app.services.tangles.braid import BraidWord
from skein4.app.services.tangles.expr import (
    Braid,
    Circle,
    Compose,
    CupCap,
    Denominator,
    Family,
    IntegerTangle,
    Mirror,
    Mutate,
    Numerator,
    Rational,
    Rotate,
    TangleExpr,
    TangleSum,
    close,
)

# Configure logging
logger = logging.getLogger(__name__)

Resolver = Callable[[str], TangleExpr]

_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<int>[+-]?\d+)
  | (?P<ref>@[A-Za-z0-9_.]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[()\[\],])
    """,
    re.VERBOSE,
)

_UNARY = {
    "N": Numerator,
    "D": Denominator,
    "mirror": Mirror,
    "circle": Circle,
}


class _Parser:
    def __init__(self, text: str, resolver: Optional[Resolver]):
        self.text = text
        self.resolver = resolver
        self.tokens: List[Tuple[str, str, int]] = []
        position = 0
        while position < len(text):
            match = _TOKEN.match(text, position)
            if match is None:
                raise TangleSyntaxError(f"Unexpected character {text[position]!r}", position)
            kind = match.lastgroup
            if kind != "space":
                self.tokens.append((kind, match.group(), position))
            position = match.end()
        self.index = 0

    # Token helpers

    def _peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _position(self) -> int:
        token = self._peek()
        return token[2] if token else len(self.text)

    def _next(self, expected: str) -> Tuple[str, str, int]:
        token = self._peek()
        if token is None:
            raise TangleSyntaxError(f"Unexpected end of input, expected {expected}", len(self.text))
        self.index += 1
        return token

    def _punct(self, symbol: str) -> None:
        kind, value, position = self._next(repr(symbol))
        if kind != "punct" or value != symbol:
            raise TangleSyntaxError(f"Expected {symbol!r}, found {value!r}", position)

    def _at(self, symbol: str) -> bool:
        token = self._peek()
        return token is not None and token[0] == "punct" and token[1] == symbol

    def _int(self) -> int:
        kind, value, position = self._next("an integer")
        if kind != "int":
            raise TangleSyntaxError(f"Expected an integer, found {value!r}", position)
        return int(value)

    def _int_list(self, closing: str) -> Tuple[int, ...]:
        values = []
        while not self._at(closing):
            if self._at(","):
                self.index += 1
                continue
            values.append(self._int())
        self._punct(closing)
        return tuple(values)

    # Grammar

    def parse(self) -> TangleExpr:
        expr = self.expr()
        token = self._peek()
        if token is not None:
            raise TangleSyntaxError(f"Trailing input {token[1]!r}", token[2])
        return expr

    def expr(self) -> TangleExpr:
        kind, value, position = self._next("an expression")
        if kind == "ref":
            return self._reference(value[1:], position)
        if kind != "name":
            raise TangleSyntaxError(f"Expected an expression, found {value!r}", position)
        try:
            return self._call(value, position)
        except (TangleSyntaxError, Skein4Error):
            raise
        except (ValueError, IndexError) as exc:
            raise TangleSyntaxError(f"Malformed {value}: {exc}", position) from exc

    def _reference(self, name: str, position: int) -> TangleExpr:
        if self.resolver is None:
            raise TangleSyntaxError(f"No catalog available to resolve @{name}", position)
        return self.resolver(name)

    def _call(self, name: str, position: int) -> TangleExpr:
        if name.startswith("braid") and name[5:].isdigit():
            strands = int(name[5:])
            self._punct("[")
            letters = self._int_list("]")
            return Braid(BraidWord(strands, letters))

        self._punct("(")
        if name in _UNARY:
            child = self.expr()
            self._punct(")")
            return _UNARY[name](child)
        if name in ("mx", "my", "mz"):
            child = self.expr()
            self._punct(")")
            return Mutate(name[1], child)
        if name == "close":
            child = self.expr()
            self._punct(")")
            return close(child)
        if name in ("sum", "comp"):
            left = self.expr()
            self._punct(",")
            right = self.expr()
            self._punct(")")
            return TangleSum(left, right) if name == "sum" else Compose(left, right)
        if name == "rot":
            steps = self._int()
            self._punct(",")
            child = self.expr()
            self._punct(")")
            return Rotate(steps, child)
        if name == "int":
            twists = self._int()
            self._punct(")")
            return IntegerTangle(twists)
        if name == "rat":
            return Rational(self._int_list(")"))
        if name == "U":
            index = self._int()
            self._punct(",")
            strands = self._int()
            self._punct(")")
            return CupCap(index, strands)
        if name in ("torus", "twist", "pretzel"):
            return Family(name, self._int_list(")"))
        raise TangleSyntaxError(f"Unknown constructor {name!r}", position)


def parse_tangle(text: str, resolver: Optional[Resolver] = None, use_catalog: bool = True) -> TangleExpr:
    """
    Parse a tangle or link expression.

    Args:
        text: expression text
        resolver: callable resolving ``@name`` references; defaults to the catalog
        use_catalog: fall back to the catalog when no resolver is given

    Returns:
        TangleExpr: the syntax tree

    Raises:
        TangleSyntaxError: malformed text, with the offending position
        ArityError: boundary arities do not match
    """
    if resolver is None and use_catalog:
        from skein4.app.services.catalog import resolve_reference

        resolver = resolve_reference
    expr = _Parser(text, resolver).parse()
    logger.debug(f"Parsed {text!r} as arity-{expr.arity} expression")
    return expr
