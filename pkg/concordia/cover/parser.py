"""A recursive-descent parser for knot expressions.

    expr := term ("#" term)*
    term := "-" term | atom
    atom := "T(" INT "," INT ")" | "C(" INT "," INT ";" expr ")" | "D" | "WhD^" INT | "thin(" ["-"] INT ")"
          | "V[" INT ("," INT)* "]" | "U" | "Kstar" | "(" expr ")"

Whitespace is insignificant and "D" is an alias for "WhD^4".
"""

import logging

from concordia.cover.expressions import (
    Cable,
    ExplicitV,
    KnotExpr,
    Kstar,
    Mirror,
    Sum,
    ThinClass,
    TorusKnot,
    Unknot,
    WhiteheadDouble,
)
from concordia.cover.tokenizer import Tokenizer
from concordia.dcalc import VSequence
from concordia.exceptions import InvalidVSequenceError, KnotSemanticError, KnotSyntaxError, UnsupportedFeatureError
from concordia.types import Token

logger = logging.getLogger(__name__)


class Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.idx = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.idx]

    def parse(self) -> KnotExpr:
        expr = self._expr()
        if self.current.kind != "EOF":
            self._fail(f"Unexpected {self._describe(self.current)} after the end of the expression")
        return expr

    def _fail(self, message, token: Token = None, error_cls=KnotSyntaxError):
        token = token or self.current
        raise error_cls(message, token.line, token.column)

    @staticmethod
    def _describe(token: Token) -> str:
        return "end of input" if token.kind == "EOF" else repr(token.text)

    def _advance(self) -> Token:
        token = self.current
        if token.kind != "EOF":
            self.idx += 1
        return token

    def _expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            expected = "an integer" if kind == "INT" else repr(kind)
            self._fail(f"Expected {expected}, found {self._describe(self.current)}")
        return self._advance()

    def _int(self) -> int:
        return int(self._expect("INT").text)

    def _expr(self) -> KnotExpr:
        start = self.current
        summands = [self._term()]
        while self.current.kind == "#":
            self._advance()
            summands.append(self._term())
        if len(summands) == 1:
            return summands[0]
        return Sum(tuple(summands), position=(start.line, start.column))

    def _term(self) -> KnotExpr:
        if self.current.kind == "-":
            token = self._advance()
            return Mirror(self._term(), position=(token.line, token.column))
        return self._atom()

    def _atom(self) -> KnotExpr:
        token = self.current
        position = (token.line, token.column)

        if token.kind == "(":
            self._advance()
            expr = self._expr()
            self._expect(")")
            return expr

        if token.kind != "NAME":
            self._fail(f"Expected a knot, found {self._describe(token)}")
        self._advance()

        if token.text == "U":
            return Unknot(position=position)
        if token.text == "Kstar":
            return Kstar(position=position)
        if token.text == "D":
            return WhiteheadDouble(4, position=position)
        if token.text == "WhD":
            self._expect("^")
            copies_token = self.current
            copies = self._int()
            if copies < 1:
                self._fail("A Whitehead-double block needs at least one copy", copies_token, KnotSemanticError)
            return WhiteheadDouble(copies, position=position)
        if token.text == "T":
            self._expect("(")
            q = self._torus_parameters()
            self._expect(")")
            return TorusKnot(q, position=position)
        if token.text == "C":
            self._expect("(")
            q = self._torus_parameters()
            self._expect(";")
            companion = self._expr()
            self._expect(")")
            return Cable(q, companion, position=position)
        if token.text == "thin":
            self._expect("(")
            sign_token = self.current
            sign = 1
            if sign_token.kind == "-":
                self._advance()
                sign = -1
            sigma = sign * self._int()
            self._expect(")")
            if sigma % 2:
                self._fail(f"The signature of a knot is even, got {sigma}", sign_token, KnotSemanticError)
            return ThinClass(sigma, position=position)
        if token.text == "V":
            self._expect("[")
            values = [self._int()]
            while self.current.kind == ",":
                self._advance()
                values.append(self._int())
            self._expect("]")
            try:
                VSequence(tuple(values))
            except InvalidVSequenceError as e:
                self._fail(str(e), token, KnotSemanticError)
            return ExplicitV(tuple(values), position=position)

        self._fail(f"Unknown knot {token.text!r}", token)

    def _torus_parameters(self) -> int:
        """Parse `INT "," INT` of a torus knot or cable and return q."""
        p_token = self.current
        p = self._int()
        self._expect(",")
        q_token = self.current
        q = self._int()
        if p != 2:
            self._fail(f"Only winding number 2 is supported, got {p}", p_token, UnsupportedFeatureError)
        if q % 2 == 0:
            self._fail(f"q has to be odd, got {q}", q_token, KnotSemanticError)
        if q < 3:
            self._fail(f"q has to be at least 3, got {q}", q_token, KnotSemanticError)
        return q


def parse(text: str) -> KnotExpr:
    """Parse a knot expression into its AST."""
    tokenizer = Tokenizer()
    tokenizer.tokenize(text)
    expr = Parser(tokenizer.get_tokens()).parse()
    logger.debug("Parsed %r as %s", text, expr)
    return expr
