"""
Recursive-descent parser for the expression language.

    expr    := product (('+' | '-') product)*
    product := unary ('*' unary)*
    unary   := '-' unary | atom
    atom    := NUMBER | IDENT | IDENT '(' expr ')' | '[' expr ',' expr ']' | '(' expr ')'
"""

import re
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional

from ..exceptions import DslSyntaxError, ResolutionError
from ..utils.helpers import near_matches
from .ast import (
    ApplyDerivation, ApplyDpp, Bracket, Negate, Node, Number, Product, Sum, Symbol, Trace,
)

TOKEN_PATTERN = re.compile(r"""
    (?P<space>\s+)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[()\[\],*+\-])
""", re.VERBOSE)

DERIVATION_NAMES = ('s', 'sbar', 'd1', 'd2', 'dFP', 'delta')


class Token(NamedTuple):
    kind: str
    text: str
    start: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise DslSyntaxError(f"unexpected character {text[position]!r}", text, position)
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class Parser:
    """Parse one expression; identifiers are checked when `known` is given.

    Args:
        text: source text
        known: generator and scalar identifiers accepted as symbols
        derivations: names accepted in application position
    """

    def __init__(self, text: str, known: Optional[Iterable[str]] = None,
                 derivations: Iterable[str] = DERIVATION_NAMES):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.known = set(known) if known is not None else None
        self.derivations = set(derivations)

    # -- token helpers ------------------------------------------------

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, text: str) -> Optional[Token]:
        if self.current.kind == 'punct' and self.current.text == text:
            return self._advance()
        return None

    def _expect(self, text: str, opened: Optional[Token] = None) -> Token:
        token = self._accept(text)
        if token is None:
            if self.current.kind == 'end' and opened is not None:
                raise DslSyntaxError(f"unbalanced {opened.text!r}", self.text, opened.start)
            found = self.current.text or 'end of input'
            raise DslSyntaxError(f"expected {text!r}, found {found!r}", self.text,
                                 self.current.start)
        return token

    # -- grammar ------------------------------------------------------

    def parse(self) -> Node:
        node = self.expression()
        if self.current.kind != 'end':
            raise DslSyntaxError(f"unexpected {self.current.text!r}", self.text, self.current.start)
        return node

    def expression(self) -> Node:
        start = self.current.start
        node = self.product()
        while self.current.kind == 'punct' and self.current.text in '+-':
            op = self._advance().text
            right = self.product()
            node = Sum(node, op, right, span=(start, self._end()))
        return node

    def product(self) -> Node:
        start = self.current.start
        node = self.unary()
        while self._accept('*'):
            right = self.unary()
            node = Product(node, right, span=(start, self._end()))
        return node

    def unary(self) -> Node:
        start = self.current.start
        if self._accept('-'):
            return Negate(self.unary(), span=(start, self._end()))
        return self.atom()

    def atom(self) -> Node:
        token = self.current
        if token.kind == 'number':
            self._advance()
            return Number(Fraction(token.text), span=(token.start, self._end()))
        if token.kind == 'ident':
            self._advance()
            if self.current.kind == 'punct' and self.current.text == '(':
                return self._application(token)
            self._resolve(token)
            return Symbol(token.text, span=(token.start, self._end()))
        opened = self._accept('[')
        if opened:
            left = self.expression()
            self._expect(',', opened)
            right = self.expression()
            self._expect(']', opened)
            return Bracket(left, right, span=(token.start, self._end()))
        opened = self._accept('(')
        if opened:
            node = self.expression()
            self._expect(')', opened)
            return node
        if token.kind == 'end':
            raise DslSyntaxError("unexpected end of input", self.text, token.start)
        raise DslSyntaxError(f"unexpected {token.text!r}", self.text, token.start)

    def _application(self, name: Token) -> Node:
        opened = self._expect('(')
        operand = self.expression()
        self._expect(')', opened)
        span = (name.start, self._end())
        if name.text == 'tr':
            return Trace(operand, span=span)
        if name.text == 'Dpp':
            return ApplyDpp(operand, span=span)
        if name.text not in self.derivations:
            candidates = self.derivations | {'tr', 'Dpp'}
            raise ResolutionError(name.text, near_matches(name.text, candidates))
        return ApplyDerivation(name.text, operand, span=span)

    def _resolve(self, token: Token):
        if self.known is not None and token.text not in self.known:
            raise ResolutionError(token.text, near_matches(token.text, self.known))

    def _end(self) -> int:
        previous = self.tokens[self.index - 1]
        return previous.start + len(previous.text)


def parse_expression(text: str, known: Optional[Iterable[str]] = None,
                     derivations: Iterable[str] = DERIVATION_NAMES) -> Node:
    """Parse text into an expression tree."""
    return Parser(text, known, derivations).parse()
