"""Parsing and printing of boson-algebra expressions.

Grammar (operators bind loosest to tightest, products noncommutative,
'*' always required):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' nat)?
    atom   := 'a' | 'ad' | 'I' | 'L' | rational
            | '(' expr ')' | 'dpow' '(' expr ',' nat ')'

rational is digits with an optional immediate '/digits'.  dpow(e, n)
is the n-factor stepped product e (e - L) (e - 2L) ....  Errors carry
the byte offset into the UTF-8 encoding of the input.

The printer emits text that parses back to an equal normal form, which
the test suite exercises as a round-trip property.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .rings import LAM, LambdaPoly, XPoly
from .weyl import NormalForm, degenerate_power


class ExprError(ValueError):
    """Lexing or parsing failure with a byte offset into the input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class LexError(ExprError):
    pass


class ParseError(ExprError):
    def __init__(self, message: str, offset: int, expected: Tuple[str, ...] = ()):
        if expected:
            message = f"{message}; expected one of: {', '.join(expected)}"
        super().__init__(message, offset)
        self.expected = frozenset(expected)


@dataclass(frozen=True)
class Sym:
    name: str  # "a", "ad" or "I"


@dataclass(frozen=True)
class LambdaSym:
    pass


@dataclass(frozen=True)
class ScalarLit:
    value: Fraction


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    n: int


@dataclass(frozen=True)
class DegPow:
    arg: "Node"
    n: int


@dataclass(frozen=True)
class Neg:
    arg: "Node"


Node = Union[Sym, LambdaSym, ScalarLit, Add, Sub, Mul, Pow, DegPow, Neg]

_KEYWORDS = ("a", "ad", "I", "L", "dpow")
_PUNCT = "+-*^(),"
_DIGITS = "0123456789"  # str.isdigit accepts non-ASCII digits that int() rejects


@dataclass(frozen=True)
class _Token:
    kind: str  # "number", "name", one of _PUNCT, or "end"
    text: str
    offset: int  # byte offset


def _tokenize(source: str) -> List[_Token]:
    tokens: List[_Token] = []
    i = 0
    n = len(source)

    def byte_at(pos: int) -> int:
        return len(source[:pos].encode("utf-8"))

    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch in _DIGITS:
            start = i
            while i < n and source[i] in _DIGITS:
                i += 1
            if i < n and source[i] == "/" and i + 1 < n and source[i + 1] in _DIGITS:
                i += 1
                while i < n and source[i] in _DIGITS:
                    i += 1
            tokens.append(_Token("number", source[start:i], byte_at(start)))
            continue
        if ch.isalpha():
            start = i
            while i < n and source[i].isalnum():
                i += 1
            word = source[start:i]
            if word not in _KEYWORDS:
                raise LexError(f"unknown symbol {word!r}", byte_at(start))
            tokens.append(_Token("name", word, byte_at(start)))
            continue
        if ch in _PUNCT:
            tokens.append(_Token(ch, ch, byte_at(i)))
            i += 1
            continue
        raise LexError(f"unexpected character {ch!r}", byte_at(i))
    tokens.append(_Token("end", "", byte_at(n)))
    return tokens


_ATOM_STARTERS = ("a", "ad", "I", "L", "dpow", "number", "(", "-")


class _Parser:
    def __init__(self, tokens: List[_Token]):
        self._tokens = tokens
        self._pos = 0

    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _advance(self) -> _Token:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _expect(self, kind: str) -> _Token:
        tok = self._peek()
        if tok.kind != kind:
            raise ParseError(self._describe(tok), tok.offset, (kind,))
        return self._advance()

    @staticmethod
    def _describe(tok: _Token) -> str:
        if tok.kind == "end":
            return "unexpected end of input"
        return f"unexpected token {tok.text!r}"

    def parse(self) -> Node:
        node = self._expr()
        tok = self._peek()
        if tok.kind != "end":
            raise ParseError(self._describe(tok), tok.offset, ("+", "-", "*", "^", "end of input"))
        return node

    def _expr(self) -> Node:
        node = self._term()
        while self._peek().kind in ("+", "-"):
            op = self._advance().kind
            rhs = self._term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def _term(self) -> Node:
        node = self._factor()
        while self._peek().kind == "*":
            self._advance()
            node = Mul(node, self._factor())
        return node

    def _factor(self) -> Node:
        if self._peek().kind == "-":
            self._advance()
            return Neg(self._factor())
        node = self._atom()
        if self._peek().kind == "^":
            self._advance()
            node = Pow(node, self._nat())
        return node

    def _nat(self) -> int:
        tok = self._peek()
        if tok.kind != "number" or "/" in tok.text:
            raise ParseError(self._describe(tok), tok.offset, ("nonnegative integer",))
        self._advance()
        return int(tok.text)

    def _atom(self) -> Node:
        tok = self._peek()
        if tok.kind == "number":
            self._advance()
            try:
                value = Fraction(tok.text)
            except ZeroDivisionError:
                raise ParseError("zero denominator in literal", tok.offset)
            return ScalarLit(value)
        if tok.kind == "name":
            if tok.text in ("a", "ad", "I"):
                self._advance()
                return Sym(tok.text)
            if tok.text == "L":
                self._advance()
                return LambdaSym()
            # dpow
            self._advance()
            self._expect("(")
            arg = self._expr()
            self._expect(",")
            n = self._nat()
            self._expect(")")
            return DegPow(arg, n)
        if tok.kind == "(":
            self._advance()
            node = self._expr()
            self._expect(")")
            return node
        raise ParseError(self._describe(tok), tok.offset, _ATOM_STARTERS)


def parse(source: str) -> Node:
    """Source text to syntax tree; raises LexError or ParseError."""
    return _Parser(_tokenize(source)).parse()


def eval_node(node: Node) -> NormalForm:
    """Evaluate a syntax tree down to a normal-ordered element."""
    if isinstance(node, Sym):
        if node.name == "a":
            return NormalForm.annihilation()
        if node.name == "ad":
            return NormalForm.creation()
        return NormalForm.identity()
    if isinstance(node, LambdaSym):
        return NormalForm.monomial(0, 0, LAM)
    if isinstance(node, ScalarLit):
        return NormalForm.monomial(0, 0, node.value)
    if isinstance(node, Add):
        return eval_node(node.left) + eval_node(node.right)
    if isinstance(node, Sub):
        return eval_node(node.left) - eval_node(node.right)
    if isinstance(node, Mul):
        return eval_node(node.left) * eval_node(node.right)
    if isinstance(node, Pow):
        return eval_node(node.base) ** node.n
    if isinstance(node, DegPow):
        return degenerate_power(eval_node(node.arg), node.n)
    if isinstance(node, Neg):
        return -eval_node(node.arg)
    raise TypeError(f"not a syntax node: {type(node).__name__}")


def eval_source(source: str) -> NormalForm:
    """Parse and evaluate in one step."""
    return eval_node(parse(source))


def format_rational(q: Fraction) -> str:
    """"p/q", or just "p" for integers; never a float."""
    return str(q)


def _mono_pieces(q: Fraction, k: int, drop_unit: bool) -> List[str]:
    # magnitude pieces of q * L^k with q > 0; caller handles the sign
    parts: List[str] = []
    if k == 0:
        parts.append(format_rational(q))
    else:
        if q != 1 or not drop_unit:
            parts.append(format_rational(q))
        parts.append("L" if k == 1 else f"L^{k}")
    return parts


def format_lambda_poly(c: LambdaPoly) -> str:
    """Ascending sum of monomials with explicit coefficients, e.g. "1 - 1 * L"."""
    if c.is_zero():
        return "0"
    pieces: List[Tuple[int, str]] = []
    for k, q in enumerate(c.coeffs):
        if q == 0:
            continue
        sign = -1 if q < 0 else 1
        pieces.append((sign, " * ".join(_mono_pieces(abs(q), k, drop_unit=False))))
    return _join_signed(pieces)


def _join_signed(pieces: List[Tuple[int, str]]) -> str:
    out = []
    for idx, (sign, text) in enumerate(pieces):
        if idx == 0:
            out.append(("-" if sign < 0 else "") + text)
        else:
            out.append((" - " if sign < 0 else " + ") + text)
    return "".join(out)


def _op_pieces(i: int, j: int) -> List[str]:
    # exponents stay explicit (ad^1, a^1) to match the canonical layout
    parts = []
    if i >= 1:
        parts.append(f"ad^{i}")
    if j >= 1:
        parts.append(f"a^{j}")
    return parts


def _nf_signed_pieces(nf: NormalForm) -> List[Tuple[int, str]]:
    pieces: List[Tuple[int, str]] = []
    for (i, j), c in nf.sorted_terms():
        ops = _op_pieces(i, j)
        monos = [(k, q) for k, q in enumerate(c.coeffs) if q != 0]
        if not ops:
            # pure scalar term: splice its monomials into the sum
            for k, q in monos:
                sign = -1 if q < 0 else 1
                pieces.append((sign, " * ".join(_mono_pieces(abs(q), k, drop_unit=False))))
            continue
        if len(monos) == 1:
            k, q = monos[0]
            sign = -1 if q < 0 else 1
            parts = [] if (k == 0 and abs(q) == 1) else _mono_pieces(abs(q), k, drop_unit=True)
            pieces.append((sign, " * ".join(parts + ops)))
        else:
            pieces.append((1, " * ".join([f"({format_lambda_poly(c)})"] + ops)))
    return pieces


def format_nf(nf: NormalForm, fmt: str = "text") -> str:
    """Render a normal form; "text" round-trips through parse/eval, "json" is canonical."""
    if fmt == "text":
        if nf.is_zero():
            return "0"
        return _join_signed(_nf_signed_pieces(nf))
    if fmt == "json":
        return json.dumps(nf_json_payload(nf), sort_keys=True)
    raise ValueError(f"unknown format {fmt!r}")


def nf_json_payload(nf: NormalForm) -> list:
    return [
        {"i": i, "j": j, "coeff": [format_rational(q) for q in c.coeffs]}
        for (i, j), c in nf.sorted_terms()
    ]


def format_xpoly(p: XPoly) -> str:
    """Degree-descending rendering with x-powers, same coefficient style as normal forms."""
    if p.is_zero():
        return "0"
    pieces: List[Tuple[int, str]] = []
    for deg in range(p.degree, -1, -1):
        c = p.coeff(deg)
        if c.is_zero():
            continue
        xpart = [] if deg == 0 else (["x"] if deg == 1 else [f"x^{deg}"])
        monos = [(k, q) for k, q in enumerate(c.coeffs) if q != 0]
        if not xpart:
            for k, q in monos:
                sign = -1 if q < 0 else 1
                pieces.append((sign, " * ".join(_mono_pieces(abs(q), k, drop_unit=False))))
        elif len(monos) == 1:
            k, q = monos[0]
            sign = -1 if q < 0 else 1
            parts = [] if (k == 0 and abs(q) == 1) else _mono_pieces(abs(q), k, drop_unit=True)
            pieces.append((sign, " * ".join(parts + xpart)))
        else:
            pieces.append((1, " * ".join([f"({format_lambda_poly(c)})"] + xpart)))
    return _join_signed(pieces)


def lambda_poly_csv(c: LambdaPoly) -> str:
    """Semicolon-joined ascending coefficients; the zero polynomial is "0"."""
    if c.is_zero():
        return "0"
    return ";".join(format_rational(q) for q in c.coeffs)


def xpoly_json_payload(p: XPoly) -> list:
    return [[format_rational(q) for q in c.coeffs] for c in p.coeffs]
