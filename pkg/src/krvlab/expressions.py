"""Expression language over the operator calculus.

The grammar covers rational scalars, the generators, products, sums,
brackets, iterated ad, tr, theta, delta, the three partials (dA_*, dF_*,
dL_*), tensor pairs (@) and div.  Every well-typed tree evaluates to a
sorted value (scalar, lie, poly, trace, tensor or derivation), and the
renderers emit text this parser reads back to an equal value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .derivations import Derivation, from_trace
from .free_assoc import (NcPoly, TensorPoly, ad_action, commutator,
                         partial_assoc)
from .free_lie import (FLElement, LiePoly, NotLieError, lie_from_ncpoly,
                       partial_lie, theta)
from .kv_algebra import delta, divergence
from .trace_space import TracePoly, partial_trace, tr


class ExprError(ValueError):
    """Base for parse and evaluation failures; carries a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ParseError(ExprError):
    pass


class TypeMismatchError(ExprError):
    def __init__(self, expected: str, actual: str, position: int):
        super().__init__(f"expected {expected}, got {actual}", position)
        self.expected = expected
        self.actual = actual


class EvalError(ExprError):
    pass


# ---------------------------------------------------------------- tokens

_ALIASES = str.maketrans({"·": "*", "−": "-", "⊗": "@"})
_TOKEN = re.compile(r"\d+|[A-Za-z_][A-Za-z_0-9]*|\S")

_PARTIALS = {
    "dA_x": ("A", "x"), "dA_y": ("A", "y"),
    "dF_x": ("F", "x"), "dF_y": ("F", "y"),
    "dL_x": ("L", "x"), "dL_y": ("L", "y"),
}
_KEYWORDS = {"x", "y", "tr", "theta", "delta", "ad", "div", *_PARTIALS}


@dataclass
class _Token:
    text: str
    pos: int


def _tokenize(source: str) -> list[_Token]:
    text = source.translate(_ALIASES)
    tokens = []
    for match in _TOKEN.finditer(text):
        tokens.append(_Token(match.group(), match.start()))
    return tokens


# ------------------------------------------------------------------- AST

@dataclass
class Expr:
    pos: int


@dataclass
class Num(Expr):
    value: int


@dataclass
class Gen(Expr):
    name: str


@dataclass
class Word(Expr):
    word: str


@dataclass
class Neg(Expr):
    operand: Expr


@dataclass
class BinOp(Expr):
    op: str  # + - * / @
    left: Expr
    right: Expr


@dataclass
class LieBracket(Expr):
    left: Expr
    right: Expr


@dataclass
class AdPower(Expr):
    base: Expr
    power: int
    argument: Expr


@dataclass
class Call(Expr):
    func: str  # tr, div
    argument: Expr


@dataclass
class ThetaPair(Expr):
    left: Expr
    right: Expr


@dataclass
class DeltaGen(Expr):
    subscript: int


@dataclass
class Partial(Expr):
    space: str  # A, F, L
    gen: str
    argument: Expr


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = _tokenize(source)
        self.index = 0

    def _peek(self) -> Optional[_Token]:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def _next(self) -> _Token:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.source))
        self.index += 1
        return tok

    def _expect(self, text: str) -> _Token:
        tok = self._peek()
        if tok is None:
            raise ParseError(f"expected {text!r}", len(self.source))
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.pos)
        self.index += 1
        return tok

    def _match(self, *texts: str) -> Optional[_Token]:
        tok = self._peek()
        if tok is not None and tok.text in texts:
            self.index += 1
            return tok
        return None

    def parse(self) -> Expr:
        expr = self.expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return expr

    def expr(self) -> Expr:
        node = self.term()
        while True:
            tok = self._match("+", "-")
            if tok is None:
                return node
            node = BinOp(tok.pos, tok.text, node, self.term())

    def term(self) -> Expr:
        node = self.unary()
        while True:
            tok = self._match("*", "/")
            if tok is None:
                return node
            node = BinOp(tok.pos, tok.text, node, self.unary())

    def unary(self) -> Expr:
        tok = self._match("-")
        if tok is not None:
            return Neg(tok.pos, self.unary())
        return self.tensor()

    def tensor(self) -> Expr:
        node = self.atom()
        tok = self._match("@")
        if tok is not None:
            return BinOp(tok.pos, "@", node, self.atom())
        return node

    def _int_literal(self) -> int:
        tok = self._next()
        if not tok.text.isdigit():
            raise ParseError(f"expected an integer, found {tok.text!r}", tok.pos)
        return int(tok.text)

    def atom(self) -> Expr:
        tok = self._next()
        text = tok.text
        if text.isdigit():
            return Num(tok.pos, int(text))
        if text == "(":
            node = self.expr()
            self._expect(")")
            return node
        if text == "[":
            left = self.expr()
            self._expect(",")
            right = self.expr()
            self._expect("]")
            return LieBracket(tok.pos, left, right)
        if text in ("x", "y"):
            return Gen(tok.pos, text)
        if re.fullmatch(r"[xy]+", text):
            return Word(tok.pos, text)
        if text in _PARTIALS:
            space, gen = _PARTIALS[text]
            self._expect("(")
            arg = self.expr()
            self._expect(")")
            return Partial(tok.pos, space, gen, arg)
        if text in ("tr", "div"):
            self._expect("(")
            arg = self.expr()
            self._expect(")")
            return Call(tok.pos, text, arg)
        if text == "theta":
            self._expect("(")
            left = self.expr()
            self._expect(";")
            right = self.expr()
            self._expect(")")
            return ThetaPair(tok.pos, left, right)
        if text == "delta":
            self._expect("(")
            sub = self._int_literal()
            self._expect(")")
            return DeltaGen(tok.pos, sub)
        if text == "ad":
            self._expect("(")
            base = self.expr()
            self._expect(",")
            power = self._int_literal()
            self._expect(")")
            self._expect("(")
            arg = self.expr()
            self._expect(")")
            return AdPower(tok.pos, base, power, arg)
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", text):
            raise ParseError(f"unknown name {text!r}", tok.pos)
        raise ParseError(f"unexpected {text!r}", tok.pos)


def parse(source: str) -> Expr:
    """Parse an expression; raises ParseError with a position on failure."""
    parser = _Parser(source)
    if not parser.tokens:
        raise ParseError("empty expression", 0)
    return parser.parse()


# ----------------------------------------------------------------- values

SORTS = ("scalar", "lie", "poly", "trace", "tensor", "derivation")

Payload = Union[Fraction, LiePoly, NcPoly, TracePoly, FLElement, TensorPoly,
                Derivation]


@dataclass
class Value:
    sort: str
    payload: Payload


def _as_poly(v: Value, pos: int) -> NcPoly:
    if v.sort == "poly":
        return v.payload
    if v.sort == "lie":
        return v.payload.embedding
    if v.sort == "scalar":
        return NcPoly({"": v.payload})
    raise TypeMismatchError("poly", v.sort, pos)


def _as_lie(v: Value, pos: int) -> LiePoly:
    if v.sort == "lie":
        return v.payload
    if v.sort == "poly":
        try:
            return lie_from_ncpoly(v.payload)
        except NotLieError:
            raise TypeMismatchError("lie", "poly (not a Lie element)", pos)
    if v.sort == "scalar" and v.payload == 0:
        return LiePoly.zero()
    raise TypeMismatchError("lie", v.sort, pos)


def _trace_payload(v: Value) -> TracePoly:
    return v.payload.value if isinstance(v.payload, FLElement) else v.payload


def _as_trace(v: Value, pos: int) -> TracePoly:
    if v.sort == "trace":
        return _trace_payload(v)
    if v.sort == "scalar":
        return TracePoly({"": v.payload})
    raise TypeMismatchError("trace", v.sort, pos)


def _scale(v: Value, q: Fraction) -> Value:
    if v.sort == "scalar":
        return Value("scalar", v.payload * q)
    return Value(v.sort, v.payload.scale(q))


def _add(a: Value, b: Value, pos: int) -> Value:
    if a.sort == b.sort == "scalar":
        return Value("scalar", a.payload + b.payload)
    if a.sort == b.sort == "lie":
        return Value("lie", a.payload + b.payload)
    poly_sorts = {"scalar", "lie", "poly"}
    if a.sort in poly_sorts and b.sort in poly_sorts:
        return Value("poly", _as_poly(a, pos) + _as_poly(b, pos))
    trace_sorts = {"scalar", "trace"}
    if a.sort in trace_sorts and b.sort in trace_sorts:
        if (isinstance(a.payload, FLElement)
                and isinstance(b.payload, FLElement)):
            return Value("trace", a.payload + b.payload)
        return Value("trace", _as_trace(a, pos) + _as_trace(b, pos))
    if a.sort == b.sort in ("tensor", "derivation"):
        return Value(a.sort, a.payload + b.payload)
    raise TypeMismatchError(a.sort, b.sort, pos)


def _mul(a: Value, b: Value, pos: int) -> Value:
    if a.sort == "scalar":
        return _scale(b, a.payload)
    if b.sort == "scalar":
        return _scale(a, b.payload)
    poly_sorts = {"lie", "poly"}
    if a.sort in poly_sorts and b.sort in poly_sorts:
        return Value("poly", _as_poly(a, pos) * _as_poly(b, pos))
    raise TypeMismatchError("scalar or poly factors", f"{a.sort} * {b.sort}", pos)


def evaluate(expr: Expr) -> Value:
    """Evaluate a parsed tree; raises TypeMismatchError / EvalError."""
    if isinstance(expr, Num):
        return Value("scalar", Fraction(expr.value))
    if isinstance(expr, Gen):
        return Value("lie", LiePoly.gen(expr.name))
    if isinstance(expr, Word):
        return Value("poly", NcPoly.from_word(expr.word))
    if isinstance(expr, Neg):
        return _scale(evaluate(expr.operand), Fraction(-1))
    if isinstance(expr, BinOp):
        left = evaluate(expr.left)
        if expr.op == "+":
            return _add(left, evaluate(expr.right), expr.pos)
        if expr.op == "-":
            return _add(left, _scale(evaluate(expr.right), Fraction(-1)),
                        expr.pos)
        if expr.op == "*":
            return _mul(left, evaluate(expr.right), expr.pos)
        if expr.op == "/":
            right = evaluate(expr.right)
            if right.sort != "scalar":
                raise TypeMismatchError("scalar divisor", right.sort, expr.pos)
            if right.payload == 0:
                raise EvalError("division by zero", expr.pos)
            return _scale(left, Fraction(1) / right.payload)
        if expr.op == "@":
            right = evaluate(expr.right)
            return Value("tensor", TensorPoly.of(_as_poly(left, expr.pos),
                                                 _as_poly(right, expr.pos)))
    if isinstance(expr, LieBracket):
        left = evaluate(expr.left)
        right = evaluate(expr.right)
        if left.sort == right.sort == "derivation":
            from .derivations import bracket_der
            return Value("derivation", bracket_der(left.payload, right.payload))
        if left.sort == right.sort == "lie":
            from .free_lie import bracket
            return Value("lie", bracket(left.payload, right.payload))
        return Value("poly", commutator(_as_poly(left, expr.pos),
                                        _as_poly(right, expr.pos)))
    if isinstance(expr, AdPower):
        base = _as_poly(evaluate(expr.base), expr.pos)
        arg = evaluate(expr.argument)
        cur = _as_poly(arg, expr.pos)
        for _ in range(expr.power):
            cur = ad_action(base, cur)
        if arg.sort == "lie":
            return Value("lie", lie_from_ncpoly(cur))
        return Value("poly", cur)
    if isinstance(expr, Call):
        arg = evaluate(expr.argument)
        if expr.func == "tr":
            return Value("trace", tr(_as_poly(arg, expr.pos)))
        if expr.func == "div":
            if arg.sort != "trace":
                raise TypeMismatchError("trace", arg.sort, expr.pos)
            u = from_trace(arg.payload)
            if not u.lie_valued:
                raise EvalError(
                    "div needs a Lie-valued trace class (an F(L) element)",
                    expr.pos)
            return Value("trace", divergence(u))
    if isinstance(expr, ThetaPair):
        left = _as_lie(evaluate(expr.left), expr.pos)
        right = _as_lie(evaluate(expr.right), expr.pos)
        return Value("trace", theta(left, right))
    if isinstance(expr, DeltaGen):
        try:
            return Value("trace", delta(expr.subscript))
        except ValueError as exc:
            raise EvalError(str(exc), expr.pos)
    if isinstance(expr, Partial):
        arg = evaluate(expr.argument)
        if expr.space == "A":
            return Value("tensor", partial_assoc(_as_poly(arg, expr.pos),
                                                 expr.gen))
        if expr.space == "F":
            return Value("poly", partial_trace(_as_trace(arg, expr.pos),
                                               expr.gen))
        return Value("poly", partial_lie(_as_lie(arg, expr.pos), expr.gen))
    raise EvalError(f"cannot evaluate {type(expr).__name__}", expr.pos)


def evaluate_source(source: str) -> Value:
    return evaluate(parse(source))


def render_value(v: Value) -> str:
    if v.sort == "scalar":
        return str(v.payload)
    return str(v.payload)


def values_equivalent(a: Value, b: Value) -> bool:
    """Semantic equality across the scalar/lie/poly promotions."""
    if a.sort == b.sort:
        if a.sort == "trace":
            return _trace_payload(a) == _trace_payload(b)
        return a.payload == b.payload
    poly_sorts = {"scalar", "lie", "poly"}
    if a.sort in poly_sorts and b.sort in poly_sorts:
        return _as_poly(a, 0) == _as_poly(b, 0)
    if {a.sort, b.sort} <= {"scalar", "trace"}:
        return _as_trace(a, 0) == _as_trace(b, 0)
    return False
