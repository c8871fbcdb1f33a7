"""The free associative algebra A = Q<x,y> and its operator calculus.

Words over {x, y} are plain strings; the empty string is the unit.  NcPoly
stores a finite word -> coefficient mapping with exact rational
coefficients.  TensorPoly models A (x) A, the target of the double partial
d^A, carrying the outer A-bimodule action a.(s(x)t).b = as (x) tb.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Union

from .render import format_terms

GENERATORS = ("x", "y")

Scalar = Union[int, Fraction]


class BiDegree(NamedTuple):
    deg_x: int
    deg_y: int

    @property
    def total(self) -> int:
        return self.deg_x + self.deg_y


class InhomogeneousError(ValueError):
    """An operation that needs a homogeneous input got a mixed one."""


def _check_word(word: str) -> str:
    if any(ch not in "xy" for ch in word):
        raise ValueError(f"word {word!r} uses letters outside {{x, y}}")
    return word


def _check_gen(gen: str) -> str:
    if gen not in GENERATORS:
        raise ValueError(f"generator must be 'x' or 'y', got {gen!r}")
    return gen


def _coeff(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


def word_key(word: str) -> tuple[int, str]:
    """Length-then-lex order with x < y."""
    return (len(word), word)


class NcPoly:
    """Noncommutative polynomial: finite Q-combination of words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        clean: dict[str, Fraction] = {}
        if terms:
            for word, value in terms.items():
                q = _coeff(value)
                if q:
                    clean[_check_word(word)] = q
        self.terms = clean

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls()

    @classmethod
    def one(cls) -> "NcPoly":
        return cls({"": 1})

    @classmethod
    def gen(cls, gen: str) -> "NcPoly":
        return cls({_check_gen(gen): 1})

    @classmethod
    def from_word(cls, word: str, coeff: Scalar = 1) -> "NcPoly":
        return cls({word: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, word: str) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def sorted_terms(self) -> list[tuple[str, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, NcPoly) and self.terms == other.terms

    def __add__(self, other: "NcPoly") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NotImplemented
        out = dict(self.terms)
        for word, v in other.terms.items():
            w = out.get(word, Fraction(0)) + v
            if w:
                out[word] = w
            else:
                out.pop(word, None)
        return _raw_nc(out)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def __neg__(self) -> "NcPoly":
        return _raw_nc({w: -v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            out: dict[str, Fraction] = {}
            for w1, v1 in self.terms.items():
                for w2, v2 in other.terms.items():
                    word = w1 + w2
                    w = out.get(word, Fraction(0)) + v1 * v2
                    if w:
                        out[word] = w
                    else:
                        out.pop(word, None)
            return _raw_nc(out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, value: Scalar) -> "NcPoly":
        q = _coeff(value)
        if not q:
            return NcPoly()
        return _raw_nc({w: v * q for w, v in self.terms.items()})

    def by_length(self) -> dict[int, "NcPoly"]:
        """Split into total-degree homogeneous components."""
        parts: dict[int, dict[str, Fraction]] = {}
        for w, v in self.terms.items():
            parts.setdefault(len(w), {})[w] = v
        return {n: _raw_nc(t) for n, t in sorted(parts.items())}

    def __str__(self) -> str:
        return format_terms([(v, w) for w, v in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"NcPoly({self})"


def _raw_nc(terms: dict[str, Fraction]) -> NcPoly:
    poly = NcPoly.__new__(NcPoly)
    poly.terms = terms
    return poly


class TensorPoly:
    """Element of A (x) A with the outer bimodule action."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        clean: dict[tuple[str, str], Fraction] = {}
        if terms:
            for (left, right), value in terms.items():
                q = _coeff(value)
                if q:
                    clean[(_check_word(left), _check_word(right))] = q
        self.terms = clean

    @classmethod
    def zero(cls) -> "TensorPoly":
        return cls()

    @classmethod
    def unit(cls) -> "TensorPoly":
        return cls({("", ""): 1})

    @classmethod
    def of(cls, a: NcPoly, b: NcPoly) -> "TensorPoly":
        out: dict[tuple[str, str], Fraction] = {}
        for w1, v1 in a.terms.items():
            for w2, v2 in b.terms.items():
                key = (w1, w2)
                w = out.get(key, Fraction(0)) + v1 * v2
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        return _raw_tensor(out)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple[str, str], Fraction]]:
        return sorted(self.terms.items(),
                      key=lambda kv: (word_key(kv[0][0]), word_key(kv[0][1])))

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorPoly) and self.terms == other.terms

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        if not isinstance(other, TensorPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, v in other.terms.items():
            w = out.get(key, Fraction(0)) + v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
        return _raw_tensor(out)

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def __neg__(self) -> "TensorPoly":
        return _raw_tensor({k: -v for k, v in self.terms.items()})

    def scale(self, value: Scalar) -> "TensorPoly":
        q = _coeff(value)
        if not q:
            return TensorPoly()
        return _raw_tensor({k: v * q for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def left_mul(self, a: NcPoly) -> "TensorPoly":
        """Outer left action a.(s (x) t) = as (x) t."""
        out: dict[tuple[str, str], Fraction] = {}
        for wa, va in a.terms.items():
            for (s, t), v in self.terms.items():
                key = (wa + s, t)
                w = out.get(key, Fraction(0)) + va * v
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        return _raw_tensor(out)

    def right_mul(self, b: NcPoly) -> "TensorPoly":
        """Outer right action (s (x) t).b = s (x) tb."""
        out: dict[tuple[str, str], Fraction] = {}
        for (s, t), v in self.terms.items():
            for wb, vb in b.terms.items():
                key = (s, t + wb)
                w = out.get(key, Fraction(0)) + v * vb
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        return _raw_tensor(out)

    def __str__(self) -> str:
        pairs = []
        for (s, t), v in self.sorted_terms():
            pairs.append((v, f"{s or '1'}@{t or '1'}"))
        return format_terms(pairs)

    def __repr__(self) -> str:
        return f"TensorPoly({self})"


def _raw_tensor(terms: dict[tuple[str, str], Fraction]) -> TensorPoly:
    t = TensorPoly.__new__(TensorPoly)
    t.terms = terms
    return t


def mul(a: NcPoly, b: NcPoly) -> NcPoly:
    """Concatenation product on words, extended bilinearly."""
    return a * b


def partial_assoc(a: NcPoly, gen: str) -> TensorPoly:
    """d^A_gen: mark one occurrence of `gen` and split the word there.

    d^A_gen(w) = sum over positions i with w[i] == gen of w[:i] (x) w[i+1:].
    """
    _check_gen(gen)
    out: dict[tuple[str, str], Fraction] = {}
    for word, v in a.terms.items():
        for i, ch in enumerate(word):
            if ch == gen:
                key = (word[:i], word[i + 1:])
                w = out.get(key, Fraction(0)) + v
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
    return _raw_tensor(out)


def diamond(t: TensorPoly, c: NcPoly) -> NcPoly:
    """(sum A_i (x) B_i) diamond c = sum A_i c B_i."""
    out: dict[str, Fraction] = {}
    for (s, u), v in t.terms.items():
        for wc, vc in c.terms.items():
            word = s + wc + u
            w = out.get(word, Fraction(0)) + v * vc
            if w:
                out[word] = w
            else:
                out.pop(word, None)
    return _raw_nc(out)


def diamond_bimodule(t: TensorPoly, m: TensorPoly) -> TensorPoly:
    """Diamond with values in the bimodule A (x) A.

    (a (x) b) diamond (c (x) d) = ac (x) db, summed bilinearly.
    """
    out: dict[tuple[str, str], Fraction] = {}
    for (a, b), v in t.terms.items():
        for (c, d), u in m.terms.items():
            key = (a + c, d + b)
            w = out.get(key, Fraction(0)) + v * u
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return _raw_tensor(out)


def epsilon(a: NcPoly) -> Fraction:
    """Counit: the coefficient of the empty word."""
    return a.coeff("")


def commutator(a: NcPoly, b: NcPoly) -> NcPoly:
    return a * b - b * a


def ad_action(a: NcPoly, l: NcPoly) -> NcPoly:
    """ad_a(l) with words acting by nested brackets.

    For a word w = w1...wn, ad_w(l) = [w1, [w2, ... [wn, l] ...]]; the empty
    word acts as the identity, so ad_a(l) picks up epsilon(a) l for the
    constant part of a.
    """
    out = NcPoly()
    for word, v in a.terms.items():
        cur = l
        for ch in reversed(word):
            g = NcPoly.gen(ch)
            cur = g * cur - cur * g
        out = out + cur.scale(v)
    return out


def ad_action_tensor(a: NcPoly, t: TensorPoly) -> TensorPoly:
    """Same nested-bracket action on the bimodule A (x) A."""
    out = TensorPoly()
    for word, v in a.terms.items():
        cur = t
        for ch in reversed(word):
            g = NcPoly.gen(ch)
            cur = cur.left_mul(g) - cur.right_mul(g)
        out = out + cur.scale(v)
    return out


def star(a: NcPoly) -> NcPoly:
    """Word reversal times (-1)^length; an involutive anti-automorphism."""
    out: dict[str, Fraction] = {}
    for word, v in a.terms.items():
        rev = word[::-1]
        q = v if len(word) % 2 == 0 else -v
        w = out.get(rev, Fraction(0)) + q
        if w:
            out[rev] = w
        else:
            out.pop(rev, None)
    return _raw_nc(out)


def bidegree_of(a: NcPoly) -> Optional[BiDegree]:
    """Common (x-degree, y-degree) of all words, None if they disagree.

    The zero polynomial reports (0, 0); use is_zero() to tell it apart.
    """
    if a.is_zero():
        return BiDegree(0, 0)
    degrees = {BiDegree(w.count("x"), w.count("y")) for w in a.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def tensor_bidegree_of(t: TensorPoly) -> Optional[BiDegree]:
    """Bidegree of a tensor, counting both legs together."""
    if t.is_zero():
        return BiDegree(0, 0)
    degrees = {BiDegree((s + u).count("x"), (s + u).count("y"))
               for (s, u) in t.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return None
