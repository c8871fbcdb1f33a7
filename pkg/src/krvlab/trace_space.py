"""The trace space tr = A/[A, A]: Q-combinations of cyclic words.

A cyclic word is stored by its canonical representative, the
lexicographically least rotation (Booth's algorithm).  tr maps a word to its
rotation class; the class of the empty word, tr(1), is kept in the space.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional, Union

from .free_assoc import (BiDegree, InhomogeneousError, NcPoly, Scalar, _coeff,
                         _check_gen, _check_word, _raw_nc, word_key)
from .render import format_terms


def least_rotation(word: str) -> int:
    """Index of the lexicographically least rotation (Booth, O(n))."""
    n = len(word)
    if n == 0:
        return 0
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = word[j % n]
        i = f[j - k - 1]
        while i != -1 and sj != word[(k + i + 1) % n]:
            if sj < word[(k + i + 1) % n]:
                k = j - i - 1
            i = f[i]
        if sj != word[(k + i + 1) % n]:
            if sj < word[k % n]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def canonical_rotation(word: str) -> str:
    _check_word(word)
    if not word:
        return word
    k = least_rotation(word) % len(word)
    return word[k:] + word[:k]


class TracePoly:
    """Q-combination of cyclic words, keyed by canonical representatives."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        clean: dict[str, Fraction] = {}
        if terms:
            for word, value in terms.items():
                q = _coeff(value)
                if not q:
                    continue
                rep = canonical_rotation(word)
                w = clean.get(rep, Fraction(0)) + q
                if w:
                    clean[rep] = w
                else:
                    clean.pop(rep, None)
        self.terms = clean

    @classmethod
    def zero(cls) -> "TracePoly":
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, word: str) -> Fraction:
        return self.terms.get(canonical_rotation(word), Fraction(0))

    def sorted_terms(self) -> list[tuple[str, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, TracePoly) and self.terms == other.terms

    def __add__(self, other: "TracePoly") -> "TracePoly":
        if not isinstance(other, TracePoly):
            return NotImplemented
        out = dict(self.terms)
        for word, v in other.terms.items():
            w = out.get(word, Fraction(0)) + v
            if w:
                out[word] = w
            else:
                out.pop(word, None)
        return _raw_trace(out)

    def __sub__(self, other: "TracePoly") -> "TracePoly":
        return self + (-other)

    def __neg__(self) -> "TracePoly":
        return _raw_trace({w: -v for w, v in self.terms.items()})

    def scale(self, value: Scalar) -> "TracePoly":
        q = _coeff(value)
        if not q:
            return TracePoly()
        return _raw_trace({w: v * q for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_terms([(v, f"tr({w or '1'})") for w, v in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"TracePoly({self})"


def _raw_trace(terms: dict[str, Fraction]) -> TracePoly:
    t = TracePoly.__new__(TracePoly)
    t.terms = terms
    return t


def tr(a: NcPoly) -> TracePoly:
    """Project A onto the trace space (words up to rotation)."""
    return TracePoly(dict(a.terms))


def from_pair(a: NcPoly, b: NcPoly) -> TracePoly:
    """Image of a (x) b under A (x) A -> F(A), i.e. tr(ab)."""
    return tr(a * b)


def partial_trace(f: TracePoly, gen: str) -> NcPoly:
    """d^{F(A)}_gen: mark an occurrence of `gen` and read its class cyclically.

    For a cyclic word w and each position i with w[i] == gen, contribute the
    word w[i+1:] + w[:i].  The multiset of reads does not depend on the
    chosen representative, so this is well defined on rotation classes.
    """
    _check_gen(gen)
    out: dict[str, Fraction] = {}
    for word, v in f.terms.items():
        for i, ch in enumerate(word):
            if ch == gen:
                read = word[i + 1:] + word[:i]
                w = out.get(read, Fraction(0)) + v
                if w:
                    out[read] = w
                else:
                    out.pop(read, None)
    return _raw_nc(out)


def trace_bidegree(f: TracePoly) -> Optional[BiDegree]:
    """Common bidegree of the classes, None if mixed, (0,0) for zero."""
    if f.is_zero():
        return BiDegree(0, 0)
    degrees = {BiDegree(w.count("x"), w.count("y")) for w in f.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def euler_trace_check(f: TracePoly) -> BiDegree:
    """Verify tr(d_gen(f) gen) = N_gen f for both generators.

    Returns the common bidegree.  Raises InhomogeneousError when f mixes
    bidegrees and ArithmeticError should the identity ever fail.
    """
    degree = trace_bidegree(f)
    if degree is None:
        raise InhomogeneousError("euler_trace_check needs a bihomogeneous input")
    for gen, count in (("x", degree.deg_x), ("y", degree.deg_y)):
        recovered = tr(partial_trace(f, gen) * NcPoly.gen(gen))
        if recovered != f.scale(count):
            raise ArithmeticError(
                f"trace Euler identity failed for {gen} on {f}")
    return degree


@lru_cache(maxsize=None)
def cyclic_words(deg_x: int, deg_y: int) -> tuple[str, ...]:
    """All rotation classes of bidegree (deg_x, deg_y), canonical and sorted."""
    if deg_x < 0 or deg_y < 0:
        raise ValueError("degrees must be nonnegative")
    n = deg_x + deg_y
    classes = set()
    for positions in combinations(range(n), deg_x):
        chars = ["y"] * n
        for p in positions:
            chars[p] = "x"
        classes.add(canonical_rotation("".join(chars)))
    return tuple(sorted(classes, key=word_key))
