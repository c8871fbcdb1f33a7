"""The free Lie algebra L on x, y inside Q<x,y>, and the space F(L).

L is handled through the Lyndon basis: a Lyndon word maps to the bracketed
polynomial given by its standard factorization, and these embeddings are
triangular with respect to lexicographic order, which makes membership and
coordinate extraction a greedy elimination.  The Dynkin left-bracketing map
provides the independent membership oracle (D(a) = n a exactly on L_n).

F(L) = L (x) L / (symmetry, a (x) [b,c] - [a,b] (x) c) embeds into the trace
space via (a, b) -> tr(ab); Theta is the composite.  flspace_basis builds a
graded basis by rank-filtering Theta images of Lyndon pairs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .free_assoc import (BiDegree, InhomogeneousError, NcPoly, Scalar,
                         _coeff, _check_gen, bidegree_of, commutator,
                         word_key)
from .linalg import RowReducer
from .render import format_terms
from .trace_space import TracePoly, tr

DEGREE_CAP = 16


class DegreeCapError(ValueError):
    """Requested grading component lies beyond the supported total degree."""


class NotLieError(ValueError):
    """An element expected to lie in the free Lie algebra does not."""


def _check_cap(total: int) -> None:
    if total > DEGREE_CAP:
        raise DegreeCapError(
            f"total degree {total} exceeds the supported cap {DEGREE_CAP}")


def is_lyndon(word: str) -> bool:
    """A nonempty word strictly smaller than all its proper rotations."""
    n = len(word)
    if n == 0:
        return False
    return all(word < word[i:] + word[:i] for i in range(1, n))


@lru_cache(maxsize=None)
def lyndon_words(max_len: int) -> tuple[str, ...]:
    """All Lyndon words over x < y of length <= max_len, in lex order (Duval)."""
    if max_len < 1:
        return ()
    alphabet = "xy"
    out = []
    w = [0]
    while w:
        out.append("".join(alphabet[c] for c in w))
        w = [w[i % len(w)] for i in range(max_len)]
        while w and w[-1] == 1:
            w.pop()
        if w:
            w[-1] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def lyndon_words_bidegree(deg_x: int, deg_y: int) -> tuple[str, ...]:
    """Lyndon words with the given letter counts, in lex order."""
    if deg_x < 0 or deg_y < 0:
        raise ValueError("degrees must be nonnegative")
    n = deg_x + deg_y
    if n == 0:
        return ()
    _check_cap(n)
    return tuple(w for w in lyndon_words(n)
                 if len(w) == n and w.count("x") == deg_x)


def standard_factorization(word: str) -> tuple[str, str]:
    """Right standard factorization w = uv, v the lex-least proper suffix."""
    if len(word) < 2 or not is_lyndon(word):
        raise ValueError(f"{word!r} admits no standard factorization")
    v = min(word[i:] for i in range(1, len(word)))
    return word[: len(word) - len(v)], v


@lru_cache(maxsize=None)
def lyndon_bracket(word: str) -> NcPoly:
    """Embedding of the bracketed Lyndon word into Q<x,y>."""
    if not is_lyndon(word):
        raise ValueError(f"{word!r} is not a Lyndon word")
    if len(word) == 1:
        return NcPoly.gen(word)
    u, v = standard_factorization(word)
    return commutator(lyndon_bracket(u), lyndon_bracket(v))


@lru_cache(maxsize=None)
def bracket_string(word: str) -> str:
    """Nested-bracket rendering of a Lyndon word, e.g. xxy -> [x,[x,y]]."""
    if len(word) == 1:
        return word
    u, v = standard_factorization(word)
    return f"[{bracket_string(u)},{bracket_string(v)}]"


def _lie_coords(a: NcPoly) -> Optional[dict[str, Fraction]]:
    """Lyndon coordinates of a, or None when a is not in L.

    Greedy triangular elimination: the lex-least word of a nonzero Lie
    element is Lyndon and carries the coordinate of its bracketed basis
    vector.  Works across mixed degrees since brackets preserve length.
    """
    rest = dict(a.terms)
    coords: dict[str, Fraction] = {}
    while rest:
        word = min(rest, key=word_key)
        if not is_lyndon(word):
            return None
        coeff = rest.pop(word)
        coords[word] = coords.get(word, Fraction(0)) + coeff
        for w, v in lyndon_bracket(word).terms.items():
            if w == word:
                continue
            u = rest.get(w, Fraction(0)) - coeff * v
            if u:
                rest[w] = u
            else:
                rest.pop(w, None)
    return {w: v for w, v in coords.items() if v}


def is_lie_element(a: NcPoly) -> bool:
    return _lie_coords(a) is not None


class LiePoly:
    """Element of L: Lyndon coordinates plus its cached embedding.

    The embedding in Q<x,y> is the authoritative value; coordinates are a
    basis-dependent view of it.
    """

    __slots__ = ("coords", "_embedding")

    def __init__(self, coords: Optional[dict] = None):
        clean: dict[str, Fraction] = {}
        if coords:
            for word, value in coords.items():
                q = _coeff(value)
                if not q:
                    continue
                if not is_lyndon(word):
                    raise ValueError(f"{word!r} is not a Lyndon word")
                clean[word] = q
        self.coords = clean
        self._embedding: Optional[NcPoly] = None

    @classmethod
    def zero(cls) -> "LiePoly":
        return cls()

    @classmethod
    def gen(cls, gen: str) -> "LiePoly":
        return cls({_check_gen(gen): 1})

    @property
    def embedding(self) -> NcPoly:
        if self._embedding is None:
            total = NcPoly()
            for word, v in self.coords.items():
                total = total + lyndon_bracket(word).scale(v)
            self._embedding = total
        return self._embedding

    def is_zero(self) -> bool:
        return not self.coords

    def bidegree(self) -> Optional[BiDegree]:
        if self.is_zero():
            return BiDegree(0, 0)
        degrees = {BiDegree(w.count("x"), w.count("y")) for w in self.coords}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def sorted_coords(self) -> list[tuple[str, Fraction]]:
        return sorted(self.coords.items(), key=lambda kv: word_key(kv[0]))

    def key(self) -> tuple:
        return tuple(self.sorted_coords())

    def __hash__(self) -> int:
        return hash(self.key())

    def __eq__(self, other) -> bool:
        return isinstance(other, LiePoly) and self.coords == other.coords

    def __add__(self, other: "LiePoly") -> "LiePoly":
        if not isinstance(other, LiePoly):
            return NotImplemented
        out = dict(self.coords)
        for word, v in other.coords.items():
            w = out.get(word, Fraction(0)) + v
            if w:
                out[word] = w
            else:
                out.pop(word, None)
        return _raw_lie(out)

    def __sub__(self, other: "LiePoly") -> "LiePoly":
        return self + (-other)

    def __neg__(self) -> "LiePoly":
        return _raw_lie({w: -v for w, v in self.coords.items()})

    def scale(self, value: Scalar) -> "LiePoly":
        q = _coeff(value)
        if not q:
            return LiePoly()
        return _raw_lie({w: v * q for w, v in self.coords.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_terms([(v, bracket_string(w))
                             for w, v in self.sorted_coords()])

    def __repr__(self) -> str:
        return f"LiePoly({self})"


def _raw_lie(coords: dict[str, Fraction]) -> LiePoly:
    l = LiePoly.__new__(LiePoly)
    l.coords = coords
    l._embedding = None
    return l


def lie_from_ncpoly(a: NcPoly) -> LiePoly:
    """Coordinate view of a Lie element; raises NotLieError otherwise."""
    coords = _lie_coords(a)
    if coords is None:
        raise NotLieError(f"{a} is not an element of the free Lie algebra")
    return _raw_lie(coords)


def bracket(a: LiePoly, b: LiePoly) -> LiePoly:
    """Lie bracket, computed on embeddings and re-coordinatized."""
    return lie_from_ncpoly(commutator(a.embedding, b.embedding))


def dynkin_map(a: NcPoly) -> NcPoly:
    """Left-bracketing map D(w1...wn) = [[...[w1,w2],...],wn], word by word."""
    out = NcPoly()
    for word, v in a.terms.items():
        if not word:
            continue
        cur = NcPoly.gen(word[0])
        for ch in word[1:]:
            g = NcPoly.gen(ch)
            cur = cur * g - g * cur
        out = out + cur.scale(v)
    return out


def dynkin_project(a: NcPoly) -> Optional[LiePoly]:
    """Dynkin membership oracle: D(a) = n a exactly when a is in L_n.

    Returns the Lyndon coordinates on success and None otherwise.  The input
    must be homogeneous of a single total degree n >= 1.
    """
    if a.is_zero():
        return LiePoly.zero()
    lengths = {len(w) for w in a.terms}
    if len(lengths) != 1:
        raise InhomogeneousError(
            "dynkin_project needs a single total degree")
    n = lengths.pop()
    if n < 1:
        return None
    if dynkin_map(a) != a.scale(n):
        return None
    coords = _lie_coords(a)
    if coords is None:
        raise ArithmeticError(
            "Dynkin test passed but Lyndon extraction failed; this is a bug")
    return _raw_lie(coords)


def partial_lie(l: Union[LiePoly, NcPoly], gen: str) -> NcPoly:
    """d^L_gen = (id (x) epsilon) d^A_gen: keep words ending in `gen`, drop it."""
    _check_gen(gen)
    poly = l.embedding if isinstance(l, LiePoly) else l
    out: dict[str, Fraction] = {}
    for word, v in poly.terms.items():
        if word.endswith(gen):
            prefix = word[:-1]
            w = out.get(prefix, Fraction(0)) + v
            if w:
                out[prefix] = w
            else:
                out.pop(prefix, None)
    result = NcPoly()
    result.terms = out
    return result


def ad_iter(gen: str, k: int, seed: LiePoly) -> LiePoly:
    """ad_gen applied k times to seed, staying in L."""
    _check_gen(gen)
    cur = seed
    g = LiePoly.gen(gen)
    for _ in range(k):
        cur = bracket(g, cur)
    return cur


class FLElement:
    """Element of F(L), certified as a combination of Theta pairs.

    The trace-space value decides equality; the combination is kept for
    rendering and as the certificate that the element lies in the image of
    L (x) L.
    """

    __slots__ = ("value", "combo")

    def __init__(self, value: TracePoly,
                 combo: Sequence[tuple[Fraction, LiePoly, LiePoly]]):
        self.value = value
        self.combo = tuple(combo)

    @classmethod
    def zero(cls) -> "FLElement":
        return cls(TracePoly.zero(), ())

    @classmethod
    def from_trace_poly(cls, f: TracePoly) -> "FLElement":
        """Certify an arbitrary trace class by solving in the Theta span.

        Raises NotLieError when f is not in F(L) of its bidegree.
        """
        from .trace_space import trace_bidegree
        if f.is_zero():
            return cls.zero()
        degree = trace_bidegree(f)
        if degree is None:
            raise InhomogeneousError("certification needs a bihomogeneous class")
        basis = flspace_basis(degree.deg_x, degree.deg_y)
        combo = _solve_in_span(f, basis)
        if combo is None:
            raise NotLieError(f"{f} does not lie in F(L)")
        out = cls.zero()
        for coeff, el in zip(combo, basis):
            out = out + el.scale(coeff)
        return out

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def bidegree(self) -> Optional[BiDegree]:
        from .trace_space import trace_bidegree
        return trace_bidegree(self.value)

    def __eq__(self, other) -> bool:
        return isinstance(other, FLElement) and self.value == other.value

    def __add__(self, other: "FLElement") -> "FLElement":
        if not isinstance(other, FLElement):
            return NotImplemented
        return FLElement(self.value + other.value,
                         _merge_combo(self.combo + other.combo))

    def __sub__(self, other: "FLElement") -> "FLElement":
        return self + other.scale(-1)

    def __neg__(self) -> "FLElement":
        return self.scale(-1)

    def scale(self, value: Scalar) -> "FLElement":
        q = _coeff(value)
        if not q:
            return FLElement.zero()
        return FLElement(self.value.scale(q),
                         tuple((c * q, a, b) for c, a, b in self.combo))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_terms([(c, f"theta({a}; {b})") for c, a, b in self.combo])

    def __repr__(self) -> str:
        return f"FLElement({self})"


def _merge_combo(combo):
    folded: dict[tuple, tuple[Fraction, LiePoly, LiePoly]] = {}
    for coeff, a, b in combo:
        key = (a.key(), b.key())
        if key in folded:
            old, _, _ = folded[key]
            folded[key] = (old + coeff, a, b)
        else:
            folded[key] = (coeff, a, b)
    return tuple((c, a, b) for c, a, b in folded.values() if c)


def theta(a: LiePoly, b: LiePoly) -> FLElement:
    """Theta(a, b): the class of a (x) b in F(L), valued as tr(ab)."""
    return FLElement(tr(a.embedding * b.embedding), ((Fraction(1), a, b),))


def _solve_in_span(f: TracePoly, basis: Sequence[FLElement]):
    """Coefficients expressing f over basis values, or None."""
    from .linalg import RatMatrix, kernel_basis
    words = sorted({w for el in basis for w in el.value.terms}
                   | set(f.terms), key=word_key)
    index = {w: i for i, w in enumerate(words)}
    entries = {}
    for c, el in enumerate(basis):
        for w, v in el.value.terms.items():
            entries[(index[w], c)] = v
    for w, v in f.terms.items():
        entries[(index[w], len(basis))] = -v
    m = RatMatrix.from_entries(len(words), len(basis) + 1, entries)
    for vec in kernel_basis(m):
        if vec[-1]:
            scale = Fraction(1) / vec[-1]
            return [v * scale for v in vec[:-1]]
    return None


def _theta_pairs(deg_x: int, deg_y: int):
    """Deterministic spanning family of Lyndon pairs of total bidegree."""
    halves = []
    for ix in range(deg_x + 1):
        for jx in range(deg_y + 1):
            d1 = (ix, jx)
            d2 = (deg_x - ix, deg_y - jx)
            if sum(d1) < 1 or sum(d2) < 1:
                continue
            if d1 <= d2:
                halves.append((d1, d2))
    for d1, d2 in sorted(halves):
        left = lyndon_words_bidegree(*d1)
        right = lyndon_words_bidegree(*d2)
        for i, lw in enumerate(left):
            start = i if d1 == d2 else 0
            words = right[start:] if d1 == d2 else right
            for rw in words:
                yield LiePoly({lw: 1}), LiePoly({rw: 1})


@lru_cache(maxsize=None)
def flspace_basis(deg_x: int, deg_y: int) -> tuple[FLElement, ...]:
    """Basis of F(L)^(deg_x, deg_y): rank-filtered Theta images of pairs.

    Theta over all complementary Lyndon pairs spans the component; a greedy
    pass keeps each candidate that enlarges the rank of the value vectors
    inside the trace space.  Order of candidates is fixed, so the basis is
    deterministic.
    """
    if deg_x < 0 or deg_y < 0:
        raise ValueError("degrees must be nonnegative")
    total = deg_x + deg_y
    if total < 2:
        raise ValueError("F(L) components need total degree at least 2")
    _check_cap(total)
    reducer = RowReducer(sort_key=word_key)
    basis = []
    for a, b in _theta_pairs(deg_x, deg_y):
        el = theta(a, b)
        if el.is_zero():
            continue
        if reducer.add(dict(el.value.terms)):
            basis.append(el)
    return tuple(basis)


def flspace_dimension(deg_x: int, deg_y: int) -> int:
    return len(flspace_basis(deg_x, deg_y))
