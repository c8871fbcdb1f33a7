"""Polynomial functional-equation model for the weight-3 components.

Lie elements of x-degree 2 correspond to antisymmetric polynomials P(X, Y)
through P = sum c_ij X^i Y^j <-> sum c_ij [ad_y^i(x), ad_y^j(x)].  Under
this dictionary the weight-3 tree space is the eigenspace kappa(P) = 3P of

    kappa(P) = P(X,Y) - P(-X-Y,Y) + P(-X-Y,X)

and the vanishing-divergence condition becomes the functional equation
(1/X) P(Y, X-Y) + (1/Y) P(X, Y-X) = 0.  Dimensions computed here
cross-check the divergence-kernel pipeline without sharing any code path.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Optional, Sequence

from .formats import SCHEMA
from .free_lie import LiePoly, bracket, ad_iter
from .linalg import RatMatrix, kernel_basis
from .render import format_terms


class NotAntisymmetricError(ValueError):
    """Input polynomial fails P(X, Y) = -P(Y, X)."""


class NotDivisibleError(ArithmeticError):
    """An exact polynomial quotient does not exist."""


def _coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


class BivarPoly:
    """Commutative polynomial in X, Y with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[dict] = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (i, j), value in coeffs.items():
                if i < 0 or j < 0:
                    raise ValueError("exponents must be nonnegative")
                q = _coeff(value)
                if q:
                    clean[(i, j)] = q
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1) -> "BivarPoly":
        return cls({(i, j): coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((i + j for i, j in self.coeffs), default=0)

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self.coeffs}) <= 1

    def is_antisymmetric(self) -> bool:
        for (i, j), v in self.coeffs.items():
            if self.coeffs.get((j, i), Fraction(0)) != -v:
                return False
        return True

    def __eq__(self, other) -> bool:
        return isinstance(other, BivarPoly) and self.coeffs == other.coeffs

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            w = out.get(key, Fraction(0)) + v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
        return _raw_bivar(out)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def __neg__(self) -> "BivarPoly":
        return _raw_bivar({k: -v for k, v in self.coeffs.items()})

    def scale(self, value) -> "BivarPoly":
        q = _coeff(value)
        if not q:
            return BivarPoly()
        return _raw_bivar({k: v * q for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, BivarPoly):
            out: dict[tuple[int, int], Fraction] = {}
            for (i1, j1), v1 in self.coeffs.items():
                for (i2, j2), v2 in other.coeffs.items():
                    key = (i1 + i2, j1 + j2)
                    w = out.get(key, Fraction(0)) + v1 * v2
                    if w:
                        out[key] = w
                    else:
                        out.pop(key, None)
            return _raw_bivar(out)
        return NotImplemented

    __rmul__ = __mul__

    def compose_linear(self, a, b, c, d) -> "BivarPoly":
        """P(aX + bY, cX + dY), expanded exactly."""
        out = BivarPoly()
        for (i, j), v in self.coeffs.items():
            term = _linear_power(a, b, i) * _linear_power(c, d, j)
            out = out + term.scale(v)
        return out

    def sorted_coeffs(self) -> list[tuple[tuple[int, int], Fraction]]:
        return sorted(self.coeffs.items(),
                      key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1], kv[0][0]))

    def __str__(self) -> str:
        pairs = []
        for (i, j), v in self.sorted_coeffs():
            parts = []
            if i:
                parts.append("X" if i == 1 else f"X^{i}")
            if j:
                parts.append("Y" if j == 1 else f"Y^{j}")
            pairs.append((v, "*".join(parts)))
        return format_terms(pairs)

    def __repr__(self) -> str:
        return f"BivarPoly({self})"


def _raw_bivar(coeffs: dict[tuple[int, int], Fraction]) -> BivarPoly:
    p = BivarPoly.__new__(BivarPoly)
    p.coeffs = coeffs
    return p


@lru_cache(maxsize=None)
def _linear_power_cached(a: Fraction, b: Fraction, n: int) -> tuple:
    return tuple(((k, n - k), comb(n, k) * a ** k * b ** (n - k))
                 for k in range(n + 1))


def _linear_power(a, b, n: int) -> BivarPoly:
    """(aX + bY)^n by the binomial theorem."""
    entries = _linear_power_cached(_coeff(a), _coeff(b), n)
    return BivarPoly({key: v for key, v in entries if v})


class TrivarPoly:
    """Commutative polynomial in x, y, z with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[dict] = None):
        clean: dict[tuple[int, int, int], Fraction] = {}
        if coeffs:
            for key, value in coeffs.items():
                if len(key) != 3 or any(e < 0 for e in key):
                    raise ValueError("exponent triples must be nonnegative")
                q = _coeff(value)
                if q:
                    clean[tuple(key)] = q
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "TrivarPoly":
        return cls()

    @classmethod
    def variable(cls, idx: int) -> "TrivarPoly":
        key = [0, 0, 0]
        key[idx] = 1
        return cls({tuple(key): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, TrivarPoly) and self.coeffs == other.coeffs

    def __add__(self, other: "TrivarPoly") -> "TrivarPoly":
        if not isinstance(other, TrivarPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            w = out.get(key, Fraction(0)) + v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
        return _raw_trivar(out)

    def __sub__(self, other: "TrivarPoly") -> "TrivarPoly":
        return self + (-other)

    def __neg__(self) -> "TrivarPoly":
        return _raw_trivar({k: -v for k, v in self.coeffs.items()})

    def scale(self, value) -> "TrivarPoly":
        q = _coeff(value)
        if not q:
            return TrivarPoly()
        return _raw_trivar({k: v * q for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, TrivarPoly):
            out: dict[tuple[int, int, int], Fraction] = {}
            for k1, v1 in self.coeffs.items():
                for k2, v2 in other.coeffs.items():
                    key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                    w = out.get(key, Fraction(0)) + v1 * v2
                    if w:
                        out[key] = w
                    else:
                        out.pop(key, None)
            return _raw_trivar(out)
        return NotImplemented

    __rmul__ = __mul__

    def substitute_var(self, idx: int, coeffs3: Sequence) -> "TrivarPoly":
        """Replace variable idx by a linear form in (x, y, z)."""
        lin = TrivarPoly({(1, 0, 0): coeffs3[0], (0, 1, 0): coeffs3[1],
                          (0, 0, 1): coeffs3[2]})
        out = TrivarPoly.zero()
        powers: dict[int, TrivarPoly] = {0: TrivarPoly({(0, 0, 0): 1})}

        def power(n: int) -> TrivarPoly:
            if n not in powers:
                powers[n] = power(n - 1) * lin
            return powers[n]

        for key, v in self.coeffs.items():
            rest = list(key)
            e = rest[idx]
            rest[idx] = 0
            base = TrivarPoly({tuple(rest): v})
            out = out + base * power(e)
        return out

    def is_totally_antisymmetric(self) -> bool:
        """Sign change under every transposition of the three variables."""
        for a, b in ((0, 1), (1, 2), (0, 2)):
            for key, v in self.coeffs.items():
                swapped = list(key)
                swapped[a], swapped[b] = swapped[b], swapped[a]
                if self.coeffs.get(tuple(swapped), Fraction(0)) != -v:
                    return False
        return True

    def sorted_coeffs(self):
        return sorted(self.coeffs.items(),
                      key=lambda kv: (sum(kv[0]), kv[0]))

    def __str__(self) -> str:
        names = ("x", "y", "z")
        pairs = []
        for key, v in self.sorted_coeffs():
            parts = []
            for name, e in zip(names, key):
                if e == 1:
                    parts.append(name)
                elif e > 1:
                    parts.append(f"{name}^{e}")
            pairs.append((v, "*".join(parts)))
        return format_terms(pairs)

    def __repr__(self) -> str:
        return f"TrivarPoly({self})"


def _raw_trivar(coeffs) -> TrivarPoly:
    p = TrivarPoly.__new__(TrivarPoly)
    p.coeffs = coeffs
    return p


def lie_from_poly(p: BivarPoly) -> LiePoly:
    """sum c_ij [ad_y^i(x), ad_y^j(x)] for P = sum c_ij X^i Y^j.

    Requires P antisymmetric; the map is then injective onto the Lie
    elements of x-degree 2.
    """
    if not p.is_antisymmetric():
        raise NotAntisymmetricError(f"{p} is not antisymmetric")
    x = LiePoly.gen("x")
    out = LiePoly.zero()
    for (i, j), v in p.sorted_coeffs():
        out = out + bracket(ad_iter("y", i, x), ad_iter("y", j, x)).scale(v)
    return out


def poly_from_lie(l: LiePoly) -> BivarPoly:
    """Antisymmetric P with lie_from_poly(P) = l, for x-degree-2 elements."""
    if l.is_zero():
        return BivarPoly.zero()
    degree = l.bidegree()
    if degree is None or degree.deg_x != 2:
        raise ValueError("poly_from_lie expects a bihomogeneous x-degree-2 element")
    m = degree.deg_y
    x = LiePoly.gen("x")
    pairs = [(i, j) for i in range(m + 1) for j in range(m + 1)
             if i < j and i + j == m]
    basis = [bracket(ad_iter("y", i, x), ad_iter("y", j, x)) for i, j in pairs]
    words = sorted({w for b in basis for w in b.embedding.terms}
                   | set(l.embedding.terms))
    index = {w: r for r, w in enumerate(words)}
    entries = {}
    for c, b in enumerate(basis):
        for w, v in b.embedding.terms.items():
            entries[(index[w], c)] = v
    for w, v in l.embedding.terms.items():
        entries[(index[w], len(basis))] = -v
    matrix = RatMatrix.from_entries(len(words), len(basis) + 1, entries)
    for vec in kernel_basis(matrix):
        if vec[-1]:
            scale = Fraction(1) / vec[-1]
            out = BivarPoly.zero()
            for coeff, (i, j) in zip(vec[:-1], pairs):
                c = coeff * scale / 2
                out = out + BivarPoly({(i, j): c, (j, i): -c})
            return out
    raise ValueError(f"{l} is not a combination of [ad_y^i(x), ad_y^j(x)]")


def kappa_poly(p: BivarPoly) -> BivarPoly:
    """kappa(P) = P(X,Y) - P(-X-Y,Y) + P(-X-Y,X)."""
    return (p
            - p.compose_linear(-1, -1, 0, 1)
            + p.compose_linear(-1, -1, 1, 0))


def _antisym_basis(d: int) -> list[tuple[int, int]]:
    return [(i, d - i) for i in range(d + 1) if i < d - i]


@lru_cache(maxsize=None)
def cond_i_space(d: int) -> tuple[BivarPoly, ...]:
    """Basis of degree-d antisymmetric solutions of kappa(P) = 3P.

    This eigenspace realizes the image of the weight-3 tree space under
    d_x, so its dimension matches dim F(L)^(3,d).
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    pairs = _antisym_basis(d)
    if not pairs:
        return ()
    monomials = [(i, d - i) for i in range(d + 1)]
    index = {m: r for r, m in enumerate(monomials)}
    entries = {}
    for c, (i, j) in enumerate(pairs):
        e = BivarPoly({(i, j): 1, (j, i): -1})
        residue = kappa_poly(e) - e.scale(3)
        for key, v in residue.coeffs.items():
            entries[(index[key], c)] = v
    matrix = RatMatrix.from_entries(len(monomials), len(pairs), entries)
    out = []
    for vec in kernel_basis(matrix):
        p = BivarPoly.zero()
        for coeff, (i, j) in zip(vec, pairs):
            p = p + BivarPoly({(i, j): coeff, (j, i): -coeff})
        out.append(p)
    return tuple(out)


def cond_ii_residual(p: BivarPoly) -> BivarPoly:
    """Cleared-denominator residual of (1/X) P(Y, X-Y) + (1/Y) P(X, Y-X).

    Computes Y P(Y, X-Y) + X P(X, Y-X) and divides by XY after checking
    exact divisibility; P satisfies the divergence condition exactly when
    the residual vanishes.
    """
    first = p.compose_linear(0, 1, 1, -1) * BivarPoly.monomial(0, 1)
    second = p.compose_linear(1, 0, -1, 1) * BivarPoly.monomial(1, 0)
    numerator = first + second
    for (i, j) in numerator.coeffs:
        if i < 1 or j < 1:
            raise NotDivisibleError(
                "numerator is not divisible by XY; "
                "the input is outside the even antisymmetric domain")
    return _raw_bivar({(i - 1, j - 1): v
                       for (i, j), v in numerator.coeffs.items()})


def joint_solutions_dim(d: int) -> int:
    """dim of cond_i_space(d) cut by the vanishing of cond_ii_residual."""
    basis = cond_i_space(d)
    if not basis:
        return 0
    residuals = [cond_ii_residual(p) for p in basis]
    monomials = sorted({key for r in residuals for key in r.coeffs})
    index = {m: r for r, m in enumerate(monomials)}
    entries = {}
    for c, r in enumerate(residuals):
        for key, v in r.coeffs.items():
            entries[(index[key], c)] = v
    matrix = RatMatrix.from_entries(len(monomials), len(basis), entries)
    return len(kernel_basis(matrix))


def even_solutions_dim(d: int) -> int:
    """Joint solutions of conditions (-1)...(2) in even degree d.

    Homogeneous polynomials of even degree are automatically even, so this
    is the kernel of the residual map on cond_i_space(d).  The expected
    value is 0: even solutions are rigid.
    """
    if d % 2 != 0:
        raise ValueError("evenness forces an even degree")
    if d < 2:
        raise ValueError("degree must be at least 2")
    return joint_solutions_dim(d)


def weight3_tree_dim(m: int) -> int:
    """Number of weight-3 trees of y-degree m: solutions of 2a + 3b = m - 3.

    Asserts agreement with the closed form floor((m-1)/2) - floor((m-1)/3).
    """
    if m < 0:
        raise ValueError("y-degree must be nonnegative")
    count = 0
    if m >= 3:
        target = m - 3
        count = sum(1 for b in range(target // 3 + 1)
                    if (target - 3 * b) % 2 == 0)
    closed = (m - 1) // 2 - (m - 1) // 3
    if count != closed:
        raise AssertionError(
            f"tree count {count} disagrees with the floor formula {closed}")
    return count


def model_dimension(d: int) -> int:
    """Polynomial-model prediction for dim krv^(3,d).

    Odd d: condition (i) alone (divergence vanishes for parity reasons).
    Even d: conditions (i) and (ii) jointly.
    """
    if d % 2 == 1:
        return len(cond_i_space(d))
    return joint_solutions_dim(d)


def _divide_linear_diff(q: TrivarPoly, a: int, b: int) -> TrivarPoly:
    """Exact quotient by (v_a - v_b); NotDivisibleError when none exists."""
    # Change coordinates u = v_a - v_b (so v_a = u + v_b): divisibility by
    # the difference becomes divisibility by the single variable u.
    forward = [0, 0, 0]
    forward[a] = 1
    forward[b] = 1
    shifted = q.substitute_var(a, forward)
    quotient: dict[tuple[int, int, int], Fraction] = {}
    for key, v in shifted.coeffs.items():
        if key[a] < 1:
            raise NotDivisibleError(
                f"polynomial is not divisible by the variable difference")
        new = list(key)
        new[a] -= 1
        quotient[tuple(new)] = v
    backward = [0, 0, 0]
    backward[a] = 1
    backward[b] = -1
    return _raw_trivar(quotient).substitute_var(a, backward)


def vandermonde() -> TrivarPoly:
    """(x - y)(y - z)(z - x)."""
    x, y, z = (TrivarPoly.variable(i) for i in range(3))
    return (x - y) * (y - z) * (z - x)


def antisym_factor(q: TrivarPoly) -> TrivarPoly:
    """Divide a totally antisymmetric q by the Vandermonde factor.

    Returns the symmetric quotient; raises NotDivisibleError when the
    division fails, which signals a non-antisymmetric input slipped through.
    """
    out = _divide_linear_diff(q, 0, 1)          # (x - y)
    out = _divide_linear_diff(out, 1, 2)        # (y - z)
    return _divide_linear_diff(out, 2, 0)       # (z - x)


def symmetric_monomial_count(m: int) -> int:
    """Monomials (xy + xz + yz)^a (xyz)^b of degree m - 3, counted directly."""
    if m < 3:
        return 0
    return sum(1 for b in range((m - 3) // 3 + 1)
               if (m - 3 - 3 * b) % 2 == 0)


def cond_table(degrees: Iterable[int]) -> list[dict]:
    """Rows {degree, dim_cond_i, dim_joint} for the requested degrees."""
    rows = []
    for d in degrees:
        rows.append({
            "degree": d,
            "dim_cond_i": len(cond_i_space(d)),
            "dim_joint": model_dimension(d),
        })
    return rows


def cond_table_json(degrees: Iterable[int]) -> dict:
    return {"schema": SCHEMA, "kind": "poly-model", "rows": cond_table(degrees)}
