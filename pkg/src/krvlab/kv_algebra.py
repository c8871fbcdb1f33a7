"""Graded pieces of the elliptic Kashiwara-Vergne Lie algebra.

krv consists of the symplectic Lie-valued derivations with vanishing
divergence.  Through Phi_1 each bidegree component is the kernel of the
linear map F(L)^(i,j) -> tr, Gamma -> div(Phi_1(Gamma)), which lands in
bidegree (i-1, j-1); the kernel is computed exactly.  The relaxed variant
only requires the divergence to land in span{tr([x,y]^k)}.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .derivations import Derivation, act_on_trace, bracket_der, from_trace
from .formats import SCHEMA
from .free_assoc import NcPoly, commutator
from .free_lie import (DEGREE_CAP, DegreeCapError, FLElement, LiePoly,
                       NotLieError, _check_cap, ad_iter, flspace_basis,
                       is_lie_element, partial_lie, theta)
from .free_assoc import star, word_key
from .linalg import RatMatrix, kernel_basis
from .trace_space import TracePoly, partial_trace, tr


def divergence(u: Derivation) -> TracePoly:
    """div(u) = tr(d^L_x(u(x)) + d^L_y(u(y))); u must be Lie-valued."""
    if not u.lie_valued:
        raise NotLieError("divergence is defined for Lie-valued derivations")
    return tr(partial_lie(u.u_x, "x") + partial_lie(u.u_y, "y"))


def divergence_star(gamma: FLElement) -> TracePoly:
    """div(Phi_1(Gamma)) via the star formula tr(g - g*).

    g = d^L_x(d^{F(L)}_y(Gamma)); star reverses words with sign (-1)^length.
    """
    inner = partial_trace(gamma.value, "y")
    if not is_lie_element(inner):
        raise NotLieError("d_y of the input is not Lie; not an F(L) element?")
    g = partial_lie(inner, "x")
    return tr(g - star(g))


def delta(n2: int) -> FLElement:
    """The wheel-free generators delta_{2n} = Theta(x, ad_y^{2n}(x)).

    Only even subscripts occur: the odd Theta classes vanish by symmetry.
    """
    if n2 % 2 != 0:
        raise ValueError(f"delta is defined for even subscripts, got {n2}")
    if n2 < 2:
        raise ValueError(f"delta subscripts start at 2, got {n2}")
    _check_cap(n2 + 2)
    return theta(LiePoly.gen("x"), ad_iter("y", n2, LiePoly.gen("x")))


class KrvComponent:
    """Basis and dimension of krv^(i,j) (optionally the relaxed variant)."""

    __slots__ = ("i", "j", "basis", "relaxed")

    def __init__(self, i: int, j: int, basis: Sequence[FLElement],
                 relaxed: bool = False):
        self.i = i
        self.j = j
        self.basis = tuple(basis)
        self.relaxed = relaxed

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        kind = "relaxed krv" if self.relaxed else "krv"
        return f"<{kind}^({self.i},{self.j}) dim {self.dimension}>"


def _wheel_vector(k: int) -> TracePoly:
    """tr([x,y]^k), the allowed divergence value in relaxed mode."""
    power = NcPoly.one()
    omega = commutator(NcPoly.gen("x"), NcPoly.gen("y"))
    for _ in range(k):
        power = power * omega
    return tr(power)


@lru_cache(maxsize=None)
def krv_component(i: int, j: int, relaxed: bool = False) -> KrvComponent:
    """Kernel of div o Phi_1 on F(L)^(i,j), as a KrvComponent."""
    if i < 0 or j < 0:
        raise ValueError("bidegrees must be nonnegative")
    if i + j < 2:
        raise ValueError("krv components need total degree at least 2")
    _check_cap(i + j)
    basis = flspace_basis(i, j)
    if not basis:
        return KrvComponent(i, j, (), relaxed)

    divs = [divergence(from_trace(el)) for el in basis]
    extra: Optional[TracePoly] = None
    if relaxed and i == j:
        wheel = _wheel_vector(i - 1)
        if not wheel.is_zero():
            extra = wheel

    words = sorted({w for d in divs for w in d.terms}
                   | (set(extra.terms) if extra else set()), key=word_key)
    index = {w: r for r, w in enumerate(words)}
    cols = len(basis) + (1 if extra else 0)
    entries = {}
    for c, d in enumerate(divs):
        for w, v in d.terms.items():
            entries[(index[w], c)] = v
    if extra:
        for w, v in extra.terms.items():
            entries[(index[w], len(basis))] = v
    matrix = RatMatrix.from_entries(len(words), cols, entries)

    kernel = kernel_basis(matrix)
    out = []
    for vec in kernel:
        combo = FLElement.zero()
        for coeff, el in zip(vec[: len(basis)], basis):
            combo = combo + el.scale(coeff)
        if not combo.is_zero():
            out.append(combo)
    return KrvComponent(i, j, out, relaxed)


def cocycle_check(u: Derivation, v: Derivation) -> bool:
    """div([u,v]) = u.div(v) - v.div(u), the 1-cocycle property."""
    lhs = divergence(bracket_der(u, v))
    rhs = act_on_trace(u, divergence(v)) - act_on_trace(v, divergence(u))
    return lhs == rhs


def expected_dimension(weight: int, j: int) -> int:
    """Closed-form dimensions of krv^(2,j) and krv^(3,j)."""
    if weight == 2:
        return 1 if j % 2 == 0 else 0
    if weight == 3:
        if j % 2 == 0:
            return 0
        return (j - 1) // 2 - (j - 1) // 3
    raise ValueError("closed-form dimensions cover weights 2 and 3 only")


def component_json(comp: KrvComponent) -> dict:
    """JSON-ready description of a component."""
    return {
        "schema": SCHEMA,
        "i": comp.i,
        "j": comp.j,
        "dim": comp.dimension,
        "basis": [str(el.value) for el in comp.basis],
    }


def components_csv(comps: Iterable[KrvComponent]) -> str:
    """CSV dimension table with columns i, j, dim."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "j", "dim"])
    for comp in comps:
        writer.writerow([comp.i, comp.j, comp.dimension])
    return buf.getvalue()
