"""Derivations of Q<x,y> given by generator images, and the map Phi_1.

A derivation is determined by u(x), u(y); its value on any polynomial is
recovered through the partial calculus: u(a) = d_x(a) diamond u(x) +
d_y(a) diamond u(y).  Phi_1 sends a trace class f to the symplectic
derivation u_f with u_f(x) = d^{F(A)}_y(f) and u_f(y) = -d^{F(A)}_x(f);
to_trace inverts it on homogeneous symplectic derivations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .free_assoc import (InhomogeneousError, NcPoly, commutator, diamond,
                         partial_assoc)
from .free_lie import FLElement, is_lie_element
from .trace_space import TracePoly, partial_trace, tr


class Derivation:
    """Derivation of the free associative algebra, stored by images.

    lie_valued records whether both images lie in the free Lie algebra, in
    which case the derivation restricts to one of L.
    """

    __slots__ = ("u_x", "u_y", "lie_valued")

    def __init__(self, u_x: NcPoly, u_y: NcPoly, lie_valued: bool):
        self.u_x = u_x
        self.u_y = u_y
        self.lie_valued = lie_valued

    @classmethod
    def from_images(cls, u_x: NcPoly, u_y: NcPoly) -> "Derivation":
        return cls(u_x, u_y, is_lie_element(u_x) and is_lie_element(u_y))

    @classmethod
    def zero(cls) -> "Derivation":
        return cls(NcPoly.zero(), NcPoly.zero(), True)

    def image(self, gen: str) -> NcPoly:
        return self.u_x if gen == "x" else self.u_y

    def is_zero(self) -> bool:
        return self.u_x.is_zero() and self.u_y.is_zero()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Derivation)
                and self.u_x == other.u_x and self.u_y == other.u_y)

    def __add__(self, other: "Derivation") -> "Derivation":
        if not isinstance(other, Derivation):
            return NotImplemented
        return Derivation(self.u_x + other.u_x, self.u_y + other.u_y,
                          self.lie_valued and other.lie_valued)

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + other.scale(-1)

    def __neg__(self) -> "Derivation":
        return self.scale(-1)

    def scale(self, value) -> "Derivation":
        return Derivation(self.u_x.scale(value), self.u_y.scale(value),
                          self.lie_valued)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"der(u(x) = {self.u_x}, u(y) = {self.u_y})"

    def __repr__(self) -> str:
        return f"Derivation({self})"


def apply(u: Derivation, a: NcPoly) -> NcPoly:
    """u(a) = d_x(a) diamond u(x) + d_y(a) diamond u(y), recomputed each call."""
    return (diamond(partial_assoc(a, "x"), u.u_x)
            + diamond(partial_assoc(a, "y"), u.u_y))


def from_trace(f: Union[TracePoly, FLElement]) -> Derivation:
    """Phi_1: trace classes to symplectic derivations.

    u_f(x) = d^{F(A)}_y(f), u_f(y) = -d^{F(A)}_x(f).  F(L) inputs give
    Lie-valued derivations; for plain trace classes the images are tested.
    """
    if isinstance(f, FLElement):
        value = f.value
        u_x = partial_trace(value, "y")
        u_y = -partial_trace(value, "x")
        return Derivation(u_x, u_y, True)
    u_x = partial_trace(f, "y")
    u_y = -partial_trace(f, "x")
    return Derivation.from_images(u_x, u_y)


def _homogeneous_degree(u: Derivation) -> int:
    """Common total degree of the nonzero images; raises when mixed."""
    degrees = set()
    for img in (u.u_x, u.u_y):
        degrees.update(len(w) for w in img.terms)
    if not degrees:
        raise ValueError("the zero derivation has no trace preimage degree")
    if len(degrees) != 1:
        raise InhomogeneousError("to_trace needs images of a single total degree")
    return degrees.pop()


def to_trace(u: Derivation) -> TracePoly:
    """Inverse of Phi_1 on homogeneous symplectic derivations.

    g = (1/N) tr(y u(x) - x u(y)) with N the total degree of u's preimage.
    Raises for the zero derivation and for mixed-degree images.
    """
    n = _homogeneous_degree(u) + 1
    value = tr(NcPoly.gen("y") * u.u_x) - tr(NcPoly.gen("x") * u.u_y)
    return value.scale(Fraction(1, n))


_OMEGA = commutator(NcPoly.gen("x"), NcPoly.gen("y"))


def is_symplectic(u: Derivation) -> bool:
    """Whether u kills the symplectic form [x, y]."""
    return apply(u, _OMEGA).is_zero()


def bracket_der(u: Derivation, v: Derivation) -> Derivation:
    """Commutator of derivations, via images [u,v](g) = u(v(g)) - v(u(g))."""
    return Derivation.from_images(
        apply(u, v.u_x) - apply(v, u.u_x),
        apply(u, v.u_y) - apply(v, u.u_y))


def act_on_trace(u: Derivation, f: TracePoly) -> TracePoly:
    """Natural action on the trace space: u.tr(a) = tr(u(a))."""
    out = TracePoly.zero()
    for word, coeff in f.terms.items():
        out = out + tr(apply(u, NcPoly.from_word(word))).scale(coeff)
    return out
