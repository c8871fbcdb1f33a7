import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krvlab.free_lie import LiePoly, ad_iter, bracket, lie_from_ncpoly
from krvlab.poly_model import (BivarPoly, NotAntisymmetricError,
                               NotDivisibleError, TrivarPoly, antisym_factor,
                               cond_i_space, cond_ii_residual, cond_table,
                               cond_table_json, even_solutions_dim,
                               joint_solutions_dim, kappa_poly, lie_from_poly,
                               model_dimension, poly_from_lie,
                               symmetric_monomial_count, vandermonde,
                               weight3_tree_dim)

X_VAR = BivarPoly.monomial(1, 0)
Y_VAR = BivarPoly.monomial(0, 1)


def floor_formula(j):
    return (j - 1) // 2 - (j - 1) // 3


def test_bivar_rendering():
    p = BivarPoly.monomial(3, 1, 2) - BivarPoly.monomial(0, 4)
    assert str(p) == "2*X^3*Y - Y^4"
    assert str(BivarPoly.zero()) == "0"


def test_compose_linear():
    p = BivarPoly.monomial(2, 0)  # X^2
    # substitute X -> X + Y
    q = p.compose_linear(1, 1, 0, 1)
    assert q == (BivarPoly.monomial(2, 0) + BivarPoly.monomial(1, 1, 2)
                 + BivarPoly.monomial(0, 2))


def test_kappa_kills_x_minus_y():
    assert kappa_poly(X_VAR - Y_VAR).is_zero()


def test_kappa_eigenvector_in_degree_three():
    (p,) = cond_i_space(3)
    assert kappa_poly(p) == p.scale(Fraction(3))
    assert str(p) == "-2*X^3 - 3*X^2*Y + 3*X*Y^2 + 2*Y^3"
    assert p.is_antisymmetric()


def test_lie_from_poly_example():
    got = lie_from_poly(X_VAR - Y_VAR)
    want = bracket(LiePoly.gen("x"), ad_iter("y", 1, LiePoly.gen("x"))).scale(
        Fraction(-2))
    assert got == want


def test_lie_from_poly_requires_antisymmetry():
    with pytest.raises(NotAntisymmetricError):
        lie_from_poly(X_VAR + Y_VAR)


@st.composite
def antisym_polys(draw):
    # homogeneous antisymmetric polynomials, one fixed total degree each
    d = draw(st.integers(1, 6))
    pairs = [(i, d - i) for i in range(d + 1) if i < d - i]
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(pairs),
                           max_size=len(pairs)))
    out = BivarPoly.zero()
    for (i, j), c in zip(pairs, coeffs):
        out = out + BivarPoly.monomial(i, j, c) - BivarPoly.monomial(j, i, c)
    return out


@given(antisym_polys())
@settings(max_examples=60)
def test_poly_lie_roundtrip(p):
    assert poly_from_lie(lie_from_poly(p)) == p


def test_poly_from_lie_of_generator_pair():
    l = bracket(ad_iter("y", 1, LiePoly.gen("x")),
                ad_iter("y", 2, LiePoly.gen("x")))
    p = poly_from_lie(l)
    assert p == (BivarPoly.monomial(1, 2, Fraction(1, 2))
                 - BivarPoly.monomial(2, 1, Fraction(1, 2)))


def test_cond_i_dimensions_match_tree_count():
    for d in range(1, 10):
        assert len(cond_i_space(d)) == weight3_tree_dim(d)


def test_weight3_tree_dim_matches_floor_formula():
    for m in range(0, 201):
        assert weight3_tree_dim(m) == max(0, floor_formula(m))


def test_even_rigidity():
    for d in range(2, 17, 2):
        assert even_solutions_dim(d) == 0
    with pytest.raises(ValueError):
        even_solutions_dim(3)


def test_joint_solutions_vanish_in_even_degree():
    for d in (4, 6, 8, 10):
        assert joint_solutions_dim(d) == 0


def test_model_dimension_routes_by_parity():
    assert model_dimension(3) == 1
    assert model_dimension(4) == 0
    assert model_dimension(9) == 2
    for d in range(3, 12):
        want = floor_formula(d) if d % 2 else 0
        assert model_dimension(d) == want


def test_cond_ii_residual_divisibility_guard():
    with pytest.raises(NotDivisibleError):
        cond_ii_residual(X_VAR)


def test_cond_ii_residual_on_even_antisymmetric_input():
    # P = XY(X^2 - Y^2); the combined numerator is divisible by XY but the
    # residual does not vanish, so P fails condition (ii)
    p = BivarPoly.monomial(3, 1) - BivarPoly.monomial(1, 3)
    residual = cond_ii_residual(p)
    assert not residual.is_zero()


def _const(c):
    return TrivarPoly({(0, 0, 0): Fraction(c)})


def test_vandermonde_division():
    v = vandermonde()
    assert antisym_factor(v) == _const(1)
    xyz = (TrivarPoly.variable(0) * TrivarPoly.variable(1)
           * TrivarPoly.variable(2))
    assert antisym_factor(v * xyz) == xyz


def test_antisym_factor_of_handmade_polynomial():
    x, y, z = (TrivarPoly.variable(k) for k in range(3))
    q = (x * x * y - x * y * y + y * y * z - y * z * z + z * z * x
         - z * x * x)
    assert q.is_totally_antisymmetric()
    assert antisym_factor(q) == _const(-1)


def test_antisym_factor_rejects_non_antisymmetric():
    x = TrivarPoly.variable(0)
    with pytest.raises(NotDivisibleError):
        antisym_factor(x * x)


def test_symmetric_monomial_count_matches_tree_dim():
    for m in range(0, 30):
        assert symmetric_monomial_count(m) == weight3_tree_dim(m)


def test_cond_table_shapes():
    rows = cond_table([3, 4, 5])
    assert [row["degree"] for row in rows] == [3, 4, 5]
    assert all(set(row) == {"degree", "dim_cond_i", "dim_joint"}
               for row in rows)
    payload = cond_table_json([3, 4])
    assert payload["schema"] == "krv-lab/1"
    json.dumps(payload)
