from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krvlab.expressions import (EvalError, ParseError, TypeMismatchError,
                                evaluate_source, parse, render_value,
                                values_equivalent)
from krvlab.free_assoc import NcPoly
from krvlab.trace_space import tr


def value_of(source):
    return evaluate_source(source)


@pytest.mark.parametrize("source,sort,rendered", [
    ("3/4", "scalar", "3/4"),
    ("x", "lie", "x"),
    ("x*y - y*x", "poly", "xy - yx"),
    ("[x,[x,y]]", "lie", "[x,[x,y]]"),
    ("[x,[y,x]]", "lie", "-[x,[x,y]]"),
    ("tr(x*y) + tr(y*x)", "trace", "2*tr(xy)"),
    ("theta(x; ad(y,2)(x))", "trace", "theta(x; [[x,y],y])"),
    ("delta(2)", "trace", "theta(x; [[x,y],y])"),
    ("x@y - y@x", "tensor", "x@y - y@x"),
    ("dA_x(x*y*x)", "tensor", "1@yx + xy@1"),
    ("dF_x(tr(x*y*x*y))", "poly", "2*yxy"),
    ("dL_x([x,y])", "poly", "-y"),
    ("div(theta(x; ad(y,2)(x)))", "trace", "0"),
    ("-x + 1/2*(x + x)", "lie", "0"),
    ("ad(x, 0)(y)", "lie", "y"),
    ("xy - yx", "poly", "xy - yx"),
])
def test_evaluation_table(source, sort, rendered):
    value = value_of(source)
    assert value.sort == sort
    assert render_value(value) == rendered


def test_scalar_promotion_in_sums():
    assert render_value(value_of("x*y + 5")) == "5 + xy"
    assert value_of("x + y").sort == "lie"
    assert value_of("x + x*y").sort == "poly"


def test_precedence():
    assert not values_equivalent(value_of("x + y*x"), value_of("(x + y)*x"))
    assert values_equivalent(value_of("1/2*(x+x)"), value_of("x"))
    # tensor binds tighter than product
    assert render_value(value_of("2*x@y")) == "2*x@y"


def test_unicode_aliases():
    got = value_of("2·tr(x*x*y*y) − 2·tr(x*y*x*y)")
    assert render_value(got) == "2*tr(xxyy) - 2*tr(xyxy)"
    assert value_of("x⊗y").sort == "tensor"


def test_div_composes_with_trace_classes():
    assert render_value(value_of("div(delta(4))")) == "0"
    v = value_of("div(theta(x; [x,y]) + theta(y; [x,y]))")
    assert v.sort == "trace"


@pytest.mark.parametrize("source,fragment", [
    ("x +", "unexpected end of input"),
    ("foo(x)", "unknown name 'foo'"),
    ("tr x", "expected '('"),
    ("x ) y", "unexpected ')'"),
    ("theta(x, y)", "expected ';'"),
    ("ad(x, y)(x)", "expected an integer"),
    ("", "empty expression"),
])
def test_parse_errors_carry_position(source, fragment):
    with pytest.raises(ParseError) as err:
        evaluate_source(source)
    assert fragment in str(err.value)
    assert "position" in str(err.value)


@pytest.mark.parametrize("source,expected,actual", [
    ("tr(x) + x", "trace", "lie"),
    ("div(x)", "trace", "lie"),
    ("x / y", "scalar divisor", "lie"),
    ("theta(tr(x); y)", "lie", "trace"),
])
def test_type_errors_name_both_sorts(source, expected, actual):
    with pytest.raises(TypeMismatchError) as err:
        evaluate_source(source)
    assert err.value.expected == expected
    assert err.value.actual == actual


def test_lie_coercion_failure_mentions_reason():
    with pytest.raises(TypeMismatchError) as err:
        evaluate_source("dL_x(x*y)")
    assert "not a Lie element" in str(err.value)


def test_eval_errors():
    with pytest.raises(EvalError, match="division by zero"):
        evaluate_source("x / 0")
    with pytest.raises(EvalError, match="even subscripts"):
        evaluate_source("delta(3)")
    with pytest.raises(EvalError, match="Lie-valued"):
        evaluate_source("div(tr(x*y*x*y))")


_ATOM_GROUPS = [
    ["x", "y", "[x,y]", "x*y", "2", "1/3"],            # poly-compatible
    ["tr(x*y)", "tr(x*x*y)", "theta(x; [x,y])", "delta(2)", "2"],  # trace
    ["x@y", "y@x", "dA_x(x*y)"],                       # tensor
]


@st.composite
def rendered_values(draw):
    kind = draw(st.integers(0, 3))
    if kind == 0:  # noncommutative polynomial
        terms = draw(st.lists(
            st.tuples(st.integers(-3, 3).filter(bool),
                      st.text("xy", min_size=1, max_size=4)),
            min_size=1, max_size=3))
        out = NcPoly.zero()
        for c, w in terms:
            out = out + NcPoly.from_word(w).scale(Fraction(c))
        return str(out)
    if kind == 1:  # trace class
        terms = draw(st.lists(
            st.tuples(st.integers(-3, 3).filter(bool),
                      st.text("xy", min_size=1, max_size=4)),
            min_size=1, max_size=3))
        out = tr(NcPoly.zero())
        for c, w in terms:
            out = out + tr(NcPoly.from_word(w)).scale(Fraction(c))
        return str(out)
    if kind == 2:  # scalar
        num = draw(st.integers(-20, 20))
        den = draw(st.integers(1, 9))
        return str(Fraction(num, den))
    group = draw(st.sampled_from(_ATOM_GROUPS))
    parts = draw(st.lists(st.sampled_from(group), min_size=1, max_size=2))
    return " + ".join(parts)


@given(rendered_values())
@settings(max_examples=120)
def test_parse_render_roundtrip(source):
    value = evaluate_source(source)
    rendered = render_value(value)
    again = evaluate_source(rendered)
    assert values_equivalent(value, again)
    assert render_value(again) == rendered


def test_whitespace_insensitive():
    assert values_equivalent(value_of("  [ x , y ]  "), value_of("[x,y]"))
    assert values_equivalent(value_of("tr( x * y )"), value_of("tr(x*y)"))


def test_parse_returns_tree_without_evaluating():
    tree = parse("delta(3)")  # syntactically fine, semantically invalid
    assert tree is not None
    with pytest.raises(EvalError):
        evaluate_source("delta(3)")
