import pytest
from hypothesis import given, strategies as st

from p3ext.cyclo import NotInSubfield
from p3ext.expr import (
    BinOp,
    ExprSyntaxError,
    Neg,
    Num,
    Pow,
    Sym,
    UndefinedSymbol,
    element_from_text,
    evaluate,
    parse_element,
    to_text,
)

from conftest import tower

leaves = st.one_of(st.integers(0, 20).map(Num), st.sampled_from(["d", "z", "z7", "z21"]).map(Sym))
trees = st.recursive(
    leaves,
    lambda kids: st.one_of(
        kids.map(Neg),
        st.tuples(st.sampled_from("+-*"), kids, kids).map(lambda t: BinOp(*t)),
        st.tuples(kids, st.integers(-3, 4)).map(lambda t: Pow(*t)),
    ),
    max_leaves=8,
)


@given(trees)
def test_print_parse_round_trip(node):
    assert parse_element(to_text(node)) == node


@given(trees)
def test_text_evaluates_like_tree(node):
    t = tower("3,7")
    try:
        want = evaluate(node, t)
    except ZeroDivisionError:
        return
    assert evaluate(parse_element(to_text(node)), t) == want


def test_precedence():
    assert parse_element("-d^2") == Neg(Pow(Sym("d"), 2))
    assert parse_element("1 - d - z") == BinOp("-", BinOp("-", Num(1), Sym("d")), Sym("z"))
    assert parse_element("2*z^-1") == BinOp("*", Num(2), Pow(Sym("z"), -1))


def test_errors():
    with pytest.raises(ExprSyntaxError) as err:
        parse_element("d + + z")
    assert err.value.offset == 4
    with pytest.raises(ExprSyntaxError):
        parse_element("(d + z")
    with pytest.raises(UndefinedSymbol):
        parse_element("d + w")
    t = tower("3,7")
    with pytest.raises(UndefinedSymbol):
        element_from_text("z5", t)
    with pytest.raises(NotInSubfield):
        element_from_text("z7", t)


def test_known_values():
    t = tower("3,7")
    assert element_from_text("z7 + z7^-1", t, require_L=False) == t.delta
    assert element_from_text("z^3", t) == 1
