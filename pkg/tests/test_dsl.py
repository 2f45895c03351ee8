import pytest
from hypothesis import given

from cubicat.dsl import format, parse
from cubicat.errors import ArityMismatch, DslSyntaxError
from cubicat.term import EMPTY, Compose, Gen, GeneratorKind, Tensor, identity

from .conftest import terms


def test_parse_compose():
    assert parse("cap ; cup") == Compose(Gen(GeneratorKind.CAP), Gen(GeneratorKind.CUP))


def test_parse_h_shape():
    t = parse("(lam # id) ; (id # y)")
    assert (t.dom, t.cod) == (2, 2)


def test_tensor_binds_tighter():
    assert parse("lam # id ; id # y") == parse("(lam # id) ; (id # y)")


def test_left_associative():
    assert parse("x ; x ; x") == Compose(parse("x ; x"), parse("x"))
    assert parse("id # id # id") == Tensor(parse("id # id"), parse("id"))


def test_composable_examples():
    assert (parse("cap ; x").dom, parse("cap ; x").cod) == (0, 2)
    assert (parse("cup ; cap").dom, parse("cup ; cap").cod) == (2, 2)


def test_arity_mismatch_names_subexpression():
    with pytest.raises(ArityMismatch) as exc:
        parse("cap ; (lam ; lam)")
    assert exc.value.expression == "lam ; lam"


def test_signed_splittings_and_powers():
    assert parse("lam+") == Gen(GeneratorKind.LAMBDA_PLUS)
    assert parse("lam-") == Gen(GeneratorKind.LAMBDA_MINUS)
    assert parse("id^3") == identity(3)
    assert parse("id^0") == EMPTY
    assert parse("empty") == EMPTY


def test_whitespace_insensitive():
    assert parse("(lam#id);(id#y)") == parse("  ( lam #  id )\n;\t( id # y ) ")


@pytest.mark.parametrize("text,pos", [
    ("cap ;", 5),
    ("cap cup", 4),
    ("(cap ; cup", 10),
    ("capx", 0),
    ("cap ; @", 6),
    ("", 0),
    (")", 0),
])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(DslSyntaxError) as exc:
        parse(text)
    assert exc.value.position == pos


def test_format_examples():
    assert format(Gen(GeneratorKind.CAP)) == "cap"
    assert format(parse("cap ; cup")) == "(cap ; cup)"
    assert format(parse("lam # id")) == "(lam # id)"


@pytest.mark.parametrize("text", [
    "cap ; cup", "(lam # id) ; (id # y)", "x ; x ; x", "lam+ ; (id # lam-)",
    "id^2 # cap ; id^4", "empty", "cap # empty ; cup",
])
def test_format_parse_round_trip_on_grammar_strings(text):
    t = parse(text)
    assert parse(format(t)) == t
    assert format(parse(format(t))) == format(t)


@given(terms())
def test_parse_format_round_trip(t):
    assert parse(format(t)) == t
