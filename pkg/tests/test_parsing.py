import pytest

from hopfforge import FreeAlgebra, ParseError
from hopfforge.parsing import parse_fraction


class TestPolyGrammar:
    def test_scalar_fraction(self, free_gx):
        p = free_gx.parse("-3/2")
        assert p.coeff(()) == -1.5

    def test_juxtaposition_with_star(self, free_gx):
        assert free_gx.parse("g*x*g") == free_gx.word("g", "x", "g")

    def test_one_is_empty_word(self, free_gx):
        assert free_gx.parse("1") == free_gx.one()

    def test_signs_and_parentheses(self, free_gx):
        assert free_gx.parse("-(g - x)") == free_gx.parse("x - g")
        assert free_gx.parse("2*(g + 1)*x") == free_gx.parse("2*g*x + 2*x")

    def test_unknown_generator_position(self, free_gx):
        with pytest.raises(ParseError) as e:
            free_gx.parse("g*q")
        assert e.value.line == 1
        assert e.value.column == 3

    def test_trailing_garbage_rejected(self, free_gx):
        with pytest.raises(ParseError):
            free_gx.parse("g x")

    def test_zero_denominator_rejected(self, free_gx):
        with pytest.raises(ParseError):
            free_gx.parse("1/0")


class TestTensorGrammar:
    def test_basic(self, free_gx):
        t = free_gx.parse_tensor("x (#) 1 + g (#) x")
        assert t == free_gx.parse("x").tensor(free_gx.one()) + \
            free_gx.parse("g").tensor(free_gx.parse("x"))

    def test_coefficients_and_signs(self, free_gx):
        t = free_gx.parse_tensor("-1/2*g*x (#) g + 3 (#) x")
        assert t.terms[(("g", "x"), ("g",))] == -0.5
        assert t.terms[((), ("x",))] == 3

    def test_missing_separator(self, free_gx):
        with pytest.raises(ParseError):
            free_gx.parse_tensor("g*x + 1")


class TestRoundTrip:
    CASES = [
        "0",
        "1",
        "-3/2",
        "g",
        "-g + x",
        "1 - g*x + 2/7*x*x*x",
        "5*g*g - x",
    ]

    @pytest.mark.parametrize("text", CASES)
    def test_poly_print_parse_print(self, free_gx, text):
        once = str(free_gx.parse(text))
        assert str(free_gx.parse(once)) == once

    TENSOR_CASES = [
        "0",
        "1 (#) 1",
        "x (#) 1 + g (#) x",
        "-1/2*g (#) x + 2*x*x (#) g*g",
    ]

    @pytest.mark.parametrize("text", TENSOR_CASES)
    def test_tensor_print_parse_print(self, free_gx, text):
        once = str(free_gx.parse_tensor(text))
        assert str(free_gx.parse_tensor(once)) == once

    def test_printing_is_deglex_sorted(self):
        alg = FreeAlgebra(["a", "b"])
        p = alg.parse("b*a + a + b*b*b + 1")
        assert str(p) == "1 + a + b*a + b*b*b"


def test_parse_fraction_strict():
    assert parse_fraction("-3/2") == -1.5
    with pytest.raises(ParseError):
        parse_fraction("3/2/1")
    with pytest.raises(ParseError):
        parse_fraction("x")
