import pytest

from domain.entities.word import Alphabet, Word
from domain.errors import DuplicateGenerator, InvalidPermutation, ParseSyntaxError, UnknownGenerator
from infrastructure.parsers import parse_cycles, parse_permutation, parse_presentation, parse_word

TU = Alphabet(("t", "u"))
T = Word.generator(TU, "t")
U = Word.generator(TU, "u")


class TestWordParser:
    def test_juxtaposition_and_powers(self):
        assert parse_word(TU, "t^2 u^-1") == T ** 2 * ~U
        assert parse_word(TU, "t t u") == T ** 2 * U
        assert parse_word(TU, "t^+3") == T ** 3

    def test_parenthesized_powers(self):
        assert parse_word(TU, "(t u)^-1") == ~U * ~T
        assert parse_word(TU, "((t)^2 u)^2") == T ** 2 * U * T ** 2 * U
        assert parse_word(TU, "(t u)^0").is_empty()

    def test_identity_and_reduction(self):
        assert parse_word(TU, "1").is_empty()
        assert parse_word(TU, "t 1 u") == T * U
        assert parse_word(TU, "t u u^-1 t^-1").is_empty()

    def test_unknown_generator_position(self):
        with pytest.raises(UnknownGenerator) as excinfo:
            parse_word(TU, "t x")
        assert excinfo.value.name == "x"
        assert excinfo.value.position == 2

    @pytest.mark.parametrize("text", ["", "   ", "t^", "(t u", "t ^ ^ 2", "t)"])
    def test_syntax_errors(self, text):
        with pytest.raises(ParseSyntaxError):
            parse_word(TU, text)


class TestPresentationParser:
    def test_generators_and_relators(self):
        P = parse_presentation("< t, u | t u t^-1 u^-2, (t u)^3 >")
        assert P.generators == ("t", "u")
        assert len(P.relators) == 2
        assert P.relators[1] == (T * U) ** 3

    def test_empty_parts(self):
        assert parse_presentation("< t, u | >").relators == ()
        assert parse_presentation("< | >").generators == ()

    def test_canonical_text(self):
        assert str(parse_presentation("<a,b|a^2,b^3>")) == "< a, b | a^2, b^3 >"
        assert str(parse_presentation("< a | >")) == "< a | >"

    def test_duplicate_generator(self):
        with pytest.raises(DuplicateGenerator):
            parse_presentation("< a, a | a >")

    def test_unknown_generator(self):
        with pytest.raises(UnknownGenerator):
            parse_presentation("< a, b | c >")

    @pytest.mark.parametrize("text", ["a, b | a", "< a, b a >", "< a, | a >", "< a | a > b"])
    def test_syntax_errors(self, text):
        with pytest.raises(ParseSyntaxError):
            parse_presentation(text)


class TestCycleNotationParser:
    def test_cycles(self):
        assert parse_cycles("(0 1 2)(3 4)") == [(0, 1, 2), (3, 4)]
        assert parse_cycles("()") == []

    def test_permutation(self):
        p = parse_permutation("(0 1)", 3)
        assert p.images == (1, 0, 2)
        assert parse_permutation("(0 2 1)").images == (2, 0, 1)
        assert parse_permutation("()", 4).is_identity()
        assert str(parse_permutation("(3 1)(0 2)")) == "(0 2)(1 3)"

    def test_point_outside_degree(self):
        with pytest.raises(ParseSyntaxError):
            parse_permutation("(0 3)", 3)

    def test_point_in_two_cycles(self):
        with pytest.raises(InvalidPermutation):
            parse_permutation("(0 1)(1 2)")

    @pytest.mark.parametrize("text", ["(0 1", "0 1", "(a b)", ""])
    def test_syntax_errors(self, text):
        with pytest.raises(ParseSyntaxError):
            parse_cycles(text)
