# infrastructure/parsers/presentation_parser.py
"""Presentation grammar: "< g1, g2, ... | w1, w2, ... >" with words per word_parser"""
from functools import lru_cache

import pyparsing as pp

from domain.entities.presentation import Presentation
from domain.entities.word import Alphabet
from infrastructure.parsers.word_parser import (
    identifier_expression,
    raise_syntax_error,
    to_word,
    word_expression,
)


@lru_cache(maxsize=None)
def presentation_expression() -> pp.ParserElement:
    generators = pp.Group(pp.Optional(pp.DelimitedList(identifier_expression())))
    relators = pp.Group(pp.Optional(pp.DelimitedList(word_expression())))
    return pp.Suppress("<") + generators + pp.Suppress("|") + relators + pp.Suppress(">")


def parse_presentation(text: str) -> Presentation:
    """Parse a presentation; duplicate generator names raise DuplicateGenerator"""
    try:
        generators, relators = presentation_expression().parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise_syntax_error(text, e)
    alphabet = Alphabet(tuple(symbol.name for symbol in generators))
    return Presentation(alphabet, tuple(to_word(node, alphabet) for node in relators))
