# infrastructure/parsers/word_parser.py
"""Word grammar.

    word   := "1" | factor+
    factor := atom ("^" integer)?
    atom   := identifier | "1" | "(" word ")"

Juxtaposition (with whitespace between identifiers) is concatenation.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, List, Tuple, Union

import pyparsing as pp

from domain.entities.word import Alphabet, Word
from domain.errors import ParseSyntaxError, UnknownGenerator

IDENTIFIER = r"[A-Za-z_][A-Za-z0-9_]*"


@dataclass(frozen=True)
class Symbol:
    name: str
    position: int


@dataclass(frozen=True)
class Power:
    base: Any
    exponent: int


@dataclass(frozen=True)
class Product:
    factors: Tuple[Any, ...]


Node = Union[Symbol, Power, Product]


def identifier_expression() -> pp.ParserElement:
    return pp.Regex(IDENTIFIER).set_parse_action(lambda s, loc, toks: Symbol(toks[0], loc))


@lru_cache(maxsize=None)
def word_expression() -> pp.ParserElement:
    word = pp.Forward()
    identity = pp.Literal("1").set_parse_action(lambda: Product(()))
    atom = identifier_expression() | identity | (pp.Suppress("(") + word + pp.Suppress(")"))
    exponent = pp.Suppress("^") + pp.Regex(r"[+-]?\d+").set_parse_action(lambda toks: int(toks[0]))
    factor = (atom + pp.Optional(exponent)).set_parse_action(
        lambda toks: Power(toks[0], toks[1]) if len(toks) == 2 else toks[0]
    )
    word <<= pp.OneOrMore(factor).set_parse_action(lambda toks: Product(tuple(toks)))
    return word


def node_runs(node: Node, alphabet: Alphabet) -> List[Tuple[int, int]]:
    if isinstance(node, Symbol):
        try:
            return [(alphabet.index(node.name), 1)]
        except UnknownGenerator:
            raise UnknownGenerator(node.name, node.position) from None
    if isinstance(node, Power):
        if isinstance(node.base, Symbol):
            (g, _), = node_runs(node.base, alphabet)
            return [(g, node.exponent)]
        base = Word(alphabet, tuple(node_runs(node.base, alphabet)))
        return list((base ** node.exponent).runs)
    runs: List[Tuple[int, int]] = []
    for factor in node.factors:
        runs.extend(node_runs(factor, alphabet))
    return runs


def to_word(node: Node, alphabet: Alphabet) -> Word:
    return Word(alphabet, tuple(node_runs(node, alphabet)))


def raise_syntax_error(text: str, error: pp.ParseBaseException) -> None:
    raise ParseSyntaxError(text, error.loc, error.msg) from None


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse and freely reduce a word over ``alphabet``"""
    if not text.strip():
        raise ParseSyntaxError(text, 0, "empty word; write 1 for the identity")
    try:
        node = word_expression().parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise_syntax_error(text, e)
    return to_word(node, alphabet)
