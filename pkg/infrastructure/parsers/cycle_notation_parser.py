# infrastructure/parsers/cycle_notation_parser.py
"""Cycle notation: "(0 1 2)(3 4)", 0-based points, "()" for the identity"""
from functools import lru_cache
from typing import List, Optional, Tuple

import pyparsing as pp

from domain.entities.permutation import Permutation
from domain.errors import ParseSyntaxError
from infrastructure.parsers.word_parser import raise_syntax_error


@lru_cache(maxsize=None)
def cycle_expression() -> pp.ParserElement:
    point = pp.Regex(r"\d+").set_parse_action(lambda toks: int(toks[0]))
    cycle = pp.Group(pp.Suppress("(") + pp.ZeroOrMore(point) + pp.Suppress(")"))
    return pp.OneOrMore(cycle)


def parse_cycles(text: str) -> List[Tuple[int, ...]]:
    try:
        parsed = cycle_expression().parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise_syntax_error(text, e)
    return [tuple(cycle) for cycle in parsed if len(cycle) > 0]


def parse_permutation(text: str, degree: Optional[int] = None) -> Permutation:
    """Permutation of {0..degree-1}; degree defaults to the largest point + 1"""
    cycles = parse_cycles(text)
    largest = max((p for cycle in cycles for p in cycle), default=-1)
    if degree is None:
        degree = largest + 1
    elif largest >= degree:
        raise ParseSyntaxError(text, 0, f"point {largest} outside degree {degree}")
    return Permutation.from_cycles(cycles, degree)
