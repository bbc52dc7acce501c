# infrastructure/parsers/__init__.py
from .cycle_notation_parser import parse_cycles, parse_permutation
from .presentation_parser import parse_presentation
from .word_parser import parse_word

__all__ = [
    "parse_cycles",
    "parse_permutation",
    "parse_presentation",
    "parse_word",
]
