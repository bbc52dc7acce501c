# domain/entities/word.py
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from domain.errors import AlphabetMismatch, DuplicateGenerator, UnknownGenerator, WordError

Run = Tuple[int, int]


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator names; a generator is referred to by its position"""
    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        seen = set()
        for name in names:
            if not isinstance(name, str) or not name:
                raise WordError(f"generator names must be nonempty strings, got {name!r}")
            if name in seen:
                raise DuplicateGenerator(name)
            seen.add(name)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownGenerator(name) from None

    def resolve(self, generator) -> int:
        """Position of a generator given by name or index"""
        if isinstance(generator, str):
            return self.index(generator)
        if isinstance(generator, int) and 0 <= generator < len(self.names):
            return generator
        raise UnknownGenerator(str(generator))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.names


def reduce_runs(runs: Iterable[Run]) -> Tuple[Run, ...]:
    """Free reduction in run form: merge equal neighbours, drop zero exponents"""
    stack: List[Run] = []
    for g, e in runs:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            merged = stack.pop()[1] + e
            if merged != 0:
                stack.append((g, merged))
        else:
            stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """Freely reduced word stored as runs (generator index, nonzero exponent)"""
    alphabet: Alphabet
    runs: Tuple[Run, ...] = ()

    def __post_init__(self):
        runs = tuple((int(g), int(e)) for g, e in self.runs)
        for g, _ in runs:
            if g < 0 or g >= len(self.alphabet):
                raise UnknownGenerator(str(g))
        object.__setattr__(self, "runs", reduce_runs(runs))

    @classmethod
    def empty(cls, alphabet: Alphabet) -> 'Word':
        return cls(alphabet, ())

    @classmethod
    def generator(cls, alphabet: Alphabet, name: str, exponent: int = 1) -> 'Word':
        return cls(alphabet, ((alphabet.index(name), exponent),))

    @classmethod
    def from_letters(cls, alphabet: Alphabet, letters: Iterable[Run]) -> 'Word':
        return cls(alphabet, tuple(letters))

    def letters(self) -> List[Run]:
        """Expansion into letters (g, +1) / (g, -1)"""
        out: List[Run] = []
        for g, e in self.runs:
            sign = 1 if e > 0 else -1
            out.extend([(g, sign)] * abs(e))
        return out

    @property
    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.runs)

    def is_empty(self) -> bool:
        return not self.runs

    def named_runs(self) -> List[Tuple[str, int]]:
        return [(self.alphabet.names[g], e) for g, e in self.runs]

    def _same_alphabet(self, other: 'Word') -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(self.alphabet.names, other.alphabet.names)

    def __mul__(self, other: 'Word') -> 'Word':
        self._same_alphabet(other)
        return Word(self.alphabet, self.runs + other.runs)

    def __invert__(self) -> 'Word':
        return Word(self.alphabet, tuple((g, -e) for g, e in reversed(self.runs)))

    def __pow__(self, k: int) -> 'Word':
        base = self if k >= 0 else ~self
        return Word(self.alphabet, base.runs * abs(k))

    def __str__(self) -> str:
        if not self.runs:
            return "1"
        return " ".join(name if e == 1 else f"{name}^{e}" for name, e in self.named_runs())

    def __repr__(self) -> str:
        return f"Word({self})"

