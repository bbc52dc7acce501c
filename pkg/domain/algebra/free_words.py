# domain/algebra/free_words.py
"""Free-group word arithmetic on run-length words"""
from dataclasses import dataclass
from typing import Dict, List, Mapping, NamedTuple, Tuple, Union

from domain.entities.word import Alphabet, Word
from domain.errors import AlphabetArityError, AlphabetMismatch, EmptyWord

Generator = Union[str, int]


def multiply(w1: Word, w2: Word) -> Word:
    return w1 * w2


def invert(w: Word) -> Word:
    return ~w


def conjugate(w: Word, g: Word) -> Word:
    """g * w * g^-1"""
    return g * w * ~g


def power(w: Word, k: int) -> Word:
    return w ** k


def format_word(w: Word) -> str:
    """Canonical text: runs left to right, ``^k`` omitted when k = 1, ``1`` for the empty word"""
    return str(w)


def exponent_sum(w: Word, generator: Generator) -> int:
    index = w.alphabet.resolve(generator)
    return sum(e for g, e in w.runs if g == index)


def exponent_sums(w: Word) -> Tuple[int, ...]:
    sums = [0] * len(w.alphabet)
    for g, e in w.runs:
        sums[g] += e
    return tuple(sums)


def _inverse_letters(a: Tuple[int, int], b: Tuple[int, int]) -> bool:
    return a[0] == b[0] and (a[1] > 0) != (b[1] > 0)


def is_cyclically_reduced(w: Word) -> bool:
    return len(w.runs) < 2 or not _inverse_letters(w.runs[0], w.runs[-1])


class CyclicReduction(NamedTuple):
    core: Word
    conjugator: Word


def cyclic_reduce(w: Word) -> CyclicReduction:
    """w = conjugator * core * conjugator^-1 with core cyclically reduced"""
    runs = list(w.runs)
    peeled: List[Tuple[int, int]] = []
    while len(runs) >= 2 and _inverse_letters(runs[0], runs[-1]):
        (g, a), (_, b) = runs[0], runs[-1]
        k = min(abs(a), abs(b))
        sign_a = 1 if a > 0 else -1
        sign_b = 1 if b > 0 else -1
        peeled.append((g, sign_a * k))
        runs[0] = (g, a - sign_a * k)
        runs[-1] = (g, b - sign_b * k)
        runs = [run for run in runs if run[1] != 0]
    return CyclicReduction(Word(w.alphabet, tuple(runs)), Word(w.alphabet, tuple(peeled)))


class PowerDecomposition(NamedTuple):
    root: Word
    multiplicity: int


def is_proper_power(w: Word) -> PowerDecomposition:
    """w = root^m with m maximal; m = 1 when w is not a proper power.

    The period is found on the letters of the cyclically reduced core and
    the root is conjugated back.
    """
    if w.is_empty():
        raise EmptyWord("is_proper_power")
    core, conjugator = cyclic_reduce(w)
    letters = core.letters()
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and letters == letters[:d] * (n // d):
            root_core = Word.from_letters(w.alphabet, letters[:d])
            return PowerDecomposition(conjugate(root_core, conjugator), n // d)
    # unreachable: d = n always matches
    return PowerDecomposition(w, 1)


def apply_substitution(w: Word, images: Mapping[str, Word]) -> Word:
    """Image of w under the endomorphism sending each generator to ``images[name]``"""
    missing = [name for name in w.alphabet if name not in images]
    if missing:
        raise AlphabetMismatch(w.alphabet.names, tuple(images))
    targets = {image.alphabet for image in images.values()}
    if len(targets) > 1:
        first, second = list(targets)[:2]
        raise AlphabetMismatch(first.names, second.names)
    target = targets.pop() if targets else w.alphabet
    runs: List[Tuple[int, int]] = []
    for g, e in w.runs:
        image = images[w.alphabet.names[g]]
        runs.extend((image ** e).runs)
    return Word(target, tuple(runs))


@dataclass(frozen=True)
class NielsenMove:
    """Automorphism of a free group on its generators by position.

    ``transvection``: target -> target * source^exponent, others fixed.
    ``swap``: target and source exchanged.
    """
    kind: str
    target: int
    source: int
    exponent: int = 0

    @classmethod
    def transvection(cls, target: int, source: int, exponent: int) -> 'NielsenMove':
        if target == source or exponent == 0:
            raise ValueError("a transvection needs two generators and a nonzero exponent")
        return cls("transvection", target, source, exponent)

    @classmethod
    def swap(cls, target: int, source: int) -> 'NielsenMove':
        return cls("swap", target, source)

    def substitution(self, alphabet: Alphabet) -> Dict[str, Word]:
        images = {name: Word(alphabet, ((i, 1),)) for i, name in enumerate(alphabet)}
        t, s = alphabet.names[self.target], alphabet.names[self.source]
        if self.kind == "swap":
            images[t], images[s] = images[s], images[t]
        else:
            images[t] = Word(alphabet, ((self.target, 1), (self.source, self.exponent)))
        return images

    def apply(self, w: Word) -> Word:
        return apply_substitution(w, self.substitution(w.alphabet))

    def act_on_sums(self, sums: Tuple[int, ...]) -> Tuple[int, ...]:
        """Exponent sums after the move: a unimodular column operation"""
        out = list(sums)
        if self.kind == "swap":
            out[self.target], out[self.source] = sums[self.source], sums[self.target]
        else:
            out[self.source] += self.exponent * sums[self.target]
        return tuple(out)

    def elementary(self) -> List['NielsenMove']:
        """The same automorphism as a composite of +-1 moves"""
        if self.kind == "swap" or abs(self.exponent) == 1:
            return [self]
        step = 1 if self.exponent > 0 else -1
        return [NielsenMove.transvection(self.target, self.source, step)] * abs(self.exponent)

    def describe(self, alphabet: Alphabet) -> str:
        t, s = alphabet.names[self.target], alphabet.names[self.source]
        if self.kind == "swap":
            return f"swap {t}, {s}"
        image = Word(alphabet, ((self.target, 1), (self.source, self.exponent)))
        return f"{t} -> {image}"


class NielsenReduction(NamedTuple):
    moves: Tuple[NielsenMove, ...]
    result: Word
    zeroed: str


def replay_moves(w: Word, moves) -> Word:
    for move in moves:
        w = move.apply(w)
    return w


def nielsen_zero_exponent(w: Word) -> NielsenReduction:
    """Euclidean descent on (sum_t, sum_u) until one exponent sum vanishes.

    The larger-magnitude sum is reduced modulo the smaller one, with
    u -> u t^-k when |sum_t| >= |sum_u| and t -> t u^-k otherwise, so no
    swap is needed along the way. One final swap moves the zero onto t
    when the descent ends with sum_u = 0. The gcd of the two sums is
    preserved by every move.
    """
    if len(w.alphabet) != 2:
        raise AlphabetArityError(2, len(w.alphabet))
    p, q = exponent_sums(w)
    moves: List[NielsenMove] = []
    if q == 0 and p != 0:
        return NielsenReduction((), w, w.alphabet.names[1])
    while p != 0 and q != 0:
        if abs(p) >= abs(q):
            k = _remainder_quotient(p, q)
            moves.append(NielsenMove.transvection(1, 0, -k))
            p -= k * q
        else:
            k = _remainder_quotient(q, p)
            moves.append(NielsenMove.transvection(0, 1, -k))
            q -= k * p
    if p != 0:
        moves.append(NielsenMove.swap(0, 1))
    return NielsenReduction(tuple(moves), replay_moves(w, moves), w.alphabet.names[0])


def _remainder_quotient(a: int, b: int) -> int:
    """k with |a - k*b| == |a| % |b|"""
    return (abs(a) // abs(b)) * (1 if (a > 0) == (b > 0) else -1)
