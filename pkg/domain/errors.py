# domain/errors.py
from typing import Optional, Sequence, Tuple


class GroupTheoryError(Exception):
    """Base class of every domain failure"""
    pass


# ===== GROUP CONSTRUCTION =====

class GroupConstructionError(GroupTheoryError):
    """A table or generating set does not describe a finite group"""
    pass


class InvalidTable(GroupConstructionError):
    def __init__(self, message: str, cell: Optional[Tuple[int, int]] = None):
        self.cell = cell
        super().__init__(message)


class NotLatinSquare(GroupConstructionError):
    def __init__(self, axis: str, index: int, repeated: int, cell: Tuple[int, int]):
        self.axis = axis
        self.index = index
        self.repeated = repeated
        self.cell = cell
        super().__init__(f"{axis} {index} repeats value {repeated} (first repeat at cell {cell})")


class NotAssociative(GroupConstructionError):
    def __init__(self, triple: Tuple[int, int, int], left: int, right: int):
        self.triple = triple
        self.left = left
        self.right = right
        a, b, c = triple
        super().__init__(f"({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")


class NoIdentity(GroupConstructionError):
    def __init__(self, order: int):
        super().__init__(f"no two-sided identity among {order} elements")


class NoInverse(GroupConstructionError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class DegreeMismatch(GroupConstructionError):
    def __init__(self, expected: int, found: int, position: int):
        self.expected = expected
        self.found = found
        self.position = position
        super().__init__(f"generator {position} has degree {found}, expected {expected}")


class ClosureTooLarge(GroupConstructionError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"closure exceeds the configured cap of {cap} elements")


class InvalidPermutation(GroupConstructionError):
    def __init__(self, images: Sequence[int], reason: str):
        self.images = tuple(images)
        super().__init__(f"{list(images)} is not a permutation: {reason}")


class InvalidAction(GroupConstructionError):
    """Semidirect product data does not define a homomorphism into Aut(N)"""
    pass


class OrderCapExceeded(GroupTheoryError):
    def __init__(self, order: int, cap: int, operation: str):
        self.order = order
        self.cap = cap
        super().__init__(f"{operation}: order {order} exceeds cap {cap}")


# ===== PRECONDITIONS OF LEMMA CHECKS =====

class NotNormal(GroupTheoryError):
    def __init__(self, members: Sequence[int], conjugator: int, element: int):
        self.members = tuple(members)
        self.conjugator = conjugator
        self.element = element
        super().__init__(
            f"subgroup {list(members)} is not normal: conjugating {element} by {conjugator} leaves it"
        )


class TrivialSubgroup(GroupTheoryError):
    def __init__(self, operation: str):
        super().__init__(f"{operation} needs a nontrivial subgroup")


class NotConjugateGenerator(GroupTheoryError):
    def __init__(self, element: int, missed: int):
        self.element = element
        self.missed = missed
        super().__init__(f"{element} is not a conjugate generator: {missed} is conjugate to none of its powers")


class QuotientNotCyclic(GroupTheoryError):
    def __init__(self, order: int):
        super().__init__(f"quotient of order {order} is not cyclic")


# ===== WORDS AND PRESENTATIONS =====

class WordError(GroupTheoryError):
    pass


class UnknownGenerator(WordError):
    def __init__(self, name: str, position: Optional[int] = None):
        self.name = name
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"unknown generator '{name}'{where}")


class DuplicateGenerator(WordError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"generator '{name}' is declared twice")


class AlphabetMismatch(WordError):
    def __init__(self, left: Sequence[str], right: Sequence[str]):
        super().__init__(f"alphabets differ: {list(left)} vs {list(right)}")


class EmptyWord(WordError):
    def __init__(self, operation: str):
        super().__init__(f"{operation} is undefined on the empty word")


class AlphabetArityError(WordError):
    def __init__(self, expected: int, found: int):
        super().__init__(f"expected an alphabet of {expected} generators, got {found}")


class ParseSyntaxError(GroupTheoryError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"syntax error at position {position}: {reason}")


class PresentationError(GroupTheoryError):
    pass


class ArityError(PresentationError):
    def __init__(self, generators: int, relators: int):
        super().__init__(
            f"expected 2 generators and 1 relator, got {generators} generators and {relators} relators"
        )


class TooManyRelators(PresentationError):
    def __init__(self, relators: int):
        super().__init__(f"one-relator analysis got {relators} relators")


class GroupFileError(GroupTheoryError):
    """A group file is unreadable or does not match the group-file schema"""
    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"{path}: {reason}")
