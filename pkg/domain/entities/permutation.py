# domain/entities/permutation.py
from dataclasses import dataclass
from math import lcm
from typing import List, Sequence, Tuple

from domain.errors import InvalidPermutation


@dataclass(frozen=True)
class Permutation:
    """Bijection of {0, ..., n-1}; the image of i is images[i]"""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        seen = [False] * n
        for point in images:
            if point < 0 or point >= n:
                raise InvalidPermutation(images, f"image {point} outside 0..{n - 1}")
            if seen[point]:
                raise InvalidPermutation(images, f"image {point} appears twice")
            seen[point] = True

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> 'Permutation':
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> 'Permutation':
        images = list(range(degree))
        touched = set()
        for cycle in cycles:
            for point in cycle:
                if point < 0 or point >= degree:
                    raise InvalidPermutation(images, f"point {point} outside 0..{degree - 1}")
                if point in touched:
                    raise InvalidPermutation(images, f"point {point} appears in two cycles")
                touched.add(point)
            for k, point in enumerate(cycle):
                images[point] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(images))

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        # (p * q)(i) = p(q(i)): q acts first
        if self.degree != other.degree:
            raise InvalidPermutation(other.images, f"degree {other.degree} differs from {self.degree}")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> 'Permutation':
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point"""
        seen = set()
        result = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def to_cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.to_cycle_string()
