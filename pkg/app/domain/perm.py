"""Permutation domain model (input representation for group construction)."""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple


@dataclass(frozen=True)
class Perm:
    """A permutation of {0, ..., d-1}; images[i] is the image of point i."""
    images: Tuple[int, ...]

    def __post_init__(self):
        """Validate that images is a bijection."""
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"Images {list(images)} are not a permutation of 0..{len(images) - 1}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        """Build from disjoint cycles, e.g. Perm.from_cycles(4, (0, 1), (2, 3))."""
        images = list(range(degree))
        for cycle in cycles:
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    def then(self, other: "Perm") -> "Perm":
        """Apply self first, then other."""
        return Perm(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Perm":
        result = [0] * self.degree
        for i, j in enumerate(self.images):
            result[j] = i
        return Perm(tuple(result))

    def cycles(self) -> List[List[int]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        result = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = []
            point = start
            while point not in seen:
                seen.add(point)
                cycle.append(point)
                point = self.images[point]
            result.append(cycle)
        return result

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def to_list(self) -> List[int]:
        return list(self.images)

    @classmethod
    def from_list(cls, images: Iterable[int]) -> "Perm":
        return cls(tuple(images))
