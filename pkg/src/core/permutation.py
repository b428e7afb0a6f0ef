"""
permutation.py

Permutations of {1, ..., n} stored as image tuples.

Composition convention: `p.then(q)` is the permutation "first p, then q",
i.e. i -> q(p(i)). A braid word ab has permutation pi(a).then(pi(b)), which
is the same as pi(b) o pi(a) in functional notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; images[i-1] is the image of i."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(v) for v in self.images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"Not a permutation of 1..{n}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, n: int) -> "Permutation":
        """The transposition (i i+1) on n points."""
        if not 1 <= i < n:
            raise ValueError(f"Transposition index {i} out of range for n={n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_cycle(cls, cycle: Sequence[int], n: int) -> "Permutation":
        """Permutation sending cycle[k] to cycle[k+1] (cyclically)."""
        images = list(range(1, n + 1))
        for k, a in enumerate(cycle):
            images[a - 1] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise KeyError(f"Point {i} out of range 1..{self.size}")
        return self.images[i - 1]

    def __len__(self) -> int:
        return self.size

    def then(self, other: "Permutation") -> "Permutation":
        """First self, then other: i -> other(self(i))."""
        if other.size != self.size:
            raise ValueError(
                f"Permutation sizes differ: {self.size} vs {other.size}"
            )
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def compose(self, other: "Permutation") -> "Permutation":
        """Functional composition self o other: i -> self(other(i))."""
        return other.then(self)

    def inverse(self) -> "Permutation":
        images = [0] * self.size
        for i, v in enumerate(self.images, start=1):
            images[v - 1] = i
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def cycle_of(self, start: int) -> Tuple[int, ...]:
        """The cycle through `start`, beginning with `start`."""
        cycle = [start]
        current = self(start)
        while current != start:
            cycle.append(current)
            current = self(current)
        return tuple(cycle)

    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles (fixed points included), each led by its minimum."""
        seen = set()
        result = []
        for i in range(1, self.size + 1):
            if i in seen:
                continue
            cycle = self.cycle_of(i)
            seen.update(cycle)
            result.append(cycle)
        return result

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.size else 1

    def preserves(self, points) -> bool:
        """True if the set `points` is mapped onto itself."""
        points = set(points)
        return {self(i) for i in points} == points

    def __str__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(a) for a in c) + ")" for c in moved)


def tau(n: int) -> Permutation:
    """The n-cycle (n n-1 ... 2 1): 1 -> n and i -> i-1 for i > 1."""
    return Permutation(tuple([n] + list(range(1, n))) if n else ())
