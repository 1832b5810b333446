"""Integer partitions: Jordan types, cycle types, and the dominance order."""

from __future__ import annotations

from functools import lru_cache


class Partition:
    """A weakly decreasing tuple of positive integers; () is allowed."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = tuple(sorted((int(p) for p in parts), reverse=True))
        if ps and ps[-1] < 1:
            raise ValueError(f"partition parts must be positive: {parts}")
        self.parts = ps

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p >= k) for k in range(1, self.parts[0] + 1)
        )

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def to_json(self):
        return list(self.parts)


def dominance_leq(a: Partition, b: Partition) -> bool:
    """Partial-sum comparison: a <= b iff every prefix sum of a is <= that of b.

    Defined only between partitions of the same number; on Jordan types this
    realizes the closure order on unipotent classes (bigger = denser blocks).
    """
    if a.size != b.size:
        raise ValueError(f"dominance compares equal sizes, got {a.size} and {b.size}")
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a.parts[i] if i < len(a.parts) else 0
        sb += b.parts[i] if i < len(b.parts) else 0
        if sa > sb:
            return False
    return True


def is_symplectic_partition(p: Partition) -> bool:
    """True iff every odd part occurs with even multiplicity.

    These are exactly the Jordan types of unipotent elements of Sp_2n in odd
    characteristic.
    """
    return all(p.multiplicity(part) % 2 == 0 for part in set(p.parts) if part % 2 == 1)


@lru_cache(maxsize=None)
def _partitions_of(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(parts) for parts in _partitions_of(n, n)]
