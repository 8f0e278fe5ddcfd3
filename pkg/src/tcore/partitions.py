"""Brute-force partition enumeration, hook numbers and t-core counts.

This is the ground truth the generating-function code is checked against, so
it deliberately works from Young diagrams rather than from any series.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

DEFAULT_BOUND = 60


class EnumerationBoundError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def column_length(self, j: int) -> int:
        """beta'_j: number of parts >= j (1-indexed column)."""
        return sum(1 for p in self.parts if p >= j)


def _conjugate(p: Partition) -> Partition:
    if not p.parts:
        return p
    return Partition(tuple(p.column_length(j) for j in range(1, p.parts[0] + 1)))


def enumerate_partitions(n: int, bound: int = DEFAULT_BOUND) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > bound:
        raise EnumerationBoundError(f"n={n} exceeds enumeration bound {bound}")
    return [Partition(parts) for parts in _partitions(n, n)]


def _partitions(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def hook_numbers(p: Partition) -> Counter:
    """Multiset of H_{i,j} = beta_i + beta'_j - i - j + 1 over all cells."""
    if not p.parts:
        return Counter()
    cols = [p.column_length(j) for j in range(1, p.parts[0] + 1)]
    hooks = Counter()
    for i, row in enumerate(p.parts, start=1):
        for j in range(1, row + 1):
            hooks[row + cols[j - 1] - i - j + 1] += 1
    return hooks


def is_t_core(p: Partition, t: int) -> bool:
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    return all(h % t for h in hook_numbers(p))


def a_t_bruteforce(n: int, t: int, bound: int = DEFAULT_BOUND) -> int:
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    return sum(1 for p in enumerate_partitions(n, bound) if is_t_core(p, t))


def core_counts(n: int, ts, bound: int = DEFAULT_BOUND) -> dict[int, int]:
    """a_t(n) for several t at once, sharing one hook computation per partition."""
    ts = list(ts)
    if any(t < 2 for t in ts):
        raise ValueError("every t must be >= 2")
    counts = dict.fromkeys(ts, 0)
    for p in enumerate_partitions(n, bound):
        hooks = list(hook_numbers(p))
        for t in ts:
            if all(h % t for h in hooks):
                counts[t] += 1
    return counts
