"""Integer partitions, hook statistics, and constrained enumeration.

A partition is stored as a sorted tuple of (part, multiplicity) pairs.  Hook
lengths are computed from the Young diagram in English notation: the hook of a
cell counts the cell itself, the cells to its right, and the cells below it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Iterator, Mapping


class ParseError(ValueError):
    """Partition text that does not follow the comma-separated format."""


class DomainError(ValueError):
    """An operation applied to input outside its domain."""


class NotInImageError(ValueError):
    """An inverse map applied to an object outside the forward image."""


@dataclass(frozen=True)
class Partition:
    """A partition of a nonnegative integer.

    ``items`` holds (part, multiplicity) pairs with parts strictly decreasing,
    so equal partitions always compare and hash equal.

    >>> Partition.from_parts([4, 4, 1]).weight
    9
    """

    items: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        return cls.from_counter(Counter(parts))

    @classmethod
    def from_counter(cls, counts: Mapping[int, int]) -> "Partition":
        items = []
        for v in sorted(counts, reverse=True):
            m = counts[v]
            if m == 0:
                continue
            if not isinstance(v, int) or v < 1 or m < 0:
                raise DomainError(f"invalid part {v} with multiplicity {m}")
            items.append((v, m))
        return cls(tuple(items))

    @cached_property
    def weight(self) -> int:
        return sum(v * m for v, m in self.items)

    @cached_property
    def _mult(self) -> dict[int, int]:
        return dict(self.items)

    def mult(self, v: int) -> int:
        """Multiplicity of the part value ``v``."""
        return self._mult.get(v, 0)

    def parts(self) -> list[int]:
        """All parts in decreasing order, repeated by multiplicity."""
        out = []
        for v, m in self.items:
            out.extend([v] * m)
        return out

    @property
    def num_parts(self) -> int:
        return sum(m for _, m in self.items)

    @property
    def max_part(self) -> int:
        return self.items[0][0] if self.items else 0

    def counter(self) -> Counter:
        return Counter(self._mult)

    def union(self, other: "Partition") -> "Partition":
        """Multiset union: multiplicities add."""
        c = self.counter()
        c.update(other.counter())
        return Partition.from_counter(c)

    def difference(self, other: "Partition") -> "Partition":
        """Multiset difference; raises if ``other`` is not contained in self."""
        c = self.counter()
        for v, m in other.items:
            if c.get(v, 0) < m:
                raise DomainError(f"cannot remove {v}^{m} from {self}")
            c[v] -= m
        return Partition.from_counter(c)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.items:
            return Partition()
        rows = self.parts()
        width = rows[0]
        col_heights = []
        for j in range(width):
            h = 0
            for r in rows:
                if r >= j + 1:
                    h += 1
                else:
                    break
            col_heights.append(h)
        return Partition.from_parts(col_heights)

    def hook_lengths(self) -> list[int]:
        """Hook lengths of every cell, in row-major order."""
        rows = self.parts()
        if not rows:
            return []
        width = rows[0]
        conj = [0] * width
        for r in rows:
            for j in range(r):
                conj[j] += 1
        out = []
        for i, r in enumerate(rows):
            for j in range(r):
                out.append(r - j + conj[j] - i - 1)
        return out

    def count_hooks(self, k: int) -> int:
        """Number of cells whose hook length equals ``k``."""
        if k < 1:
            raise DomainError("hook length must be positive")
        return sum(1 for h in self.hook_lengths() if h == k)

    def hook_profile(self) -> "HookProfile":
        return HookProfile.from_counter(Counter(self.hook_lengths()))

    def is_t_regular(self, t: int) -> bool:
        """True when no part is divisible by ``t``."""
        if t < 2:
            raise DomainError("regularity modulus must be at least 2")
        return all(v % t for v, _ in self.items)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.parts())


@dataclass(frozen=True)
class HookProfile:
    """Multiset of hook lengths: (length, cell count) pairs, ascending."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_counter(cls, counter: Mapping[int, int]) -> "HookProfile":
        return cls(tuple(sorted((h, c) for h, c in counter.items() if c)))

    def count(self, k: int) -> int:
        for h, c in self.counts:
            if h == k:
                return c
        return 0

    @property
    def total_cells(self) -> int:
        return sum(c for _, c in self.counts)


def enumerate_partitions(
    n: int,
    part_predicate: Callable[[int], bool] | None = None,
) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in decreasing-lexicographic order.

    ``part_predicate`` restricts which part values may appear.

    >>> [str(p) for p in enumerate_partitions(4, lambda v: v % 2)]
    ['3,1', '1,1,1,1']
    """
    if n < 0:
        raise DomainError("cannot partition a negative integer")
    for seq in _partition_sequences(n, part_predicate):
        yield Partition.from_parts(seq)


def _partition_sequences(n, pred):
    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for first in range(min(cap, rem), 0, -1):
            if pred is not None and not pred(first):
                continue
            for rest in rec(rem - first, first):
                yield (first,) + rest

    return rec(n, n)


@lru_cache(maxsize=None)
def b_t_k(t: int, k: int, n: int) -> int:
    """Total number of k-hooks over all t-regular partitions of n.

    Direct enumeration; intended as a small-n oracle.  For large n use
    :func:`hook_count_totals`.
    """
    if t < 2:
        raise DomainError("regularity modulus must be at least 2")
    total = 0
    for p in enumerate_partitions(n, lambda v: v % t != 0):
        total += p.count_hooks(k)
    return total


def hook_count_totals(t: int, k: int, n_max: int) -> list[int]:
    """Totals of k-hooks over t-regular partitions of each n <= n_max.

    Dynamic programming over blocks of equal parts, swept from the smallest
    allowed part value upward.  Each k-hook (k <= 3) is witnessed locally by
    the block containing its corner cell together with the next block below,
    so the state only needs the current weight, the distance to the last used
    value (saturated at 3), and whether that value was used once or more.

    This route shares no code with the enumeration in :func:`b_t_k`, which
    makes the two usable as independent cross-checks.
    """
    if t < 2:
        raise DomainError("regularity modulus must be at least 2")
    if k not in (1, 2, 3):
        raise DomainError("only hook lengths 1..3 are supported")
    # state: (weight, age, lastmult) -> [number of partitions, k-hook total]
    # age: 0 = no part used yet; 1/2 = last used value is v-1/v-2; 3 = older
    states = {(0, 0, 0): [1, 0]}
    for v in range(1, n_max + 1):
        nxt: dict[tuple[int, int, int], list[int]] = {}

        def bump(key, cnt, tot):
            slot = nxt.get(key)
            if slot is None:
                nxt[key] = [cnt, tot]
            else:
                slot[0] += cnt
                slot[1] += tot
        allowed = v % t != 0
        for (w, age, lm), (cnt, tot) in states.items():
            bump((w, 0 if age == 0 else min(age + 1, 3), lm), cnt, tot)
            if not allowed:
                continue
            bottom = age == 0
            d = v if bottom else age  # gap to the block below (3 means >= 3)
            m = 1
            while w + v * m <= n_max:
                if k == 1:
                    c = 1
                elif k == 2:
                    c = (1 if m >= 2 else 0) + (1 if d >= 2 else 0)
                else:
                    c = (
                        (1 if d >= 3 else 0)
                        + (1 if m >= 2 and d >= 2 else 0)
                        + (1 if d == 1 and not bottom and lm == 1 else 0)
                        + (1 if m >= 3 else 0)
                    )
                bump((w + v * m, 1, min(m, 2)), cnt, tot + cnt * c)
                m += 1
        states = nxt
    totals = [0] * (n_max + 1)
    for (w, _, _), (_, tot) in states.items():
        totals[w] += tot
    return totals
