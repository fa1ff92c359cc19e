"""Overpartitions with one overlined part, and the ten verification sets.

An OPO overpartition is an ordinary partition with exactly one occurrence of
one part overlined.  The text format writes parts in decreasing order,
comma separated, with ``~`` marking the overlined occurrence and an optional
``'`` suffix on that token marking a tagged copy used to count objects twice:

    11,~8',6,4,2,1,1,1,1

The ten named sets (A, A1, A2, Ahat3, Ahat4, B, C, D, E, F) partition the
coefficient counts of the six decomposition series.  Their defining
conditions depend on the parity of the regularity modulus t; the Ahat sets
exist only for even t and consist of tagged objects.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator

from .partitions import DomainError, ParseError, Partition
from .report import VerificationReport
from .series import DEFAULT_DEGREE, decomposition_term


@dataclass(frozen=True)
class OPOOverpartition:
    """A partition with exactly one overlined part occurrence.

    ``base`` includes the overlined occurrence; ``overlined`` names its value.
    """

    base: Partition
    overlined: int
    tagged: bool = False

    def __post_init__(self):
        if self.overlined < 1 or self.base.mult(self.overlined) < 1:
            raise DomainError(
                f"overlined part {self.overlined} does not occur in {self.base}"
            )

    @property
    def weight(self) -> int:
        return self.base.weight

    def f(self, v: int) -> int:
        """Multiplicity of the value ``v``, overlined occurrence included."""
        return self.base.mult(v)

    def nonoverlined_mult(self, v: int) -> int:
        return self.base.mult(v) - (1 if v == self.overlined else 0)

    def nonoverlined_items(self) -> list[tuple[int, int]]:
        out = []
        for v, m in self.base.items:
            if v == self.overlined:
                m -= 1
            if m:
                out.append((v, m))
        return out

    def __str__(self) -> str:
        tokens = []
        for v, m in self.base.items:
            if v == self.overlined:
                tokens.append(f"~{v}'" if self.tagged else f"~{v}")
                m -= 1
            tokens.extend([str(v)] * m)
        return ",".join(tokens)


def parse(text: str):
    """Parse the comma-separated text format.

    Returns a :class:`Partition` when nothing is overlined, otherwise an
    :class:`OPOOverpartition`.  Whitespace around tokens is ignored.
    """
    stripped = text.strip()
    if not stripped:
        return Partition()
    parts = []
    overlined = None
    tagged = False
    for raw in stripped.split(","):
        tok = raw.strip()
        if not tok:
            raise ParseError(f"empty entry in {text!r}")
        is_over = tok.startswith("~")
        if is_over:
            tok = tok[1:]
        is_tag = tok.endswith("'")
        if is_tag:
            tok = tok[:-1]
            if not is_over:
                raise ParseError("tag suffix ' is only allowed on the overlined part")
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"bad part {raw.strip()!r}") from None
        if v < 1:
            raise ParseError(f"parts must be positive, got {v}")
        if is_over:
            if overlined is not None:
                raise ParseError("at most one part may be overlined")
            overlined = v
            tagged = is_tag
        parts.append(v)
    base = Partition.from_parts(parts)
    if overlined is None:
        return base
    return OPOOverpartition(base, overlined, tagged)


def t_adic_factor(m: int, t: int) -> tuple[int, int]:
    """Write m = c * t**k with t not dividing c; returns (k, c)."""
    if m < 1:
        raise DomainError("t-adic factorization needs a positive integer")
    if t < 2:
        raise DomainError("the base t must be at least 2")
    k = 0
    while m % t == 0:
        m //= t
        k += 1
    return k, m


def g(m: int, t: int) -> int:
    """The padding weight (t+1)**k * c - m for m = c * t**k with t not dividing c.

    Zero exactly when t does not divide m.
    """
    k, c = t_adic_factor(m, t)
    return (t + 1) ** k * c - m


def enumerate_opo(
    n: int,
    overlined_predicate: Callable[[int], bool] | None = None,
    part_predicate: Callable[[int], bool] | None = None,
    tagged: bool = False,
) -> Iterator[OPOOverpartition]:
    """Yield OPO overpartitions of weight n.

    ``part_predicate`` constrains every part, the overlined one included;
    ``overlined_predicate`` adds a constraint on the overlined value only.
    Order: overlined value ascending, then the remaining parts in
    decreasing-lexicographic order.
    """
    from .partitions import enumerate_partitions

    for o in range(1, n + 1):
        if overlined_predicate is not None and not overlined_predicate(o):
            continue
        if part_predicate is not None and not part_predicate(o):
            continue
        for base in enumerate_partitions(n - o, part_predicate):
            full = base.union(Partition.from_parts([o]))
            yield OPOOverpartition(full, o, tagged)


class SetId(str, Enum):
    A = "A"
    A1 = "A1"
    A2 = "A2"
    AHAT3 = "Ahat3"
    AHAT4 = "Ahat4"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"


_TAGGED_IDS = frozenset({SetId.AHAT3, SetId.AHAT4})


def _check_regime(set_id: SetId, t: int) -> None:
    if t < 3:
        raise DomainError("the verification sets are defined for t >= 3")
    if t % 2 and set_id in _TAGGED_IDS:
        raise DomainError(f"{set_id.value} exists only for even t")


def _gsum_all(x: OPOOverpartition, t: int) -> int:
    """Sum of the padding weight over every part, overlined one included."""
    return sum(m * g(v, t) for v, m in x.base.items)


def set_membership(set_id: SetId, t: int, x: OPOOverpartition) -> bool:
    """Exact membership test for one of the ten sets."""
    _check_regime(set_id, t)
    if x.tagged != (set_id in _TAGGED_IDS):
        return False
    o = x.overlined
    nonov = x.nonoverlined_items()
    if set_id in (SetId.E, SetId.F):
        if set_id is SetId.E:
            return o in (2 * t + 1, 2 * t + 3) and all(
                v == 2 * t + 2 or v % (t + 1) for v, _ in nonov
            )
        return o in (2 * t - 1, 2 * t + 1) and all(
            v == 2 * t or v % t for v, _ in nonov
        )
    if t % 2:
        return _membership_odd(set_id, t, x, o, nonov)
    return _membership_even(set_id, t, x, o, nonov)


def _membership_odd(set_id, t, x, o, nonov):
    if set_id in (SetId.A, SetId.A1, SetId.A2):
        if o % 2 or any(v % (t + 1) == 0 for v, _ in x.base.items):
            return False
        if set_id is SetId.A:
            return True
        big = x.f(1) >= _gsum_all(x, t)
        return big if set_id is SetId.A1 else not big
    if set_id is SetId.B:
        return o % 2 == 0 and all(v % t for v, _ in x.base.items)
    if set_id is SetId.C:
        return (
            o % t == 0
            and (o // t) % 2 == 1
            and all(v % t for v, _ in nonov)
        )
    # SetId.D
    return (
        o % 2 == 0
        and o % (2 * t + 2) != 0
        and all(v % (t + 1) for v, _ in nonov)
    )


def _membership_even(set_id, t, x, o, nonov):
    if set_id in (SetId.A, SetId.A1, SetId.A2, SetId.AHAT3, SetId.AHAT4):
        if o % 2 or any(v % (t + 1) == 0 for v, _ in x.base.items):
            return False
        if set_id is SetId.A:
            return True
        k, c = t_adic_factor(o, t)
        if set_id in (SetId.A1, SetId.A2):
            bound = _gsum_all(x, t)
            if c % 2:
                bound -= c * (t + 1) ** (k - 1)
            big = x.f(1) >= bound
            return big if set_id is SetId.A1 else not big
        bound = _gsum_all(x, t) if c % 2 == 0 else g(o, t)
        big = x.f(1) >= bound
        return big if set_id is SetId.AHAT3 else not big
    if set_id is SetId.B:
        return (
            o % (t + 1) == 0
            and (o // (t + 1)) % 2 == 1
            and all(v % (t + 1) for v, _ in nonov)
        )
    if set_id is SetId.C:
        return o % 2 == 0 and all(v % t for v, _ in x.base.items)
    # SetId.D
    return o % 2 == 0 and o % (2 * t) != 0 and all(v % t for v, _ in nonov)


# ---------------------------------------------------------------------------
# enumeration and counting


def _overline_candidates(set_id: SetId, t: int, n: int) -> list[int]:
    if set_id is SetId.E:
        vals = [2 * t + 1, 2 * t + 3]
    elif set_id is SetId.F:
        vals = [2 * t - 1, 2 * t + 1]
    elif set_id in (SetId.A, SetId.A1, SetId.A2, SetId.AHAT3, SetId.AHAT4):
        vals = [o for o in range(2, n + 1, 2) if o % (t + 1)]
    elif t % 2:
        if set_id is SetId.B:
            vals = [o for o in range(2, n + 1, 2) if o % t]
        elif set_id is SetId.C:
            vals = [j * t for j in range(1, n // t + 1, 2)]
        else:  # D
            vals = [o for o in range(2, n + 1, 2) if o % (2 * t + 2)]
    else:
        if set_id is SetId.B:
            vals = [j * (t + 1) for j in range(1, n // (t + 1) + 1, 2)]
        elif set_id is SetId.C:
            vals = [o for o in range(2, n + 1, 2) if o % t]
        else:  # D
            vals = [o for o in range(2, n + 1, 2) if o % (2 * t)]
    return [o for o in vals if o <= n]


def _base_kind(set_id: SetId, t: int) -> tuple:
    if set_id is SetId.E:
        return ("or", 2 * t + 2, t + 1)
    if set_id is SetId.F:
        return ("or", 2 * t, t)
    if set_id in (SetId.A, SetId.A1, SetId.A2, SetId.AHAT3, SetId.AHAT4):
        return ("reg", t + 1)
    if t % 2:
        mod = t if set_id in (SetId.B, SetId.C) else t + 1
    else:
        mod = t + 1 if set_id is SetId.B else t
    return ("reg", mod)


def _kind_predicate(kind: tuple) -> Callable[[int], bool]:
    if kind[0] == "reg":
        mod = kind[1]
        return lambda v: v % mod != 0
    _, fixed, mod = kind
    return lambda v: v == fixed or v % mod != 0


@lru_cache(maxsize=None)
def _base_tuples(n: int, kind: tuple) -> tuple[tuple[int, ...], ...]:
    """All constrained partitions of n as part tuples, decreasing-lex order."""
    from .partitions import _partition_sequences

    return tuple(_partition_sequences(n, _kind_predicate(kind)))


@lru_cache(maxsize=None)
def _base_stats(n: int, kind: tuple, t: int) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Per-weight summary of the constrained bases.

    Returns (count, sorted multiplicities of 1, sorted values of
    f(1) - total padding weight); the two sorted vectors answer the threshold
    queries behind the subset splits without enumerating objects per query.
    """
    ones = []
    diffs = []
    for seq in _base_tuples(n, kind):
        f1 = 0
        gsum = 0
        for v in seq:
            if v == 1:
                f1 += 1
            elif v % t == 0:
                gsum += g(v, t)
        ones.append(f1)
        diffs.append(f1 - gsum)
    ones.sort()
    diffs.sort()
    return len(ones), tuple(ones), tuple(diffs)


def enumerate_set(set_id: SetId, t: int, n: int) -> list[OPOOverpartition]:
    """All members of the given set with weight n.

    Order: overlined value ascending, then decreasing-lexicographic base.
    """
    _check_regime(set_id, t)
    if n < 0:
        raise DomainError("weight must be nonnegative")
    kind = _base_kind(set_id, t)
    tagged = set_id in _TAGGED_IDS
    subset = set_id in (SetId.A1, SetId.A2, SetId.AHAT3, SetId.AHAT4)
    out = []
    for o in _overline_candidates(set_id, t, n):
        for seq in _base_tuples(n - o, kind):
            full = Partition.from_parts(seq + (o,))
            x = OPOOverpartition(full, o, tagged)
            if subset and not set_membership(set_id, t, x):
                continue
            out.append(x)
    return out


def set_cardinality(set_id: SetId, t: int, n: int) -> int:
    """|set| at weight n, computed from cached per-weight base summaries."""
    _check_regime(set_id, t)
    if n < 0:
        raise DomainError("weight must be nonnegative")
    kind = _base_kind(set_id, t)
    total = 0
    for o in _overline_candidates(set_id, t, n):
        count, ones, diffs = _base_stats(n - o, kind, t)
        if set_id in (SetId.A, SetId.B, SetId.C, SetId.D, SetId.E, SetId.F):
            total += count
            continue
        k, c = t_adic_factor(o, t)
        if t % 2:
            # odd t: split on f(1) >= total padding including the overlined part
            hits = count - bisect_left(diffs, g(o, t))
            total += hits if set_id is SetId.A1 else count - hits
            continue
        if set_id in (SetId.A1, SetId.A2):
            thr = g(o, t) - (c * (t + 1) ** (k - 1) if c % 2 else 0)
            hits = count - bisect_left(diffs, thr)
            total += hits if set_id is SetId.A1 else count - hits
        else:
            if c % 2:
                hits = count - bisect_left(ones, g(o, t))
            else:
                hits = count - bisect_left(diffs, g(o, t))
            total += hits if set_id is SetId.AHAT3 else count - hits
    return total


_SERIES_TERM = {
    SetId.A: "a",
    SetId.A1: "a",
    SetId.A2: "a",
    SetId.AHAT3: "a",
    SetId.AHAT4: "a",
    SetId.B: "b",
    SetId.C: "c",
    SetId.D: "d",
    SetId.E: "e",
    SetId.F: "f",
}

_SPLIT_PARTNER = {
    SetId.A1: SetId.A2,
    SetId.A2: SetId.A1,
    SetId.AHAT3: SetId.AHAT4,
    SetId.AHAT4: SetId.AHAT3,
}


def set_cardinality_vs_series(
    set_id: SetId, t: int, n_max: int = DEFAULT_DEGREE
) -> VerificationReport:
    """Check set cardinalities against the coefficients of the matching term.

    The subset pairs (A1, A2) and (Ahat3, Ahat4) have no individual closed
    form; for those the check is that the pair sums to the A coefficient.
    """
    _check_regime(set_id, t)
    partner = _SPLIT_PARTNER.get(set_id)
    series = decomposition_term(_SERIES_TERM[set_id], t, n_max)
    report = VerificationReport(
        kind="set-vs-series",
        params={"set": set_id.value, "t": t, "n_max": n_max,
                "term": _SERIES_TERM[set_id],
                "paired_with": partner.value if partner else None},
    )
    for n in range(n_max + 1):
        card = set_cardinality(set_id, t, n)
        if partner is not None:
            card += set_cardinality(partner, t, n)
        expected = series.coeff(n)
        report.checked += 1
        if card != expected:
            report.fail(n=n, cardinality=card, coefficient=expected)
    return report
