"""Exact integer power series truncated at a fixed degree.

All generating-function identities in this package are checked coefficient by
coefficient with Python integers, never floats.  A series is a coefficient
tuple ``(c_0, ..., c_N)``; binary operations truncate to the smaller degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import DomainError, b_t_k, hook_count_totals
from .report import VerificationReport

DEFAULT_DEGREE = 120


@dataclass(frozen=True)
class TruncatedSeries:
    """A polynomial in q known modulo q^(N+1), with exact int coefficients."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, n: int) -> "TruncatedSeries":
        return cls((0,) * (n + 1))

    @classmethod
    def one(cls, n: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * n)

    @classmethod
    def monomial(cls, exp: int, n: int, coeff: int = 1) -> "TruncatedSeries":
        c = [0] * (n + 1)
        if 0 <= exp <= n:
            c[exp] = coeff
        return cls(tuple(c))

    def coeff(self, n: int) -> int:
        if n > self.degree:
            raise DomainError(f"coefficient {n} beyond truncation degree {self.degree}")
        return self.coeffs[n]

    def _pair(self, other):
        n = min(self.degree, other.degree)
        return self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b = self._pair(other)
        return TruncatedSeries(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b = self._pair(other)
        return TruncatedSeries(tuple(x - y for x, y in zip(a, b)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-x for x in self.coeffs))

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(c * x for x in self.coeffs))

    def shift(self, m: int) -> "TruncatedSeries":
        """Multiply by q^m, keeping the truncation degree."""
        if m < 0:
            raise DomainError("negative shifts are not defined")
        n = self.degree
        return TruncatedSeries((0,) * min(m, n + 1) + self.coeffs[: max(0, n + 1 - m)])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b = self._pair(other)
        n = len(a) - 1
        out = [0] * (n + 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b[: n + 1 - i]):
                if y:
                    out[i + j] += x * y
        return TruncatedSeries(tuple(out))

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be +-1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise DomainError("series inversion needs constant term +1 or -1")
        n = self.degree
        inv = [0] * (n + 1)
        inv[0] = c0
        for m in range(1, n + 1):
            s = sum(self.coeffs[j] * inv[m - j] for j in range(1, m + 1))
            inv[m] = -c0 * s
        return TruncatedSeries(tuple(inv))


def geometric(m: int, n: int) -> TruncatedSeries:
    """1 / (1 - q^m) to degree n."""
    if m < 1:
        raise DomainError("geometric step must be positive")
    return TruncatedSeries(tuple(1 if i % m == 0 else 0 for i in range(n + 1)))


@lru_cache(maxsize=None)
def pochhammer(a: int, step: int, n: int) -> TruncatedSeries:
    """Finite product of (1 - q^(a + j*step)) over exponents <= n."""
    if a < 1 or step < 1:
        raise DomainError("pochhammer start and step must be positive")
    out = TruncatedSeries.one(n)
    e = a
    while e <= n:
        out = out * (TruncatedSeries.one(n) - TruncatedSeries.monomial(e, n))
        e += step
    return out


@lru_cache(maxsize=None)
def regular_series(s: int, n: int) -> TruncatedSeries:
    """Generating function of s-regular partitions: (q^s;q^s) / (q;q)."""
    return pochhammer(s, s, n) * pochhammer(1, 1, n).invert()


def even_powers(lo: int, hi: int, n: int) -> TruncatedSeries:
    """q^(2*lo) + q^(2*lo+2) + ... + q^(2*hi)."""
    out = TruncatedSeries.zero(n)
    for j in range(lo, hi + 1):
        out = out + TruncatedSeries.monomial(2 * j, n)
    return out


def bt2_series(t: int, n: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """Generating function of the total 2-hook count over t-regular partitions.

    The closed form is the t-regular partition series times a rational factor
    collecting, for each partition, the two local shapes that carry a 2-hook.
    """
    if t < 2:
        raise DomainError("regularity modulus must be at least 2")
    inner = (
        TruncatedSeries.monomial(2, n, 2) * geometric(2, n)
        - TruncatedSeries.monomial(t, n) * geometric(t, n)
        + (
            TruncatedSeries.monomial(2 * t - 1, n)
            - TruncatedSeries.monomial(2 * t, n)
            + TruncatedSeries.monomial(2 * t + 1, n)
        )
        * geometric(2 * t, n)
    )
    return regular_series(t, n) * inner


TERM_NAMES = ("a", "b", "c", "d", "e", "f")


def decomposition_term(term: str, t: int, n: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """One of the six series a..f whose signed sum equals the 2-hook gap.

    The shapes of the six terms depend on the parity of t; both families share
    the e and f terms, which carry the sporadic overlined values near 2t.
    """
    if t < 3:
        raise DomainError("the decomposition is defined for t >= 3")
    if term not in TERM_NAMES:
        raise DomainError(f"unknown term {term!r}; expected one of {TERM_NAMES}")
    if term == "e":
        head = TruncatedSeries.one(n) - TruncatedSeries.monomial(t + 1, n)
        tail = TruncatedSeries.monomial(2 * t + 1, n) + TruncatedSeries.monomial(2 * t + 3, n)
        return head * pochhammer(3 * t + 3, t + 1, n) * pochhammer(1, 1, n).invert() * tail
    if term == "f":
        head = TruncatedSeries.one(n) - TruncatedSeries.monomial(t, n)
        tail = TruncatedSeries.monomial(2 * t - 1, n) + TruncatedSeries.monomial(2 * t + 1, n)
        return head * pochhammer(3 * t, t, n) * pochhammer(1, 1, n).invert() * tail
    if t % 2:
        if term == "a":
            num = even_powers(1, t, n) - TruncatedSeries.monomial(t + 1, n)
            return regular_series(t + 1, n) * num * geometric(2 * t + 2, n)
        if term == "b":
            return regular_series(t, n) * even_powers(1, t - 1, n) * geometric(2 * t, n)
        if term == "c":
            return regular_series(t, n) * TruncatedSeries.monomial(t, n) * geometric(2 * t, n)
        # term == "d"
        return regular_series(t + 1, n) * even_powers(1, t, n) * geometric(2 * t + 2, n)
    if term == "a":
        return regular_series(t + 1, n) * even_powers(1, t, n) * geometric(2 * t + 2, n)
    if term == "b":
        return (
            regular_series(t + 1, n)
            * TruncatedSeries.monomial(t + 1, n)
            * geometric(2 * t + 2, n)
        )
    if term == "c":
        num = even_powers(1, t - 1, n) - TruncatedSeries.monomial(t, n)
        return regular_series(t, n) * num * geometric(2 * t, n)
    # term == "d"
    return regular_series(t, n) * even_powers(1, t - 1, n) * geometric(2 * t, n)


def decomposition_sum(t: int, n: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """The signed combination of the six terms for the given parity of t."""
    terms = {name: decomposition_term(name, t, n) for name in TERM_NAMES}
    if t % 2:
        out = terms["a"] - terms["b"].scale(2) + terms["c"] + terms["d"]
    else:
        out = terms["a"].scale(2) - terms["b"] - terms["c"] - terms["d"]
    return out + terms["e"] - terms["f"]


def verify_decomposition(
    t: int,
    n_max: int = DEFAULT_DEGREE,
    enumeration_budget: int = 20,
) -> VerificationReport:
    """Check that the six-term combination equals the 2-hook count gap.

    Three layers, from independent code paths: the closed-form gap of
    :func:`bt2_series`, dynamic-programming hook totals over the full range,
    and direct enumeration of partitions up to ``enumeration_budget``.
    """
    if t < 3:
        raise DomainError("the decomposition is defined for t >= 3")
    report = VerificationReport(
        kind="decomposition",
        params={"t": t, "n_max": n_max, "enumeration_budget": enumeration_budget},
    )
    combo = decomposition_sum(t, n_max)
    gap = bt2_series(t + 1, n_max) - bt2_series(t, n_max)
    hi = hook_count_totals(t + 1, 2, n_max)
    lo = hook_count_totals(t, 2, n_max)
    for n in range(n_max + 1):
        report.checked += 1
        c = combo.coeff(n)
        if c != gap.coeff(n):
            report.fail(check="series", n=n, combination=c, gap=gap.coeff(n))
        if c != hi[n] - lo[n]:
            report.fail(check="dp-oracle", n=n, combination=c, oracle=hi[n] - lo[n])
        if c < 0:
            report.fail(check="nonnegativity", n=n, combination=c)
        if n <= enumeration_budget:
            e = b_t_k(t + 1, 2, n) - b_t_k(t, 2, n)
            if c != e:
                report.fail(check="enumeration", n=n, combination=c, oracle=e)
    return report
