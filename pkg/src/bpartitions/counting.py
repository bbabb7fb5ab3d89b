"""Exact counting pipelines for zero-block-free signed partitions.

Three independent routes to the same numbers, kept separate so they can
cross-check one another:

* ``total_count`` and ``singleton_free_ie``: closed formulas over Stirling
  numbers of the second kind (``2**(n-j) * S(n, j)`` counts the partitions
  with exactly 2j blocks; inclusion-exclusion over supports removes the ones
  with singleton pairs).
* ``singleton_free_egf``: coefficients of exp((e^(2x) - 1)/2 - x), expanded
  with exact rational arithmetic.
* ``distribution``: the full joint table of (singleton pairs, adjacency
  pairs), tabulated by enumerating V_n outright.

Everything is exact; integers are unbounded and series coefficients are
Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .core import InternalInvariantError, PartitionError, statistics
from .enumeration import for_each


class TooLargeError(PartitionError):
    """Enumeration size guard tripped; pass a larger limit to proceed."""


# Row k holds S(k, 0..k).  Rows are appended whole, so concurrent readers
# only ever observe finished rows.
_stirling_rows: list[list[int]] = [[1]]


def stirling2(k: int, j: int) -> int:
    """Stirling number of the second kind, via the standard recurrence."""
    if k < 0 or j < 0:
        raise ValueError("stirling2 arguments must be nonnegative")
    if j > k:
        return 0
    while len(_stirling_rows) <= k:
        prev = _stirling_rows[-1]
        m = len(_stirling_rows)
        row = [0] * (m + 1)
        for i in range(1, m):
            row[i] = prev[i - 1] + i * prev[i]
        row[m] = prev[m - 1]
        _stirling_rows.append(row)
    return _stirling_rows[k][j]


def total_count(n: int) -> int:
    """|V_n| = sum over block-pair counts j of 2**(n-j) * S(n, j)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return sum(2 ** (n - j) * stirling2(n, j) for j in range(n + 1))


def singleton_free_ie(n: int) -> int:
    """Count of singleton-pair-free partitions in V_n by inclusion-exclusion."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return sum((-1) ** (n - k) * comb(n, k) * total_count(k) for k in range(n + 1))


@dataclass(frozen=True, slots=True)
class RationalSeries:
    """Truncated power series with exact Fraction coefficients.

    ``coeffs[k]`` multiplies x**k; the truncation order is len(coeffs) - 1.
    Addition and multiplication truncate to the smaller order of the two
    operands; ``exp`` keeps the order and requires a zero constant term.
    """

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __add__(self, other: RationalSeries) -> RationalSeries:
        m = min(self.order, other.order)
        return RationalSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(m + 1)))

    def __mul__(self, other: RationalSeries) -> RationalSeries:
        m = min(self.order, other.order)
        out = [Fraction(0)] * (m + 1)
        for i in range(m + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(m + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return RationalSeries(tuple(out))

    def exp(self) -> RationalSeries:
        """exp of a series with zero constant term, to the same order.

        Uses the derivative recurrence k*g_k = sum_{i=1..k} i*f_i*g_{k-i}.
        """
        if self.coeffs[0]:
            raise ValueError("exp needs a zero constant term")
        m = self.order
        out = [Fraction(1)] + [Fraction(0)] * m
        for k in range(1, m + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                ci = self.coeffs[i]
                if ci:
                    acc += i * ci * out[k - i]
            out[k] = acc / k
        return RationalSeries(tuple(out))


def _egf_exponent(order: int) -> RationalSeries:
    """(e^(2x) - 1)/2 - x, whose exp generates the singleton-free counts."""
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(1, order + 1):
        coeffs[k] = Fraction(2 ** (k - 1), factorial(k))
    if order >= 1:
        coeffs[1] -= 1
    return RationalSeries(tuple(coeffs))


def singleton_free_egf(upto: int) -> list[int]:
    """Singleton-pair-free counts for n = 0..upto from the generating function.

    Expands exp((e^(2x) - 1)/2 - x) with exact rationals and returns
    n! * [x^n].  Each value must come out an integer; a fractional result
    aborts with :class:`InternalInvariantError` since it can only mean a
    series arithmetic bug.
    """
    if upto < 0:
        raise ValueError(f"upto must be nonnegative, got {upto}")
    series = _egf_exponent(upto).exp()
    out = []
    for k in range(upto + 1):
        value = factorial(k) * series.coefficient(k)
        if value.denominator != 1:
            raise InternalInvariantError(
                f"coefficient {k} of the counting series is not integral: {value}"
            )
        out.append(int(value))
    return out


@dataclass(frozen=True, slots=True)
class BivariateDistribution:
    """Joint (singleton pairs, adjacency pairs) counts for one n.

    ``table[s][a]`` is the number of partitions in V_n with s singleton pairs
    and a adjacency pairs; both indices run 0..n.
    """

    n: int
    table: tuple[tuple[int, ...], ...]

    def count(self, s: int, a: int) -> int:
        return self.table[s][a]

    def evaluate(self, x, y):
        """Exact value of sum over (s, a) of count * x**s * y**a."""
        return sum(
            c * x**s * y**a
            for s, row in enumerate(self.table)
            for a, c in enumerate(row)
            if c
        )

    def is_symmetric(self) -> bool:
        return all(
            self.table[s][a] == self.table[a][s]
            for s in range(self.n + 1)
            for a in range(s)
        )

    def terms(self) -> list[tuple[int, int, int]]:
        """Nonzero (s, a, count) triples in lexicographic order."""
        return [
            (s, a, c)
            for s, row in enumerate(self.table)
            for a, c in enumerate(row)
            if c
        ]

    @property
    def total(self) -> int:
        return self.evaluate(1, 1)


def distribution(n: int, *, limit: int = 12) -> BivariateDistribution:
    """Tabulate the joint distribution by enumerating all of V_n.

    The guard reflects |V_n| growth (|V_12| is already in the billions); pass
    a larger ``limit`` deliberately to go past it.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n > limit:
        raise TooLargeError(f"n={n} exceeds the enumeration guard {limit}")
    table = [[0] * (n + 1) for _ in range(n + 1)]

    def visit(part):
        st = statistics(part)
        table[st.singletons][st.adjacencies] += 1

    for_each(n, visit)
    return BivariateDistribution(n, tuple(tuple(row) for row in table))
