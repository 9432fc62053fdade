"""Counting ordered ways n dice with faces 1..m sum to N.

count(N) is the coefficient of x^N in (x + x^2 + ... + x^m)^n. Four engines
compute it by genuinely different routes and exist to check one another:

``count_poly``
    expand the polynomial power and read the coefficient off.

``count_table_add_die``
    tabulate every (N, n) up to given maxima by adding one die at a time:
    (N)(n) = (N-1)(n) + (N-1)(n-1) - (N-1-m)(n-1).

``count_lambda_recurrence``
    walk the offset lam = N - n upward through a three-term recurrence
    whose every step divides exactly; intermediates are signed.

``count_closed_form``
    alternating binomial sum: inclusion-exclusion over how many dice are
    forced past their largest face.

All counts are exact Python ints. Writing (P)(n) for the number of ways n
dice total P, the useful structural facts are: support is n..m*n with value
1 at both ends, the counts are symmetric about the midpoint
((n+lam)(n) = (m*n-lam)(n)), each column sums to m^n, and below the first
wraparound (lam < m) the count is the plain composition count
C(n+lam-1, lam).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .series import Count, coeff, intpoly, poly_pow


class DivisibilityError(RuntimeError):
    """A recurrence step failed to divide exactly; counts would be wrong."""


@dataclass(frozen=True)
class HomoQuery:
    """One homogeneous counting question: n dice, faces 1..m, target sum N."""

    n: int
    m: int
    N: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("need at least one die")
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError("need at least one face")
        if not isinstance(self.N, int) or self.N < 0:
            raise ValueError("target sum must be nonnegative")


def binomial(a: int, b: int) -> int:
    """C(a, b) with the usual convention: 0 when b < 0 or b > a."""
    if a < 0:
        raise ValueError("upper index must be nonnegative")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def count_poly(q: HomoQuery) -> Count:
    """Coefficient of x^N in (x + x^2 + ... + x^m)^n."""
    die = intpoly([0] + [1] * q.m)
    power = poly_pow(die, q.n, bound=q.N)
    return coeff(power, q.N)


@dataclass(frozen=True)
class CountTable:
    """Full grid of counts for faces 1..m, all n <= n_max and N <= N_max.

    Rows run N = 0..N_max (row 0 is all zeros; it makes the recurrence
    uniform), columns n = 1..n_max. Column n sums to m^n whenever
    N_max >= m*n, and each column is symmetric about N = n*(m+1)/2.
    """

    m: int
    n_max: int
    N_max: int
    entries: tuple[tuple[int, ...], ...]

    def count(self, N: int, n: int) -> Count:
        if not 1 <= n <= self.n_max:
            raise ValueError("n=%d outside table columns 1..%d" % (n, self.n_max))
        if not 0 <= N <= self.N_max:
            raise ValueError("N=%d outside table rows 0..%d" % (N, self.N_max))
        return self.entries[N][n - 1]

    def column(self, n: int) -> tuple[Count, ...]:
        """Counts for a fixed number of dice, N = 0..N_max."""
        if not 1 <= n <= self.n_max:
            raise ValueError("n=%d outside table columns 1..%d" % (n, self.n_max))
        return tuple(row[n - 1] for row in self.entries)


def count_table_add_die(m: int, n_max: int, N_max: int) -> CountTable:
    """Tabulate counts by adding one die at a time.

    The first column is the single die itself. Every later cell comes from
    the previous row: throwing one more die and reading the face that
    completes the sum gives
    (N)(n) = (N-1)(n) + (N-1)(n-1) - (N-1-m)(n-1),
    out-of-range references counting as 0.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("need at least one face")
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError("need at least one column")
    if not isinstance(N_max, int) or N_max < 1:
        raise ValueError("need at least one row")
    rows = [[0] * n_max for _ in range(N_max + 1)]
    for N in range(1, min(m, N_max) + 1):
        rows[N][0] = 1
    for n in range(2, n_max + 1):
        j = n - 1
        for N in range(1, N_max + 1):
            v = rows[N - 1][j] + rows[N - 1][j - 1]
            if N - 1 - m >= 0:
                v -= rows[N - 1 - m][j - 1]
            rows[N][j] = v
    return CountTable(m, n_max, N_max, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class LambdaStep:
    """One step of the offset recurrence: value = numerator / lam, exactly."""

    lam: int
    numerator: int
    value: int


def _lambda_steps(n: int, m: int, N: int):
    # vals[lam] is the count for sum n + lam; everything below lam = 0 is 0.
    vals = [1]
    top = N - n
    for lam in range(1, top + 1):
        numerator = (n + lam - 1) * vals[lam - 1]
        if lam - m >= 0:
            numerator -= (m * n + m - lam) * vals[lam - m]
        if lam - m - 1 >= 0:
            numerator += (m * n - n + m + 1 - lam) * vals[lam - m - 1]
        value, r = divmod(numerator, lam)
        if r:
            raise DivisibilityError(
                "step lam=%d for n=%d m=%d left remainder %d" % (lam, n, m, r)
            )
        vals.append(value)
        yield LambdaStep(lam, numerator, value)


def count_lambda_recurrence(q: HomoQuery) -> Count:
    """Count via the three-term recurrence in the offset lam = N - n.

    lam * (n+lam)(n) = (n+lam-1) * (n+lam-1)(n)
                     - (m*n+m-lam) * (n+lam-m)(n)
                     + (m*n-n+m+1-lam) * (n+lam-m-1)(n)

    seeded with (n)(n) = 1 and zeros below. Intermediate products are signed;
    every division is exact (a remainder raises DivisibilityError, since it
    would mean the values are not the counts this recurrence characterizes).
    """
    if q.N < q.n:
        return 0
    value = 1
    for step in _lambda_steps(q.n, q.m, q.N):
        value = step.value
    assert value >= 0
    return value


def lambda_recurrence_trace(q: HomoQuery) -> list[LambdaStep]:
    """All recurrence steps from lam = 1 up to lam = N - n, in order."""
    if q.N < q.n:
        return []
    return list(_lambda_steps(q.n, q.m, q.N))


def count_closed_form(q: HomoQuery) -> Count:
    """Alternating binomial sum for the count, no recursion.

    With lam = N - n, sum over j of
    (-1)^j * C(n, j) * C(n + lam - j*m - 1, lam - j*m)
    for as long as lam - j*m stays nonnegative: compositions with j dice
    pushed past face m, signed by inclusion-exclusion. The sum is the count
    itself, so no clamping is needed.
    """
    lam = q.N - q.n
    if lam < 0:
        return 0
    total = 0
    for j in range(0, min(q.n, lam // q.m) + 1):
        rest = lam - j * q.m
        term = binomial(q.n, j) * binomial(q.n + rest - 1, rest)
        total += term if j % 2 == 0 else -term
    return total


def count_add_die(q: HomoQuery) -> Count:
    """Point query answered through the add-a-die table."""
    if q.N == 0:
        return 0
    table = count_table_add_die(q.m, q.n, q.N)
    return table.count(q.N, q.n)


ENGINE_ORDER = ("poly", "add-die", "lambda", "closed")

ENGINES = {
    "poly": count_poly,
    "add-die": count_add_die,
    "lambda": count_lambda_recurrence,
    "closed": count_closed_form,
}
