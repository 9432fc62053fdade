"""Polygonal numbers and counting representations as sums of them.

The j-th m-gonal number is ((m-2)*j*j - (m-4)*j) / 2, always an integer:
0, 1, m, 3m-3, 6m-8, ... Triangles are m=3, squares m=4, and so on.

Representation counting comes in two flavors that are deliberately both
here, because "a sum of k polygonal numbers" can be read two ways:

* ordered, zeros allowed: raise the series sum of x^(p_j) (which starts
  1 + x + ...) to the k-th power; the coefficient at N counts ordered
  k-tuples. ``ordered_representation_counts`` / ``check_all_positive``.

* unordered, with zero an explicit part the caller chooses to include or
  not: a two-variable lattice walk counts multisets of exactly k parts.
  ``count_partitions_with_parts``.

Positivity of one is equivalent to positivity of the other (with zero
included as a part), and the tests hold the two routes against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import (
    BiPoly,
    Count,
    IntPoly,
    coeff,
    coeff2,
    intpoly,
    inverse_product_grid,
    poly_pow,
)


@dataclass(frozen=True)
class PolygonalSpec:
    """Which polygon, and how far (inclusive) the series window runs."""

    m: int
    bound: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 3:
            raise ValueError("polygonal numbers need m >= 3 sides")
        if not isinstance(self.bound, int) or self.bound < 0:
            raise ValueError("bound must be nonnegative")


def polygonal_number(m: int, j: int) -> int:
    """The j-th m-gonal number; j = 0 gives 0."""
    if not isinstance(m, int) or m < 3:
        raise ValueError("polygonal numbers need m >= 3 sides")
    if not isinstance(j, int) or j < 0:
        raise ValueError("index must be nonnegative")
    return ((m - 2) * j * j - (m - 4) * j) // 2


def polygonal_series(spec: PolygonalSpec) -> IntPoly:
    """Truncated series with coefficient 1 at every m-gonal number.

    Starts 1 + x + x^m + ...; the result carries the truncation bound.
    """
    cs = [0] * (spec.bound + 1)
    j = 0
    while True:
        p = polygonal_number(spec.m, j)
        if p > spec.bound:
            break
        cs[p] = 1
        j += 1
    return intpoly(cs, spec.bound)


def ordered_representation_counts(m: int, k: int, bound: int) -> IntPoly:
    """k-th power of the m-gonal series, truncated at bound.

    Coefficient at N = ordered k-tuples of m-gonal numbers (zero allowed)
    summing to N.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("power must be a positive int")
    return poly_pow(polygonal_series(PolygonalSpec(m, bound)), k, bound)


def check_all_positive(p: IntPoly, upto: int) -> int | None:
    """Smallest exponent in 0..upto with coefficient 0, or None if none.

    Refuses to scan past what the value actually knows.
    """
    if not isinstance(upto, int) or upto < 0:
        raise ValueError("upto must be nonnegative")
    if p.bound is not None and upto > p.bound:
        raise ValueError("upto %d exceeds the series bound %d" % (upto, p.bound))
    for e in range(upto + 1):
        if coeff(p, e) == 0:
            return e
    return None


@dataclass(frozen=True)
class PartSet:
    """Strictly increasing nonnegative parts; include 0 only if you mean it."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("need at least one part")
        prev = -1
        for p in self.parts:
            if not isinstance(p, int) or p < 0:
                raise ValueError("parts must be nonnegative ints")
            if p <= prev:
                raise ValueError("parts must be strictly increasing")
            prev = p


def polygonal_parts(m: int, bound: int, include_zero: bool = True) -> PartSet:
    """All m-gonal numbers up to bound as a PartSet."""
    series = polygonal_series(PolygonalSpec(m, bound))
    parts = tuple(e for e, c in enumerate(series.coeffs) if c)
    if not include_zero:
        parts = tuple(p for p in parts if p)
    return PartSet(parts)


def partition_count_grid(parts: PartSet, k_max: int, n_max: int) -> BiPoly:
    """Window of prod over parts of 1/(1 - x^p z): cell (N, j) counts
    multisets of exactly j parts summing to N."""
    if k_max < 0 or n_max < 0:
        raise ValueError("bounds must be nonnegative")
    return inverse_product_grid([(p, 1) for p in parts.parts], (n_max, k_max))


def count_partitions_with_parts(parts: PartSet, k: int, N: int) -> Count:
    """Multisets of exactly k values from parts summing to N.

    A repeated part counts once per use; if 0 is in parts, padding with
    zeros is allowed and distinct pad counts are distinct multisets.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError("k must be nonnegative")
    if not isinstance(N, int) or N < 0:
        raise ValueError("N must be nonnegative")
    grid = partition_count_grid(parts, k, N)
    return coeff2(grid, N, k)
