"""Brute-force enumeration oracles.

Everything here is deliberately dumb: enumerate outcomes, count matches.
The only cleverness allowed is refusing to start when the outcome space
exceeds the budget, so a typo cannot freeze a test run. These functions
never share code with the engines they are used to check.
"""

from __future__ import annotations

import math
from itertools import combinations_with_replacement, product

from .heterogeneous import DicePool
from .polygonal import PartSet
from .regula import LinearSystem2
from .series import Count

DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """The outcome space is larger than the oracle is willing to walk."""


def _check_budget(space: int, budget: int, what: str) -> None:
    if space > budget:
        raise BudgetExceededError(
            "%s outcome space %d exceeds budget %d" % (what, space, budget)
        )


def brute_dice(pool: DicePool, N: int, budget: int = DEFAULT_BUDGET) -> Count:
    """Count pool outcomes summing to N by walking all of them."""
    _check_budget(pool.outcome_count, budget, "dice")
    markses = [d.marks for d in pool.dice]
    return sum(1 for outcome in product(*markses) if sum(outcome) == N)


def brute_partitions(
    parts: PartSet, k: int, N: int, ordered: bool, budget: int = DEFAULT_BUDGET
) -> Count:
    """Count k-tuples (ordered) or k-multisets (unordered) from parts
    summing to N."""
    if k < 0 or N < 0:
        raise ValueError("k and N must be nonnegative")
    vals = parts.parts
    if ordered:
        _check_budget(len(vals) ** k, budget, "ordered parts")
        return sum(1 for t in product(vals, repeat=k) if sum(t) == N)
    _check_budget(math.comb(len(vals) + k - 1, k), budget, "unordered parts")
    return sum(1 for t in combinations_with_replacement(vals, k) if sum(t) == N)


def brute_regula(sys: LinearSystem2, budget: int = DEFAULT_BUDGET) -> Count:
    """Count solutions by nested bounded loops over the variables."""
    n, v = sys.targets
    lo = 1 if sys.mode == "positive" else 0
    space = 1
    for a, b in sys.generators:
        bounds = []
        if a:
            bounds.append(n // a)
        if b:
            bounds.append(v // b)
        space *= min(bounds) + 1
    _check_budget(space, budget, "two-equation")

    gens = sys.generators

    def rec(i: int, rn: int, rv: int) -> int:
        if i == len(gens):
            return 1 if rn == 0 and rv == 0 else 0
        a, b = gens[i]
        hi = []
        if a:
            hi.append(rn // a)
        if b:
            hi.append(rv // b)
        total = 0
        for x in range(lo, min(hi) + 1):
            total += rec(i + 1, rn - a * x, rv - b * x)
        return total

    return rec(0, n, v)
