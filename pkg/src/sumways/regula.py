"""Counting solutions of two simultaneous linear equations.

Given generators (a_i, b_i) and targets (n, v), count assignments of
x_i >= 0 (or x_i >= 1 in positive mode) with

    sum a_i x_i = n   and   sum b_i x_i = v.

This is the classic coin-style problem with two constraints at once (the
Rule of the Virgins shape: so many heads, so much money). The count is the
coefficient of u^n w^v in the product over generators of 1/(1 - u^a w^b),
computed as a dense two-variable lattice walk. Positive mode folds away by
shifting both targets by one copy of every generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .series import Count, coeff2, inverse_product_grid

Mode = Literal["nonnegative", "positive"]


@dataclass(frozen=True)
class LinearSystem2:
    """Generators, targets, and which solution domain is meant."""

    generators: tuple[tuple[int, int], ...]
    targets: tuple[int, int]
    mode: Mode = "nonnegative"

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("need at least one generator")
        for a, b in self.generators:
            if not isinstance(a, int) or not isinstance(b, int) or a < 0 or b < 0:
                raise ValueError("generator coefficients must be nonnegative ints")
            if a == 0 and b == 0:
                raise ValueError("generator (0, 0) is not allowed")
        n, v = self.targets
        if not isinstance(n, int) or not isinstance(v, int) or n < 0 or v < 0:
            raise ValueError("targets must be nonnegative ints")
        if self.mode not in ("nonnegative", "positive"):
            raise ValueError("mode must be 'nonnegative' or 'positive'")


def _shifted_targets(sys: LinearSystem2) -> tuple[int, int] | None:
    """Targets after folding positive mode away; None if plainly infeasible."""
    n, v = sys.targets
    if sys.mode == "positive":
        n -= sum(a for a, _ in sys.generators)
        v -= sum(b for _, b in sys.generators)
        if n < 0 or v < 0:
            return None
    return n, v


def rv_count_solutions(sys: LinearSystem2) -> Count:
    """Number of solutions in the system's domain. Infeasible is 0, never
    an exception."""
    shifted = _shifted_targets(sys)
    if shifted is None:
        return 0
    n, v = shifted
    grid = inverse_product_grid(sys.generators, (n, v))
    return coeff2(grid, n, v)


def rv_enumerate_solutions(
    sys: LinearSystem2, cap: int
) -> tuple[list[tuple[int, ...]], bool]:
    """Solutions in lexicographic order, at most cap of them.

    Returns (solutions, truncated); truncated is True when more solutions
    exist beyond the cap.
    """
    if not isinstance(cap, int) or cap < 0:
        raise ValueError("cap must be nonnegative")
    lo = 1 if sys.mode == "positive" else 0
    gens = sys.generators
    out: list[tuple[int, ...]] = []
    truncated = False

    def walk(i: int, rn: int, rv: int, prefix: list[int]) -> bool:
        # returns False to stop the whole search (cap exceeded)
        if i == len(gens):
            if rn == 0 and rv == 0:
                if len(out) == cap:
                    return False
                out.append(tuple(prefix))
            return True
        a, b = gens[i]
        hi_candidates = []
        if a:
            hi_candidates.append(rn // a)
        if b:
            hi_candidates.append(rv // b)
        hi = min(hi_candidates)
        for x in range(lo, hi + 1):
            prefix.append(x)
            ok = walk(i + 1, rn - a * x, rv - b * x, prefix)
            prefix.pop()
            if not ok:
                return False
        return True

    n, v = sys.targets
    if not walk(0, n, v, []):
        truncated = True
    return out, truncated
