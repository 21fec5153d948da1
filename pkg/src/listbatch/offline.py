"""Offline optimum for n unit jobs with unit setup time.

Three independent routes to the same numbers: the triangular closed form,
the incremental recurrence used to build lookup tables, and an O(n^2)
dynamic program over the size of the first batch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from listbatch.ratio import checked

MAX_SUPPORTED_N = 100_000


@dataclass(frozen=True)
class TriangularDecomposition:
    """``n = m(m+1)/2 + k`` with ``0 <= k <= m``."""

    n: int
    m: int
    k: int


def decompose(n: int) -> TriangularDecomposition:
    if n < 0:
        raise ValueError(f"job count must be non-negative, got {n}")
    m = (math.isqrt(8 * n + 1) - 1) // 2
    return TriangularDecomposition(n, m, n - m * (m + 1) // 2)


def formula_value(m: int, k: int) -> int:
    """Evaluate the closed form at an explicit (m, k), 0 <= k <= m+1.

    Exposed separately so both readings of a triangular n can be compared.
    """
    if m < 0 or not 0 <= k <= m + 1:
        raise ValueError(f"need m >= 0 and 0 <= k <= m+1, got m={m}, k={k}")
    n = m * (m + 1) // 2 + k
    head = checked(m * (m + 1) * (m + 2) * (3 * m + 5))
    assert head % 24 == 0
    body = checked(k * (n + m - k + 1))
    return checked(head // 24 + body + k * (k + 1) // 2)


def opt_cost_closed(n: int) -> int:
    if n > MAX_SUPPORTED_N:
        raise OverflowError(f"closed form is supported up to n = {MAX_SUPPORTED_N}")
    d = decompose(n)
    return formula_value(d.m, d.k)


@dataclass(frozen=True)
class OptTable:
    """Offline optimum costs indexed by job count, ``costs[0] == 0``."""

    costs: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.costs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.max_n:
            raise IndexError(f"opt table covers 0..{self.max_n}, asked for {n}")
        return self.costs[n]

    def __len__(self) -> int:
        return len(self.costs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.costs)

    def covers(self, n: int) -> bool:
        return n <= self.max_n

    def require(self, n: int) -> None:
        if n > self.max_n:
            raise ValueError(f"opt table too short: covers 0..{self.max_n}, need {n}")


def build_opt_table(max_n: int) -> OptTable:
    """Tabulate optima 0..max_n with the incremental recurrence.

    ``m`` tracks the triangular index: it is bumped once ``2n`` reaches
    ``(m+1)(m+2)``, and each extra job then adds ``n + m + 2``.
    """
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    if max_n > MAX_SUPPORTED_N:
        raise OverflowError(f"opt tables are supported up to n = {MAX_SUPPORTED_N}")
    costs = [0] * (max_n + 1)
    m = 0
    for n in range(max_n):
        if 2 * n >= (m + 1) * (m + 2):
            m += 1
        costs[n + 1] = checked(costs[n] + n + m + 2)
    return OptTable(tuple(costs))


def bruteforce_costs(max_n: int) -> list[int]:
    """DP over the first batch: ``cost(n) = min_b n*(b+1) + cost(n-b)``.

    A first batch of b jobs takes b+1 time units (setup included) and every
    one of the n jobs waits for it.
    """
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    cost = [0] * (max_n + 1)
    for n in range(1, max_n + 1):
        cost[n] = min(n * (b + 1) + cost[n - b] for b in range(1, n + 1))
    return cost


def opt_cost_bruteforce(n: int) -> int:
    return bruteforce_costs(n)[n]


def argmin_first_batches(n: int, costs: Sequence[int]) -> set[int]:
    """All first-batch sizes attaining the optimum, given optima for 0..n."""
    values = {b: n * (b + 1) + costs[n - b] for b in range(1, n + 1)}
    best = min(values.values())
    return {b for b, v in values.items() if v == best}


def _sizes_for(m: int, k: int) -> frozenset[int]:
    if k == 0:
        return frozenset({m})
    if k == m + 1:
        return frozenset({m + 1})
    return frozenset({m, m + 1})


def optimal_first_batch_sizes(n: int) -> set[int]:
    """Optimal first-batch sizes for n jobs.

    A triangular n has two representations, (m, 0) and (m-1, m); both are
    evaluated and must agree.
    """
    if n < 1:
        raise ValueError(f"need at least one job, got {n}")
    d = decompose(n)
    sizes = _sizes_for(d.m, d.k)
    if d.k == 0 and d.m >= 1:
        other = _sizes_for(d.m - 1, d.m)
        if other != sizes:
            raise ArithmeticError(f"representations of n={n} disagree: {set(sizes)} vs {set(other)}")
    return set(sizes)
