"""Batchings of a job prefix and their sum-of-completion-times cost.

A plan is the tuple of setup positions: entry ``s`` means a setup happens
after ``s`` jobs have been seen, so the batch it opens starts with job s+1.
Position 0 is always present.  The horizon (number of jobs) is supplied
when the plan is evaluated, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class BatchPlan:
    setups: tuple[int, ...]

    def __init__(self, setups: Iterable[int]):
        setups = tuple(setups)
        if not setups or setups[0] != 0:
            raise ValueError("a plan starts with a setup at position 0")
        if any(b <= a for a, b in zip(setups, setups[1:])):
            raise ValueError(f"setup positions must be strictly increasing: {setups}")
        object.__setattr__(self, "setups", setups)

    @property
    def last_setup(self) -> int:
        return self.setups[-1]

    def __len__(self) -> int:
        return len(self.setups)

    def check_horizon(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"horizon must be at least 1, got {n}")
        if self.setups[-1] >= n:
            raise ValueError(f"plan {self.setups} has an empty batch at horizon {n}")

    def batch_ends(self, n: int) -> list[int]:
        self.check_horizon(n)
        return list(self.setups[1:]) + [n]

    def batch_sizes(self, n: int) -> list[int]:
        ends = self.batch_ends(n)
        return [e - s for s, e in zip(self.setups, ends)]

    def format(self, n: int | None = None) -> str:
        """``"0 2 5"``, or ``"0 2 5 Cost 36"`` when a horizon is given."""
        text = " ".join(str(s) for s in self.setups)
        if n is None:
            return text
        return f"{text} Cost {plan_cost(self, n)}"


def batch_completion_times(plan: BatchPlan, n: int) -> list[int]:
    """Batch j (1-based) ends after e_j jobs and j setups."""
    return [e + j for j, e in enumerate(plan.batch_ends(n), start=1)]


def plan_cost(plan: BatchPlan, n: int) -> int:
    ends = plan.batch_ends(n)
    total = 0
    prev = 0
    for j, e in enumerate(ends, start=1):
        total += (j + e) * (e - prev)
        prev = e
    return total


def extend_cost(prev_cost: int, last_setup: int, batch_index: int, i: int) -> int:
    """Cost after appending job i to the open batch that began at `last_setup`.

    `batch_index` counts the closed batches before the open one.  The
    ``i - last_setup - 1`` jobs already in the open batch each finish one
    unit later, and job i finishes at ``i + batch_index + 1``.
    """
    return prev_cost + (i - last_setup - 1) + (i + batch_index + 1)
