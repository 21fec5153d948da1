"""Deterministic online batching rules.

The only thing an online algorithm observes is how many jobs have arrived,
so a deterministic algorithm is just the set of job counts after which it
opens a new batch.  A rule stores finitely many such breakpoints plus an
optional arithmetic tail ``start, start+period, start+2*period, ...``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional

from listbatch.plans import BatchPlan, extend_cost
from listbatch.ratio import checked

D_BREAKPOINTS = (
    2, 5, 9, 13, 18, 23, 29, 35, 41, 48, 54, 61, 68, 76, 84, 91,
    100, 108, 117, 126, 135, 145, 156, 167, 179, 192, 206, 221,
    238, 257, 278, 302, 329, 361, 397, 439, 488, 545, 612, 690,
    781, 888, 1013, 1159, 1329, 1528, 1760,
)
D_TAIL = (2000, 40)


@dataclass(frozen=True)
class BatchingRule:
    breakpoints: tuple[int, ...] = ()
    tail: Optional[tuple[int, int]] = None

    def __post_init__(self):
        bps = tuple(self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        if any(b < 1 for b in bps):
            raise ValueError("breakpoints must be job counts >= 1")
        if any(b <= a for a, b in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if self.tail is not None:
            start, period = self.tail
            object.__setattr__(self, "tail", (int(start), int(period)))
            if period < 1:
                raise ValueError("tail period must be >= 1")
            if start < 1 or (bps and start <= bps[-1]):
                raise ValueError("tail must start after the last finite breakpoint")

    @property
    def setups_before_tail(self) -> int:
        """Setups charged to jobs 1..tail_start: the initial one plus one per finite breakpoint."""
        return 1 + len(self.breakpoints)

    def iter_breakpoints(self) -> Iterator[int]:
        yield from self.breakpoints
        if self.tail is not None:
            start, period = self.tail
            yield from itertools.count(start, period)


def algorithm_d() -> BatchingRule:
    """The 619/583-competitive rule: 47 listed breakpoints, then every 40 jobs from 2000."""
    return BatchingRule(D_BREAKPOINTS, D_TAIL)


def breakpoints_up_to(rule: BatchingRule, n: int) -> list[int]:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return list(itertools.takewhile(lambda b: b <= n, rule.iter_breakpoints()))


def rule_to_plan(rule: BatchingRule, n: int) -> BatchPlan:
    """Plan the rule produces on exactly n jobs.

    A breakpoint b makes job b+1 the first job of a new batch, so only
    breakpoints below n matter at horizon n.
    """
    if n < 1:
        raise ValueError(f"horizon must be at least 1, got {n}")
    return BatchPlan([0] + breakpoints_up_to(rule, n - 1))


def prefix_costs(rule: BatchingRule, max_n: int) -> list[int]:
    """Costs of the rule on 1..max_n jobs (entry i-1 is the cost on i jobs)."""
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    costs = []
    bps = rule.iter_breakpoints()
    upcoming = next(bps, None)
    cost = last = closed = 0
    for i in range(1, max_n + 1):
        cost = checked(extend_cost(cost, last, closed, i))
        costs.append(cost)
        if i == upcoming:
            last = i
            closed += 1
            upcoming = next(bps, None)
    return costs


def parse_rule(text: str) -> BatchingRule:
    """Read the rule file format: one breakpoint per line, optional ``tail START PERIOD``.

    Blank lines and ``#`` comments are ignored.  The tail line must be last.
    """
    breakpoints = []
    tail = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if tail is not None:
            raise ValueError(f"line {lineno}: nothing may follow the tail line")
        fields = line.split()
        try:
            if fields[0] == "tail":
                if len(fields) != 3:
                    raise ValueError("expected 'tail START PERIOD'")
                tail = (int(fields[1]), int(fields[2]))
            elif len(fields) == 1:
                breakpoints.append(int(fields[0]))
            else:
                raise ValueError("expected a single integer")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}: {raw!r}") from None
    return BatchingRule(tuple(breakpoints), tail)


def format_rule(rule: BatchingRule) -> str:
    lines = [str(b) for b in rule.breakpoints]
    if rule.tail is not None:
        lines.append(f"tail {rule.tail[0]} {rule.tail[1]}")
    return "\n".join(lines) + "\n"


def load_rule(path: str | Path) -> BatchingRule:
    return parse_rule(Path(path).read_text())
