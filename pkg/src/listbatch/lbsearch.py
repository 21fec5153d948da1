"""Exhaustive decision-tree search for the lower bound.

Every deterministic online algorithm is a root-to-leaf path in a binary
tree: at job i it either extends the open batch or opens a new one.  The
search walks the tree level by level, discarding a node once its cost ratio
reaches the target (the adversary stops the sequence there) and, optionally,
discarding nodes matched or beaten by an equal-depth sibling.  If nothing
is left after ``max_depth`` levels, no algorithm stays below the ratio on
every sequence of at most ``max_depth`` jobs.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from listbatch.offline import OptTable
from listbatch.plans import BatchPlan, extend_cost, plan_cost
from listbatch.ratio import Ratio, checked

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class PartialCandidate:
    """A plan fixed for the first `depth` jobs, with its cost at that horizon."""

    setups: tuple[int, ...]
    depth: int
    cost: int

    @property
    def last_setup(self) -> int:
        return self.setups[-1]

    @property
    def n_setups(self) -> int:
        return len(self.setups)

    @property
    def plan(self) -> BatchPlan:
        return BatchPlan(self.setups)

    def format(self) -> str:
        return " ".join(map(str, self.setups)) + f" Cost {self.cost}"


@dataclass(frozen=True)
class SearchConfig:
    ratio: Ratio
    max_depth: int
    dominance_enabled: bool = True
    collect_survivors: bool = False
    # require the dominating node to use no more setups; False gives a looser, more aggressive rule
    setup_count_condition: bool = True
    # fraction of enqueued candidates whose cached cost is recomputed from scratch
    audit_fraction: float = 0.01

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError(f"max_depth must be at least 1, got {self.max_depth}")


@dataclass
class SearchReport:
    ratio: str
    max_depth: int
    dominance_enabled: bool
    survivor_count: int
    survivors: list[PartialCandidate]
    nodes_expanded: int
    pruned_by_ratio: int
    pruned_by_dominance: int
    frontier_peak: int
    # candidates entering each level 1..(last level processed), before pruning
    per_level_sizes: list[int] = field(default_factory=list)
    # first level at which every candidate was pruned, if any
    established_at: Optional[int] = None

    @property
    def certified(self) -> bool:
        return self.survivor_count == 0

    def to_dict(self) -> dict:
        return {
            "ratio": self.ratio,
            "max_depth": self.max_depth,
            "dominance_enabled": self.dominance_enabled,
            "survivor_count": self.survivor_count,
            "survivors": [c.format() for c in self.survivors],
            "nodes_expanded": self.nodes_expanded,
            "pruned_by_ratio": self.pruned_by_ratio,
            "pruned_by_dominance": self.pruned_by_dominance,
            "frontier_peak": self.frontier_peak,
            "per_level_sizes": list(self.per_level_sizes),
            "established_at": self.established_at,
        }


def root_candidate() -> PartialCandidate:
    # job 1 always opens the first batch
    return PartialCandidate((0,), 1, 2)


def expand(c: PartialCandidate) -> tuple[PartialCandidate, PartialCandidate]:
    """Children for job ``c.depth + 1``: keep the open batch, or open a new one."""
    i = c.depth + 1
    closed = len(c.setups) - 1
    stay = PartialCandidate(c.setups, i, checked(extend_cost(c.cost, c.last_setup, closed, i)))
    batch = PartialCandidate(
        c.setups + (c.depth,), i, checked(extend_cost(c.cost, c.depth, closed + 1, i))
    )
    return stay, batch


def is_pruned_by_ratio(c: PartialCandidate, r: Ratio, opt: OptTable) -> bool:
    """True once cost/opt >= r at this depth; ties count as reaching the bound."""
    return checked(c.cost * r.q) >= checked(opt[c.depth] * r.p)


def dominates(a: PartialCandidate, b: PartialCandidate, setup_count: bool = True) -> bool:
    """Whether every continuation of `b` is matched or beaten by the same continuation of `a`."""
    return (
        a.depth == b.depth
        and a.cost <= b.cost
        and (not setup_count or a.n_setups <= b.n_setups)
        and a.last_setup == b.last_setup
    )


def _filter_dominated(
    level: list[PartialCandidate], setup_count: bool
) -> tuple[list[PartialCandidate], int]:
    # first kept wins; only candidates sharing a last setup can dominate each other
    kept = []
    by_last: dict[int, list[PartialCandidate]] = {}
    dropped = 0
    for c in level:
        group = by_last.setdefault(c.last_setup, [])
        if any(dominates(k, c, setup_count) for k in group):
            dropped += 1
            continue
        group.append(c)
        kept.append(c)
    return kept, dropped


def run_search(
    config: SearchConfig,
    opt: OptTable,
    reorder: Optional[Callable[[list[PartialCandidate]], list[PartialCandidate]]] = None,
) -> SearchReport:
    """Level-synchronous search to ``config.max_depth``.

    `reorder`, if given, permutes each level before filtering; it exists so
    tests can confirm the verdict does not depend on processing order.
    """
    opt.require(config.max_depth)
    r = config.ratio
    rng = random.Random(0)
    level = [root_candidate()]
    sizes: list[int] = []
    expanded = by_ratio = by_dominance = 0
    established_at = None

    for depth in range(1, config.max_depth + 1):
        if reorder is not None:
            level = reorder(level)
        sizes.append(len(level))
        for c in level:
            if config.audit_fraction and rng.random() < config.audit_fraction:
                if plan_cost(BatchPlan(c.setups), c.depth) != c.cost:
                    raise AssertionError(f"cached cost out of sync for {c.format()}")

        alive = [c for c in level if not is_pruned_by_ratio(c, r, opt)]
        by_ratio += len(level) - len(alive)
        if config.dominance_enabled:
            alive, dropped = _filter_dominated(alive, config.setup_count_condition)
            by_dominance += dropped
        log.debug("depth %d: %d in, %d kept", depth, len(level), len(alive))

        if not alive:
            established_at = depth
            level = []
            break
        expanded += len(alive)
        level = [child for c in alive for child in expand(c)]

    return SearchReport(
        ratio=str(r),
        max_depth=config.max_depth,
        dominance_enabled=config.dominance_enabled,
        survivor_count=len(level),
        survivors=level if config.collect_survivors else [],
        nodes_expanded=expanded,
        pruned_by_ratio=by_ratio,
        pruned_by_dominance=by_dominance,
        frontier_peak=max(sizes + [len(level)]),
        per_level_sizes=sizes,
        established_at=established_at,
    )


def min_establishing_depth(r: Ratio, depth_limit: int, opt: OptTable) -> Optional[int]:
    """Smallest depth d <= depth_limit at which the search leaves no survivors.

    One pass suffices: the kept set at level d is empty exactly when a
    depth-d search certifies, and once empty it stays empty.
    """
    report = run_search(SearchConfig(r, depth_limit, dominance_enabled=True), opt)
    return report.established_at
