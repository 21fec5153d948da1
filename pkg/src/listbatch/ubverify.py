"""Upper-bound certification for a batching rule.

Two halves: an exact prefix check of cost against ``r * opt`` for every
job count up to a limit, and an analytic per-job bound for a rule's
periodic tail.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from listbatch.offline import OptTable
from listbatch.ratio import Ordering, Ratio, checked, compare_cost_ratio
from listbatch.rules import BatchingRule, prefix_costs


@dataclass
class UbReport:
    ratio: str
    checked_to: int
    max_ratio_n: int
    max_ratio_cost: int
    max_ratio_opt: int
    violations: list[tuple[int, int, int]] = field(default_factory=list)
    # prefixes where cost/opt equals the bound exactly (allowed, but worth knowing)
    ties: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        d = asdict(self)
        d["violations"] = [list(v) for v in self.violations]
        return d


@dataclass
class TailCertificate:
    ratio: str
    setups_before_tail: int
    tail_period: int
    tail_start: int
    threshold_i: Optional[int]
    holds: bool
    prefix_certified: bool

    @property
    def certified(self) -> bool:
        """Tail bound plus a violation-free prefix up to the tail start."""
        return self.holds and self.prefix_certified

    def to_dict(self) -> dict:
        d = asdict(self)
        d["certified"] = self.certified
        return d


def verify_prefix_ratios(rule: BatchingRule, r: Ratio, max_n: int, opt: OptTable) -> UbReport:
    """Compare the rule's cost on every 1..max_n jobs against ``r * opt``.

    Equality is not a violation.  The argmax prefix keeps the smallest n
    among ties.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    opt.require(max_n)
    costs = prefix_costs(rule, max_n)
    best_n, best_cost, best_opt = 1, costs[0], opt[1]
    violations = []
    ties = []
    for n, cost in enumerate(costs, start=1):
        o = opt[n]
        verdict = compare_cost_ratio(cost, o, r)
        if verdict is Ordering.GREATER:
            violations.append((n, cost, o))
        elif verdict is Ordering.EQUAL:
            ties.append(n)
        if checked(cost * best_opt) > checked(best_cost * o):
            best_n, best_cost, best_opt = n, cost, o
    return UbReport(str(r), max_n, best_n, best_cost, best_opt, violations, ties)


def tail_job_bound(rule: BatchingRule, i: int) -> int:
    """Upper bound on the completion time of job i once the tail is active.

    Setups before the tail, plus one per tail breakpoint below i, plus i
    itself, plus at most period-1 later jobs sharing its batch.
    """
    if rule.tail is None:
        raise ValueError("rule has no tail")
    start, period = rule.tail
    if i <= start:
        raise ValueError(f"job {i} is not in the tail (starts after {start})")
    return rule.setups_before_tail + -(-(i - start) // period) + i + period - 1


def _per_job_threshold(S: int, T: int, start: int, r: Fraction) -> Optional[int]:
    # ceil((i-start)/T) <= (i-start)/T + (T-1)/T, so the bound is slope*i + const.
    slope = Fraction(T + 1, T)
    const = S - Fraction(start, T) + Fraction(T - 1, T) + T - 1
    # need slope*i + const <= r*(i+1), i.e. (r - slope)*i >= const - r
    gap = r - slope
    need = const - r
    if gap == 0:
        return 1 if need <= 0 else None
    if gap < 0:
        return None
    return max(1, math.ceil(need / gap))


def verify_tail(rule: BatchingRule, r: Ratio, opt: OptTable) -> TailCertificate:
    """Certify that every job in the rule's tail costs at most r times its optimum share.

    Job i contributes at least i+1 to any schedule's cost.  The certificate
    finds the first i from which the linearised online bound stays under
    ``r*(i+1)``, and separately checks the rule's prefixes up to the tail
    start so the two halves hand off.
    """
    if rule.tail is None:
        raise ValueError("rule has no tail; nothing to certify beyond the prefix")
    start, period = rule.tail
    opt.require(start)
    S = rule.setups_before_tail
    threshold = _per_job_threshold(S, period, start, Fraction(r.p, r.q))
    holds = threshold is not None and threshold <= start + 1
    prefix = verify_prefix_ratios(rule, r, start, opt)
    return TailCertificate(str(r), S, period, start, threshold, holds, prefix.passed)
