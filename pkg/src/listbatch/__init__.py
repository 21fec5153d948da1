"""Exact certification of the competitive ratio of online list s-batching with unit jobs."""

from listbatch.lbsearch import (
    PartialCandidate,
    SearchConfig,
    SearchReport,
    dominates,
    expand,
    is_pruned_by_ratio,
    min_establishing_depth,
    root_candidate,
    run_search,
)
from listbatch.offline import (
    OptTable,
    TriangularDecomposition,
    build_opt_table,
    decompose,
    opt_cost_bruteforce,
    opt_cost_closed,
    optimal_first_batch_sizes,
)
from listbatch.plans import BatchPlan, batch_completion_times, extend_cost, plan_cost
from listbatch.ratio import Ordering, Ratio, compare_cost_ratio, make_ratio
from listbatch.rules import (
    BatchingRule,
    algorithm_d,
    breakpoints_up_to,
    prefix_costs,
    rule_to_plan,
)
from listbatch.ubverify import TailCertificate, UbReport, verify_prefix_ratios, verify_tail

__version__ = "0.1.0"
