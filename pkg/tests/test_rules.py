import pytest

from listbatch.plans import BatchPlan, plan_cost
from listbatch.rules import (
    D_BREAKPOINTS,
    BatchingRule,
    algorithm_d,
    breakpoints_up_to,
    format_rule,
    load_rule,
    parse_rule,
    prefix_costs,
    rule_to_plan,
)


def test_algorithm_d_shape():
    d = algorithm_d()
    assert d.breakpoints[0] == 2
    assert len(d.breakpoints) == 47
    assert d.breakpoints[46] == 1760
    assert d.tail == (2000, 40)
    assert d.setups_before_tail == 48


def test_breakpoints_up_to():
    d = algorithm_d()
    assert breakpoints_up_to(d, 10) == [2, 5, 9]
    assert breakpoints_up_to(d, 1) == []
    assert breakpoints_up_to(d, 2040)[-3:] == [1760, 2000, 2040]
    assert breakpoints_up_to(d, 2085)[-3:] == [2000, 2040, 2080]
    assert breakpoints_up_to(d, 1999) == list(D_BREAKPOINTS)


def test_rule_to_plan():
    d = algorithm_d()
    assert rule_to_plan(d, 5) == BatchPlan((0, 2))
    assert rule_to_plan(d, 6) == BatchPlan((0, 2, 5))
    assert rule_to_plan(d, 1) == BatchPlan((0,))


def test_prefix_costs_examples(opt3000):
    d = algorithm_d()
    assert prefix_costs(d, 2) == [2, 6]
    assert prefix_costs(d, 5) == [2, 6, 11, 18, 27]
    assert prefix_costs(d, 3)[2] == 11 == opt3000[3]


def test_prefix_costs_match_plan_cost_for_d():
    d = algorithm_d()
    costs = prefix_costs(d, 3000)
    assert all(costs[i - 1] == plan_cost(rule_to_plan(d, i), i) for i in range(1, 3001))


def test_plans_extend_monotonically():
    d = algorithm_d()
    for n in range(1, 2500):
        a, b = rule_to_plan(d, n).setups, rule_to_plan(d, n + 1).setups
        assert b[: len(a)] == a and len(b) - len(a) in (0, 1)


def test_tail_batches_hold_forty_jobs():
    sizes = rule_to_plan(algorithm_d(), 4000).batch_sizes(4000)
    # batches opened at 2000, 2040, ... up to the last full one
    assert sizes[48:-1] and set(sizes[48:-1]) == {40}
    assert max(sizes[48:]) == 40


@pytest.mark.parametrize(
    "kwargs",
    [
        {"breakpoints": (0, 3)},
        {"breakpoints": (3, 3)},
        {"breakpoints": (5, 3)},
        {"breakpoints": (5,), "tail": (5, 2)},
        {"breakpoints": (), "tail": (10, 0)},
    ],
)
def test_invalid_rules(kwargs):
    with pytest.raises(ValueError):
        BatchingRule(**kwargs)


def test_rule_file_roundtrip(tmp_path):
    d = algorithm_d()
    path = tmp_path / "d.txt"
    path.write_text(format_rule(d))
    assert load_rule(path) == d


def test_rule_file_comments_and_finite():
    rule = parse_rule("# two batches\n3\n\n7  # then one more\n")
    assert rule == BatchingRule((3, 7))
    assert rule.tail is None


@pytest.mark.parametrize("text", ["tail 10 5\n12\n", "1 2\n", "x\n", "tail 10\n"])
def test_rule_file_errors(text):
    with pytest.raises(ValueError):
        parse_rule(text)
