import pytest
from hypothesis import given
from hypothesis import strategies as st

from listbatch.plans import BatchPlan, batch_completion_times, extend_cost, plan_cost
from helpers import fold_extend_cost
from oracles import all_plans, simulated_cost


@pytest.mark.parametrize(
    "setups,n,expected", [((0, 1, 2), 3, 12), ((0,), 3, 12), ((0, 2), 5, 27)]
)
def test_plan_cost_examples(setups, n, expected):
    assert plan_cost(BatchPlan(setups), n) == expected


@pytest.mark.parametrize(
    "setups,n,expected", [((0, 2), 5, [3, 7]), ((0,), 1, [2]), ((0, 1, 2), 3, [2, 4, 6])]
)
def test_completion_time_examples(setups, n, expected):
    assert batch_completion_times(BatchPlan(setups), n) == expected


@pytest.mark.parametrize(
    "args,expected", [((0, 0, 0, 1), 2), ((6, 2, 1, 3), 11), ((11, 2, 1, 4), 18)]
)
def test_extend_cost_examples(args, expected):
    assert extend_cost(*args) == expected


@pytest.mark.parametrize("setups", [(), (1,), (0, 0), (0, 3, 2)])
def test_invalid_plans(setups):
    with pytest.raises(ValueError):
        BatchPlan(setups)


@pytest.mark.parametrize("setups,n", [((0,), 0), ((0, 3), 3), ((0, 3), 2)])
def test_invalid_horizons(setups, n):
    with pytest.raises(ValueError):
        plan_cost(BatchPlan(setups), n)


def test_fold_agrees_with_plan_cost_exhaustively():
    checked = 0
    for n in range(1, 14):
        for setups in all_plans(n):
            plan = BatchPlan(setups)
            assert fold_extend_cost(setups, n) == plan_cost(plan, n)
            checked += 1
    assert checked == 2**13 - 1


def test_plan_cost_matches_clock_simulation():
    for n in range(1, 11):
        for setups in all_plans(n):
            assert plan_cost(BatchPlan(setups), n) == simulated_cost(setups, n)


@st.composite
def plans_with_horizon(draw):
    n = draw(st.integers(1, 60))
    inner = draw(st.sets(st.integers(1, n - 1), max_size=n - 1)) if n > 1 else set()
    return BatchPlan((0,) + tuple(sorted(inner))), n


@given(plans_with_horizon())
def test_cost_is_completion_times_weighted_by_size(pn):
    plan, n = pn
    times = batch_completion_times(plan, n)
    assert plan_cost(plan, n) == sum(t * s for t, s in zip(times, plan.batch_sizes(n)))
    assert all(a < b for a, b in zip(times, times[1:]))


@given(plans_with_horizon())
def test_cost_grows_with_horizon(pn):
    plan, n = pn
    assert plan_cost(plan, n + 1) > plan_cost(plan, n)


@pytest.mark.parametrize("n", range(1, 40))
def test_single_batch_closed_form(n):
    assert plan_cost(BatchPlan((0,)), n) == n * (n + 1)


def test_text_form():
    plan = BatchPlan((0, 2, 5))
    assert plan.format() == "0 2 5"
    assert plan.format(6) == "0 2 5 Cost 36"
