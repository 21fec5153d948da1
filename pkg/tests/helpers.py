from listbatch.plans import extend_cost

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def fold_extend_cost(setups, n):
    """Build a plan's cost one job at a time with extend_cost."""
    cost = 0
    for i in range(1, n + 1):
        opened = [s for s in setups if s < i]
        cost = extend_cost(cost, opened[-1], len(opened) - 1, i)
    return cost
