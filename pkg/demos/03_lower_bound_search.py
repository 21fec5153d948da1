# %% [markdown]
# # The lower bound by exhaustive search
#
# A deterministic online algorithm is a path in a binary tree: for job i it
# either joins the open batch or starts a new one.  We search that tree
# level by level, dropping a node once cost/opt reaches 619/583 (the
# adversary stops there) and dropping nodes beaten by a sibling with the
# same last setup, no higher cost and no more setups.

# %%
import time

from listbatch import SearchConfig, build_opt_table, make_ratio, min_establishing_depth, run_search

bound = make_ratio(619, 583)
opt = build_opt_table(120)

t = time.perf_counter()
report = run_search(SearchConfig(bound, 100), opt)
print(f"depth 100: {report.survivor_count} survivors, {report.nodes_expanded} nodes, "
      f"{time.perf_counter() - t:.3f}s")
print("frontier per level:", report.per_level_sizes)

# %% [markdown]
# Depth 100 is exactly what is needed.  At 99 a few plans still stay
# strictly below the bound on every prefix:

# %%
shallow = run_search(SearchConfig(bound, 99, collect_survivors=True), opt)
for c in shallow.survivors:
    print(c.format())
print("minimal establishing depth:", min_establishing_depth(bound, 120, opt))

# %% [markdown]
# Smaller ratios are established sooner.

# %%
for p in (590, 600, 610, 615, 618, 619):
    print(f"{p}/583 -> depth {min_establishing_depth(make_ratio(p, 583), 120, opt)}")

# %% [markdown]
# Dominance is an optimisation only.  Ratio pruning alone reaches the same
# verdict, just with many more nodes.

# %%
t = time.perf_counter()
plain = run_search(SearchConfig(bound, 100, dominance_enabled=False, audit_fraction=0), opt)
print(f"no dominance: {plain.survivor_count} survivors, {plain.nodes_expanded} nodes, "
      f"peak frontier {plain.frontier_peak}, {time.perf_counter() - t:.1f}s")
