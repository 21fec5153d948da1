# %% [markdown]
# # Offline optimum for unit jobs
#
# With every job taking one unit and every batch paying one unit of setup,
# the best offline batching of n jobs has a closed form built on the
# triangular decomposition n = m(m+1)/2 + k.  Here we compare it with a
# plain dynamic program and look at the optimal first batch.

# %%
from listbatch import build_opt_table, decompose, opt_cost_bruteforce, opt_cost_closed
from listbatch import optimal_first_batch_sizes
from listbatch.offline import bruteforce_costs

for n in (1, 3, 5, 10, 21, 100):
    d = decompose(n)
    print(f"n={n:4d}  m={d.m:3d} k={d.k:3d}  closed={opt_cost_closed(n):7d}  dp={opt_cost_bruteforce(n):7d}")

# %% [markdown]
# The table builder uses an incremental recurrence; it agrees with the
# closed form everywhere we care about.

# %%
table = build_opt_table(2001)
assert all(table[n] == opt_cost_closed(n) for n in range(len(table)))
print("opt[0..10] =", list(table.costs[:11]))

# %% [markdown]
# Optimal first batches grow like sqrt(2n).  Between triangular numbers
# there are two equally good choices.

# %%
brute = bruteforce_costs(40)
for n in (6, 7, 9, 10, 28, 30):
    print(n, sorted(optimal_first_batch_sizes(n)), "cost", brute[n])
