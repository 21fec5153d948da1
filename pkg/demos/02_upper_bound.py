# %% [markdown]
# # Certifying algorithm D at 619/583
#
# Algorithm D opens a new batch after a fixed list of job counts, then every
# 40 jobs from 2000 on.  Its cost on every prefix is checked exactly against
# 619/583 times the optimum; beyond 2000 jobs a per-job bound takes over.

# %%
from fractions import Fraction

from listbatch import algorithm_d, build_opt_table, make_ratio, prefix_costs
from listbatch import verify_prefix_ratios, verify_tail

rule = algorithm_d()
bound = make_ratio(619, 583)
opt = build_opt_table(2000)

report = verify_prefix_ratios(rule, bound, 2000, opt)
print("violations:", report.violations)
print(f"worst prefix: n={report.max_ratio_n}, cost {report.max_ratio_cost} / opt {report.max_ratio_opt}")
print("prefixes exactly on the bound:", report.ties)

# %% [markdown]
# The worst prefix is tight: at 29 jobs the ratio is exactly 619/583.
# A few neighbouring prefixes for context:

# %%
costs = prefix_costs(rule, 40)
for n in range(24, 35):
    r = Fraction(costs[n - 1], opt[n])
    print(f"n={n:3d} cost={costs[n - 1]:5d} opt={opt[n]:5d} ratio={r} ({float(r):.5f})")

# %% [markdown]
# Tail: once batches are 40 jobs long, each job's completion time is at
# most (41/40) i plus a constant, while it contributes at least i+1 to any
# schedule.  The certificate finds where that per-job ratio drops below the
# bound and checks the prefix hands off.

# %%
cert = verify_tail(rule, bound, opt)
print(cert)
print("certified overall:", report.passed and cert.certified)

# %% [markdown]
# D is not 1-competitive; the first strict excess is at 5 jobs.

# %%
print(verify_prefix_ratios(rule, make_ratio(1, 1), 2000, opt).violations[:3])
