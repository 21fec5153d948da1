# %% [markdown]
# # Trying your own rule
#
# Rules can be written as text: one breakpoint per line and an optional
# `tail START PERIOD` line.  Here is a rule whose batches grow by one job
# each time, opening new batches after 3, 6, 10, 15, ... jobs.

# %%
from listbatch import build_opt_table, make_ratio, verify_prefix_ratios, verify_tail
from listbatch.rules import format_rule, parse_rule

text = "\n".join(str(t * (t + 1) // 2) for t in range(2, 60)) + "\ntail 1800 60\n"
rule = parse_rule(text)
print(format_rule(rule).splitlines()[:5], "...")

opt = build_opt_table(2000)
report = verify_prefix_ratios(rule, make_ratio(619, 583), 2000, opt)
print(f"{len(report.violations)} violations; worst n={report.max_ratio_n} "
      f"at {report.max_ratio_cost}/{report.max_ratio_opt}")

# %% [markdown]
# Loosening the bound shows how far from 619/583 this rule is.

# %%
ratio = make_ratio(report.max_ratio_cost, report.max_ratio_opt)
print("passes at its own worst ratio:", verify_prefix_ratios(rule, ratio, 2000, opt).passed)
print(verify_tail(rule, ratio, opt))

# %% [markdown]
# The same file works from the command line:
#
#     listbatch verify-upper --rule my_rule.txt --ratio 619/583 --max-n 2000
