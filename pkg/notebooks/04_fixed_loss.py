# %% [markdown]
# # Fixed loss of a red graph
#
# The fixed loss sums `2^(min degree in I) - 1` over the nonempty independent
# sets `I` of a red graph. Complete graphs attain the maximum `s(2^(s-1) - 1)`.

# %%
from cliquemax.graph_core import Graph
from cliquemax.laws import check_fixed_loss_bounds, graphs_on
from cliquemax.moves import fixed_loss, flell_bound, maxfl_bound

for s in range(1, 8):
    print(s, fixed_loss(Graph.complete(s)), maxfl_bound(s))

# %% [markdown]
# Largest value among the non-complete graphs on five vertices, then the
# exhaustive check over all graphs with at most seven vertices.

# %%
runner_up = max((fixed_loss(r), r.edges()) for r in graphs_on(5) if r.edge_count() < 10)
print(runner_up, flell_bound(5, 0))
report = check_fixed_loss_bounds(7)
print(report.instances_checked, "graphs checked, violations:", len(report.violations))
