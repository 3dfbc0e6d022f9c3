# %% [markdown]
# # Exhaustive verification
#
# Connected classes come from canonical augmentation. Every graph in
# `G(m, r)` is a multiset of connected classes, and the maximum of `k` is
# found one edge-partition at a time.

# %%
from cliquemax.laws import check_averaging, check_colex_fold, connected_instances
from cliquemax.search import SearchSpec, enumerate_graphs, verify_kt, verify_main_theorem

print(len(list(enumerate_graphs(SearchSpec(3, 2)))), "classes with 3 edges and max degree 2")

for m in range(1, 11):
    rep = verify_main_theorem(m, 3)
    print(m, rep.f_value, rep.g_value, rep.agrees, rep.graphs_enumerated, rep.argmax_certificates)

# %% [markdown]
# Counting cliques of one size only.

# %%
print([verify_kt(m, 2, 3).f_value for m in range(1, 13)])

# %% [markdown]
# Law checks over every connected graph with at most 9 edges and `r = 3`.

# %%
inst = list(connected_instances([3], 9))
for rep in (check_colex_fold(inst), check_averaging(inst)):
    print(rep.law_id, rep.instances_checked, rep.vacuous, len(rep.violations))
