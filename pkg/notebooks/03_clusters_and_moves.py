# %% [markdown]
# # Clusters and local moves
#
# A cluster is a maximal clique `T` of degree-`r` vertices whose common
# neighborhood `S` has exactly `r + 1 - |T|` vertices. Missing edges inside
# `S` are red, and edges leaving `T + S` from `S` are blue.

# %%
from cliquemax.cliques import k_total
from cliquemax.clusters import analyze_cluster, classify_cluster, find_clusters
from cliquemax.graph_core import from_edges, from_graph6, to_graph6
from cliquemax.moves import colex_fold, fold, improve, partial_fold

k4_minus = from_edges([(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
(t,) = find_clusters(k4_minus, 3)
cd = analyze_cluster(k4_minus, 3, t)
print(cd.to_json(), classify_cluster(k4_minus, 3, t).value)

# %% [markdown]
# Folding fills in the red edges and drops the blue ones. A colex fold moves
# the same edge budget into a fresh colex block instead.

# %%
print(fold(k4_minus, cd).to_json())
print(colex_fold(k4_minus, cd).to_json())
print(partial_fold(k4_minus, cd).to_json())

# %% [markdown]
# `improve` looks for one move that shows a connected graph is not extremal.

# %%
h = from_graph6("F?C~?")
better, case = improve(h, 3)
print(case, to_graph6(better), k_total(h), "->", k_total(better))
