# %% [markdown]
# # Graphs, file formats and canonical forms
#
# Graphs are immutable bitset adjacency tables. Edge lists read and written by
# the package are 1-based; vertex masks and `Graph.edges()` are 0-based.

# %%
from cliquemax.graph_core import (
    canonical_form,
    components,
    disjoint_union,
    from_edges,
    from_graph6,
    parse_graph,
    to_edgelist,
    to_graph6,
)

k4 = from_edges([(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)])
c5 = from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
print(k4, "max degree", k4.max_degree())

# %% [markdown]
# graph6 is the usual exchange format; `parse_graph` also accepts edge lists
# and tells them apart by their first character.

# %%
text = to_graph6(k4)
print(text, from_graph6(text) == k4)
print(parse_graph(to_edgelist(c5)) == c5)

# %% [markdown]
# Two labelings of the same graph share one certificate. Disconnected graphs are
# canonized one component at a time, so many identical blocks stay cheap.

# %%
path_a = from_edges([(1, 2), (2, 3)])
path_b = from_edges([(2, 1), (1, 3)])
print(canonical_form(path_a) == canonical_form(path_b))

many = disjoint_union(*[k4] * 6, *[from_edges([(1, 2)])] * 8)
print(len(components(many)), "components, certificate", canonical_form(many)[:20], "...")
