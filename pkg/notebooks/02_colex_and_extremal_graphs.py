# %% [markdown]
# # Colex graphs and the extremal family
#
# `C(m)` takes the first `m` pairs in colex order. With a degree bound `r`,
# write `m = a*C(r+1,2) + b`. The candidate maximizer is `a` copies of
# `K_{r+1}` next to `C(b)`, and `g(m, r)` counts its cliques.

# %%
from cliquemax.cliques import clique_profile, k_total
from cliquemax.colex import build_colex, colex_unrank, decompose, extremal_family, g, k_colex

print([colex_unrank(i) for i in range(1, 8)])
for b in range(7):
    print(b, clique_profile(build_colex(b)).as_tuple(), k_colex(b))

# %% [markdown]
# When `b = C(c,2) + 1`, a second graph ties: `K_c` plus a separate edge.

# %%
for m in (6, 7, 10, 13):
    dec = decompose(m, 3)
    fam = extremal_family(m, 3)
    print(f"m={m}: a={dec.a} b={dec.b} c={dec.c} d={dec.d} g={g(m, 3)} family size {len(fam)}")
    assert all(k_total(h) == g(m, 3) for h in fam)
