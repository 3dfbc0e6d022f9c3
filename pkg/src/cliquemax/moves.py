"""Local moves at a cluster, the fixed loss of a red graph, and ``improve``.

All moves keep vertex labels of untouched vertices except colex folding,
which rebuilds the graph as the rest of ``G`` followed by a fresh colex block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cliques import clique_counts, k_total
from .clusters import ClusterDecomposition, analyze_cluster, find_clusters
from .colex import binom, build_colex
from .graph_core import Graph, bits, disjoint_union, is_connected, popcount, to_graph6

FL_MAX_VERTICES = 20


@dataclass(frozen=True)
class MoveOutcome:
    result: Graph
    kind: str
    delta_edges: int
    delta_k: int
    padding_K2: int = 0

    def padded(self) -> Graph:
        """``result`` plus ``padding_K2`` disjoint edges, restoring the edge budget."""
        return disjoint_union(self.result, *[Graph.complete(2)] * self.padding_K2)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "delta_edges": self.delta_edges,
            "delta_k": self.delta_k,
            "padding_K2": self.padding_K2,
            "result_graph6": to_graph6(self.result),
        }


def _outcome(g: Graph, result: Graph, kind: str, padding: int = 0) -> MoveOutcome:
    return MoveOutcome(
        result,
        kind,
        result.edge_count() - g.edge_count(),
        k_total(result) - k_total(g),
        padding,
    )


def fold(g: Graph, cd: ClusterDecomposition) -> MoveOutcome:
    """Make ``T + S`` a clique and delete the blue edges."""
    s = list(bits(cd.S))
    missing = [(u, v) for i, u in enumerate(s) for v in s[i + 1:] if not g.has_edge(u, v)]
    result = g.add_edges(missing).remove_edges(cd.blue_edges)
    return _outcome(g, result, "FOLD", max(cd.e_B - cd.e_R, 0))


def colex_fold(g: Graph, cd: ClusterDecomposition) -> MoveOutcome:
    """Delete ``T + S`` and append ``C(C(r+1,2) - e(R) + e(B))``."""
    if cd.e_B >= cd.e_R:
        raise ValueError(f"colex folding needs e(B) < e(R), got {cd.e_B} >= {cd.e_R}")
    rest = g.induced(g.vertex_mask & ~(cd.T | cd.S)).strip_isolated()
    block = build_colex(binom(cd.r + 1, 2) - cd.e_R + cd.e_B)
    return _outcome(g, disjoint_union(rest, block), "COLEX_FOLD")


def partial_fold(g: Graph, cd: ClusterDecomposition) -> MoveOutcome:
    """Swap the blue edges for the ``e(B)`` lexicographically least red edges."""
    if cd.e_B > cd.e_R:
        raise ValueError(f"partial folding needs e(B) <= e(R), got {cd.e_B} > {cd.e_R}")
    result = g.remove_edges(cd.blue_edges).add_edges(cd.red_edges[: cd.e_B])
    return _outcome(g, result, "PARTIAL_FOLD")


def fixed_loss(red: Graph) -> int:
    """Sum of ``2^(min degree in I) - 1`` over nonempty independent sets ``I``."""
    n = red.n
    if n > FL_MAX_VERTICES:
        raise ValueError(f"fixed loss limited to {FL_MAX_VERTICES} vertices, got {n}")
    adj = red.adj
    deg = [popcount(a) for a in adj]
    total = 0
    # independent sets grown in increasing vertex order
    stack = [(v, (1 << n) - 1 & ~((1 << (v + 1)) - 1) & ~adj[v], deg[v]) for v in range(n)]
    while stack:
        v, cand, low = stack.pop()
        total += (1 << low) - 1
        for w in bits(cand):
            stack.append((w, cand & ~((1 << (w + 1)) - 1) & ~adj[w], min(low, deg[w])))
    return total


def maxfl_bound(s: int) -> int:
    """``s(2^(s-1) - 1)``, the fixed loss of ``K_s``."""
    if s < 1:
        raise ValueError("s must be positive")
    return s * (2 ** (s - 1) - 1)


def flell_bound(s: int, ell: int) -> int | Fraction:
    """``5*2^(s-2) + (s-ell-2)*2^(s-ell-1)``; a Fraction when not integral."""
    if s < 1 or not 0 <= ell <= s:
        raise ValueError("need s >= 1 and 0 <= ell <= s")
    value = 5 * Fraction(2) ** (s - 2) + (s - ell - 2) * Fraction(2) ** (s - ell - 1)
    return int(value) if value.denominator == 1 else value


def improve(g: Graph, r: int) -> Optional[tuple[Graph, str]]:
    """One local move showing a connected ``g`` is not extremal, if any applies.

    Moves are tried in the order FOLD, COLEX_FOLD, PARTIAL_FOLD; within a kind
    the first qualifying cluster wins. A fold is padded with ``K_2``'s back to
    ``m`` edges and must strictly gain. A colex fold is accepted when it
    strictly gains, or when it ties and ``m > C(r+1,2)``: the result is then
    a graph in ``G(m,r)`` without a ``K_{r+1}``, which cannot be extremal.
    A partial fold needs ``|T| >= (r-1)/2``, ``1 <= e(B) < e(R)`` and a strict
    gain. Returns ``None`` when no move applies.
    """
    if not is_connected(g):
        raise ValueError("improve expects a connected graph")
    m = g.edge_count()
    k = k_total(g)
    cds = [analyze_cluster(g, r, t) for t in find_clusters(g, r)]
    for cd in cds:
        if cd.e_B >= cd.e_R:
            out = fold(g, cd)
            if out.delta_k > 0:
                return out.padded(), "FOLD"
    for cd in cds:
        if cd.e_B < cd.e_R <= r:
            out = colex_fold(g, cd)
            if out.delta_k > 0 or (out.delta_k == 0 and m > binom(r + 1, 2)):
                return out.result, "COLEX_FOLD"
    for cd in cds:
        if 1 <= cd.e_B < cd.e_R and 2 * cd.size >= r - 1:
            out = partial_fold(g, cd)
            if out.delta_k > 0:
                return out.result, "PARTIAL_FOLD"
    return None


def blue_clique_counts(g: Graph, cd: ClusterDecomposition) -> dict[int, int]:
    """Number of ``t``-cliques containing at least one blue edge, by ``t``."""
    blue = set(cd.blue_edges)
    without = g.remove_edges(blue)
    all_counts = clique_counts(g.adj, g.vertex_mask)
    kept = clique_counts(without.adj, without.vertex_mask)
    return {
        t: all_counts[t] - (kept[t] if t < len(kept) else 0)
        for t in range(2, len(all_counts))
    }
