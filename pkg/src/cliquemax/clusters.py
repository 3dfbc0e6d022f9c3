"""Tight cliques, clusters and the red/blue picture around a cluster.

A clique ``T`` is tight when it has exactly ``r + 1 - |T|`` common
neighbors; a cluster is a maximal tight clique. Every vertex of a tight
clique has degree ``r`` and the same closed neighborhood, so clusters are
the classes of degree-``r`` vertices grouped by closed neighborhood.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cliques import is_clique
from .graph_core import Edge, Graph, bits, common_neighborhood, complement_within, is_connected, popcount


class Case(str, Enum):
    FOLD = "FOLD"
    COLEX_FOLD = "COLEX_FOLD"
    PARTIAL_FOLD = "PARTIAL_FOLD"
    UNFOLDABLE = "UNFOLDABLE"
    HEAVY_RED = "HEAVY_RED"


@dataclass(frozen=True)
class ClusterDecomposition:
    T: int
    S: int
    red_edges: tuple[Edge, ...]
    blue_edges: tuple[Edge, ...]
    r: int

    @property
    def e_R(self) -> int:
        return len(self.red_edges)

    @property
    def e_B(self) -> int:
        return len(self.blue_edges)

    @property
    def size(self) -> int:
        return popcount(self.T)

    @property
    def s(self) -> int:
        return popcount(self.S)

    def red_graph(self) -> Graph:
        """The red graph on ``S`` alone, vertices relabeled ``0..s-1``."""
        keep = list(bits(self.S))
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_pairs(len(keep), [(index[u], index[v]) for u, v in self.red_edges])

    def red_degree(self, x: int) -> int:
        return sum(x in e for e in self.red_edges)

    def blue_degree(self, x: int) -> int:
        return sum(x in e for e in self.blue_edges)

    def to_json(self) -> dict:
        return {
            "T": [v + 1 for v in bits(self.T)],
            "S": [v + 1 for v in bits(self.S)],
            "red_edges": [[u + 1, v + 1] for u, v in self.red_edges],
            "blue_edges": [[u + 1, v + 1] for u, v in self.blue_edges],
            "e_R": self.e_R,
            "e_B": self.e_B,
        }


def check_degree_bound(g: Graph, r: int) -> None:
    """Raise ``ValueError`` naming the first vertex of degree above ``r``."""
    for v, a in enumerate(g.adj):
        if popcount(a) > r:
            raise ValueError(f"vertex {v + 1} has degree {popcount(a)} > r={r}")


def is_tight(g: Graph, r: int, k: int) -> bool:
    if not k or not is_clique(g, k):
        raise ValueError("tightness is defined for nonempty cliques only")
    return popcount(common_neighborhood(g, k)) == r + 1 - popcount(k)


def find_clusters(g: Graph, r: int) -> list[int]:
    """Clusters as vertex masks, ordered by least vertex."""
    classes: dict[int, int] = {}
    for v, a in enumerate(g.adj):
        if popcount(a) == r:
            closed = a | (1 << v)
            classes[closed] = classes.get(closed, 0) | (1 << v)
    return sorted(classes.values(), key=lambda t: t & -t)


def analyze_cluster(g: Graph, r: int, t: int) -> ClusterDecomposition:
    if t not in find_clusters(g, r):
        raise ValueError("not a cluster of this graph")
    s = common_neighborhood(g, t)
    red = tuple(complement_within(g, s).edges())
    inside = t | s
    blue = []
    for x in bits(s):
        for y in bits(g.adj[x] & ~inside):
            blue.append((min(x, y), max(x, y)))
    return ClusterDecomposition(t, s, red, tuple(sorted(blue)), r)


def tight_edges(g: Graph, r: int) -> set[Edge]:
    return {(u, v) for u, v in g.edges() if popcount(g.adj[u] & g.adj[v]) == r - 1}


def classify_cluster(g: Graph, r: int, t: int) -> Case:
    """Which local move (if any) the cluster ``t`` admits.

    FOLD needs a strict gain and ``e(B) >= e(R)``; COLEX_FOLD needs
    ``e(B) < e(R) <= r``; PARTIAL_FOLD needs ``e(B) < e(R)`` and
    ``|T| >= (r-1)/2``. Otherwise the cluster is UNFOLDABLE when folding does
    not gain, else HEAVY_RED (then ``e(R) >= r+1`` and ``|T| <= (r-2)/2``).
    """
    from .moves import fold

    if not is_connected(g):
        raise ValueError("classification is defined for connected graphs")
    cd = analyze_cluster(g, r, t)
    gain = fold(g, cd).delta_k
    if gain > 0 and cd.e_B >= cd.e_R:
        return Case.FOLD
    if cd.e_B < cd.e_R <= r:
        return Case.COLEX_FOLD
    if cd.e_B < cd.e_R and 2 * cd.size >= r - 1:
        return Case.PARTIAL_FOLD
    if gain <= 0:
        return Case.UNFOLDABLE
    return Case.HEAVY_RED
