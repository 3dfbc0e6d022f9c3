"""Exact clique counting over bitset adjacency."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph_core import Edge, Graph, bits


@dataclass(frozen=True)
class CliqueProfile:
    """Counts ``k_t`` for ``t >= 2``; missing sizes count zero."""

    counts: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, t: int) -> int:
        return self.counts.get(t, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def max_size(self) -> int:
        return max(self.counts, default=1)

    def __add__(self, other: CliqueProfile) -> CliqueProfile:
        out = dict(self.counts)
        for t, k in other.counts.items():
            out[t] = out.get(t, 0) + k
        return CliqueProfile(out)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self[t] for t in range(2, self.max_size + 1))

    def to_json(self) -> dict:
        return {"k": {str(t): self.counts[t] for t in sorted(self.counts)}, "total": self.total}


def _count(adj, cand: int, counts: list[int], depth: int) -> None:
    # depth = size of the clique being extended
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if len(counts) <= depth + 1:
            counts.append(0)
        counts[depth + 1] += 1
        nxt = cand & adj[v]
        if nxt:
            _count(adj, nxt, counts, depth + 1)


def clique_counts(adj, mask: int) -> list[int]:
    """``counts[t]`` = number of ``t``-cliques inside ``mask``; ``counts[0] = 1``."""
    counts = [1]
    _count(adj, mask, counts, 0)
    return counts


def clique_profile(g: Graph) -> CliqueProfile:
    counts = clique_counts(g.adj, g.vertex_mask)
    return CliqueProfile({t: k for t, k in enumerate(counts) if t >= 2 and k})


def k_total(g: Graph) -> int:
    return sum(clique_counts(g.adj, g.vertex_mask)[2:])


def kt(g: Graph, t: int) -> int:
    counts = clique_counts(g.adj, g.vertex_mask)
    return counts[t] if t < len(counts) else 0


def kt_per_edge(g: Graph, t: int) -> dict[Edge, int]:
    """Number of ``t``-cliques through each edge, via its common neighborhood."""
    if t < 2:
        raise ValueError("t must be at least 2")
    out = {}
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        counts = clique_counts(g.adj, common)
        out[(u, v)] = counts[t - 2] if t - 2 < len(counts) else 0
    return out


def cliques(g: Graph, mask: int | None = None) -> list[int]:
    """All cliques of size >= 1 inside ``mask`` as vertex bitmasks."""
    adj = g.adj
    out: list[int] = []

    def extend(clique: int, cand: int) -> None:
        while cand:
            low = cand & -cand
            cand ^= low
            grown = clique | low
            out.append(grown)
            extend(grown, cand & adj[low.bit_length() - 1])

    extend(0, g.vertex_mask if mask is None else mask)
    return out


def is_clique(g: Graph, k: int) -> bool:
    return all((g.adj[v] | (1 << v)) & k == k for v in bits(k))
