"""Isomorph-free enumeration of bounded-degree graphs and the extremal search.

Connected graphs are generated by canonical augmentation on edges: a child
is kept when deleting its canonical last edge (chosen among edges whose
removal keeps it connected, isolated vertices dropped) gives back the
parent's isomorphism class. Graphs with several components are multisets of
connected classes, which makes the full class ``G(m, r)`` a product over
edge-count partitions. Since ``k`` and every ``k_t`` add over components,
maxima over ``G(m, r)`` come from the connected maxima by a partition scan.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .cliques import clique_counts
from .colex import extremal_family, g, gt
from .graph_core import (
    CapacityError,
    Graph,
    bits,
    canonical_form,
    canonical_order,
    disjoint_union,
    from_graph6,
    popcount,
    to_graph6,
)

MAX_CLASSES = 10**8
SPLIT_DEPTH = 5


@dataclass(frozen=True)
class SearchSpec:
    m: int
    r: int
    t_filter: Optional[int] = None
    thread_count: int = 1
    connected_only: bool = False
    force: bool = False

    def __post_init__(self):
        if self.m < 1 or self.r < 1:
            raise ValueError("need m >= 1 and r >= 1")
        if self.thread_count < 1:
            raise ValueError("thread_count must be positive")


@dataclass
class SearchReport:
    m: int
    r: int
    f_value: int
    g_value: int
    agrees: bool
    argmax_certificates: list[str]
    graphs_enumerated: int
    t: Optional[int] = None
    expected_certificates: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"m": self.m, "r": self.r}
        if self.t is not None:
            out["t"] = self.t
        out.update(
            f=self.f_value,
            g=self.g_value,
            agrees=self.agrees,
            graphs_enumerated=self.graphs_enumerated,
            argmax=self.argmax_certificates,
        )
        if self.expected_certificates:
            out["expected"] = self.expected_certificates
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())


# -- connected classes by canonical augmentation ---------------------------


def _stays_connected(adj: tuple[int, ...], u: int, v: int) -> bool:
    """Whether deleting ``uv`` leaves one component once isolated vertices go."""
    if popcount(adj[u]) == 1 or popcount(adj[v]) == 1:
        return True
    seen = frontier = 1 << u
    target = 1 << v
    while frontier:
        nxt = 0
        for w in bits(frontier):
            row = adj[w]
            if w == u:
                row &= ~target
            elif w == v:
                row &= ~(1 << u)
            nxt |= row
        frontier = nxt & ~seen
        if frontier & target:
            return True
        seen |= frontier
    return False


def _edge_invariant(adj: tuple[int, ...], u: int, v: int) -> tuple:
    du, dv = popcount(adj[u]), popcount(adj[v])
    return (min(du, dv) == 1, -popcount(adj[u] & adj[v]), max(du, dv), min(du, dv))


def _children(
    parent: Graph, cert: bytes, r: int, max_vertices: Optional[int]
) -> Iterator[tuple[Graph, bytes]]:
    adj = list(parent.adj)
    n = parent.n
    deg = [popcount(a) for a in adj]
    candidates = []
    for u in range(n):
        if deg[u] >= r:
            continue
        for v in range(u + 1, n):
            if deg[v] < r and not adj[u] >> v & 1:
                candidates.append((u, v, n))
        if max_vertices is None or n < max_vertices:
            candidates.append((u, n, n + 1))
    seen: set[bytes] = set()
    for u, v, nn in candidates:
        row = adj + [0] * (nn - n)
        row[u] |= 1 << v
        row[v] |= 1 << u
        a = tuple(row)
        mine = _edge_invariant(a, u, v)
        # the canonical last edge maximizes the invariant, so reject early
        ties = []
        rejected = False
        for x in range(nn):
            for y in bits(a[x] >> (x + 1)):
                y += x + 1
                inv = _edge_invariant(a, x, y)
                if inv > mine and _stays_connected(a, x, y):
                    rejected = True
                    break
                if inv == mine:
                    ties.append((x, y))
            if rejected:
                break
        if rejected:
            continue
        child = Graph(nn, a)
        order = canonical_order(child)
        pos = [0] * nn
        for i, w in enumerate(order):
            pos[w] = i
        last = max(
            (max(pos[x], pos[y]), min(pos[x], pos[y]), x, y)
            for x, y in ties
            if _stays_connected(a, x, y)
        )
        child_cert = to_graph6(child.relabel(order)).encode("ascii")
        if child_cert in seen:
            continue
        if (last[2], last[3]) != (u, v):
            back = child.remove_edges([(last[2], last[3])]).strip_isolated()
            if canonical_form(back) != cert:
                continue
        seen.add(child_cert)
        yield child, child_cert


_K2 = Graph.complete(2)


def _grow(
    root: Graph, cert: bytes, depth: int, m_max: int, r: int, max_vertices: Optional[int]
) -> list[list[bytes]]:
    """Certificates of all descendants of ``root`` (itself included), by edge count."""
    levels: list[list[bytes]] = [[] for _ in range(m_max + 1)]
    stack = [(root, cert, depth)]
    while stack:
        node, c, m = stack.pop()
        levels[m].append(c)
        if m < m_max:
            for child, cc in _children(node, c, r, max_vertices):
                stack.append((child, cc, m + 1))
    return levels


def _grow_task(args) -> list[list[bytes]]:
    g6, cert, depth, m_max, r, max_vertices = args
    return _grow(from_graph6(g6), cert, depth, m_max, r, max_vertices)


def _split(m_max: int, r: int, max_vertices: Optional[int], depth: int):
    """Nodes of the augmentation tree at ``depth`` edges plus all shallower certificates."""
    shallow: list[list[bytes]] = [[] for _ in range(m_max + 1)]
    frontier = [(_K2, canonical_form(_K2))]
    for m in range(1, depth):
        nxt = []
        for node, c in frontier:
            shallow[m].append(c)
            nxt.extend(_children(node, c, r, max_vertices))
        frontier = nxt
    return shallow, frontier


def compute_connected(
    m_max: int, r: int, max_vertices: Optional[int] = None, jobs: int = 1
) -> tuple[tuple[bytes, ...], ...]:
    """Sorted canonical certificates of connected graphs with Δ <= r, by edge count.

    Entry ``m`` lists every class with exactly ``m`` edges (entry 0 is empty).
    With ``jobs > 1`` the tree is cut at a fixed depth and the subtrees are
    grown in worker processes; the merged result does not depend on ``jobs``.
    """
    levels: list[list[bytes]] = [[] for _ in range(m_max + 1)]
    if m_max >= 1:
        depth = min(SPLIT_DEPTH, m_max)
        shallow, frontier = _split(m_max, r, max_vertices, depth)
        tasks = [(to_graph6(node), c, depth, m_max, r, max_vertices) for node, c in frontier]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_grow_task, tasks, chunksize=1))
        else:
            parts = [_grow(node, c, depth, m_max, r, max_vertices) for node, c in frontier]
        for m in range(m_max + 1):
            levels[m].extend(shallow[m])
            for part in parts:
                levels[m].extend(part[m])
    return tuple(tuple(sorted(level)) for level in levels)


_TABLES: dict[tuple[int, Optional[int]], tuple[tuple[bytes, ...], ...]] = {}


def connected_certificates(
    m_max: int, r: int, max_vertices: Optional[int] = None, jobs: int = 1
) -> tuple[tuple[bytes, ...], ...]:
    """Memoized :func:`compute_connected`; a deeper table serves shallower requests."""
    key = (r, max_vertices)
    table = _TABLES.get(key)
    if table is None or len(table) <= m_max:
        table = _TABLES[key] = compute_connected(m_max, r, max_vertices, jobs)
    return table[: m_max + 1]


def connected_graphs(m: int, r: int, jobs: int = 1, max_vertices: Optional[int] = None) -> list[Graph]:
    """One canonical representative per connected class with ``m`` edges."""
    return [from_graph6(c) for c in connected_certificates(m, r, max_vertices, jobs)[m]]


# -- all classes as multisets of connected classes --------------------------


def _partitions(m: int, largest: int) -> Iterator[list[int]]:
    if m == 0:
        yield []
        return
    for part in range(min(m, largest), 0, -1):
        for rest in _partitions(m - part, part):
            yield [part] + rest


def _multisets(groups: list[tuple[int, int]], pools: dict[int, list]) -> Iterator[tuple]:
    """Choices of ``count`` members (with repetition) from ``pools[size]`` per group."""
    per_group = [
        list(itertools.combinations_with_replacement(pools[size], count)) for size, count in groups
    ]
    for combo in itertools.product(*per_group):
        yield tuple(x for part in combo for x in part)


def count_classes(m: int, connected_counts: list[int]) -> int:
    """Number of multisets of connected classes with ``m`` edges in total."""
    ways = [1] + [0] * m
    for size in range(1, m + 1):
        for _ in range(connected_counts[size]):
            for total in range(size, m + 1):
                ways[total] += ways[total - size]
    return ways[m]


def estimate_classes(m: int, r: int) -> int:
    """Rough count of connected classes, extrapolated from a shallow enumeration."""
    probe = min(m, 7)
    counts = [len(level) for level in connected_certificates(probe, r)]
    if m == probe:
        return counts[m]
    ratio = counts[probe] / max(counts[probe - 1], 1)
    return int(counts[probe] * (1.25 * ratio) ** (m - probe))


def _guard(spec: SearchSpec) -> None:
    if spec.force:
        return
    estimate = estimate_classes(spec.m, spec.r)
    if estimate > MAX_CLASSES:
        raise CapacityError(
            f"(m={spec.m}, r={spec.r}) needs about {estimate:.3g} connected classes; "
            f"limit {MAX_CLASSES:.0e} (use force)"
        )


def enumerate_graphs(spec: SearchSpec) -> Iterator[Graph]:
    """Every class of ``G(m, r)`` (no isolated vertices) exactly once."""
    _guard(spec)
    table = connected_certificates(spec.m, spec.r, None, spec.thread_count)
    if spec.connected_only:
        for c in table[spec.m]:
            yield from_graph6(c)
        return
    pools = {size: list(table[size]) for size in range(1, spec.m + 1)}
    for parts in _partitions(spec.m, spec.m):
        groups = sorted(Counter(parts).items(), reverse=True)
        for combo in _multisets(groups, pools):
            yield disjoint_union(*(from_graph6(c) for c in combo))


# -- maxima ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _score(cert: bytes, t: Optional[int]) -> int:
    h = from_graph6(cert)
    counts = clique_counts(h.adj, h.vertex_mask)
    if t is None:
        return sum(counts[2:])
    return counts[t] if t < len(counts) else 0


def _maximize(spec: SearchSpec) -> tuple[int, list[str], int]:
    table = connected_certificates(spec.m, spec.r, None, spec.thread_count)
    best_part: dict[int, tuple[int, list[bytes]]] = {}
    for size in range(1, spec.m + 1):
        scored = [(_score(c, spec.t_filter), c) for c in table[size]]
        if scored:
            top = max(s for s, _ in scored)
            best_part[size] = (top, [c for s, c in scored if s == top])
    if spec.connected_only:
        top, certs = best_part[spec.m]
        return top, sorted(c.decode() for c in certs), len(table[spec.m])
    best = None
    winners: list[list[tuple[int, int]]] = []
    for parts in _partitions(spec.m, spec.m):
        if any(p not in best_part for p in parts):
            continue
        value = sum(best_part[p][0] for p in parts)
        groups = sorted(Counter(parts).items(), reverse=True)
        if best is None or value > best:
            best, winners = value, [groups]
        elif value == best:
            winners.append(groups)
    pools = {size: best_part[size][1] for size in best_part}
    certs = set()
    for groups in winners:
        for combo in _multisets(groups, pools):
            union = disjoint_union(*(from_graph6(c) for c in combo))
            certs.add(canonical_form(union).decode())
    total = count_classes(spec.m, [len(level) for level in table])
    return best, sorted(certs), total


def f_max(spec: SearchSpec) -> SearchReport:
    """Maximum of ``k`` (or ``k_t`` with ``t_filter``) over ``G(m, r)``."""
    _guard(spec)
    value, certs, total = _maximize(spec)
    ref = g(spec.m, spec.r) if spec.t_filter is None else gt(spec.m, spec.r, spec.t_filter)
    return SearchReport(
        spec.m, spec.r, value, ref, value == ref, certs, total, spec.t_filter
    )


def extremal_certificates(m: int, r: int) -> list[str]:
    return sorted(canonical_form(h).decode() for h in extremal_family(m, r))


def verify_main_theorem(m: int, r: int, jobs: int = 1, force: bool = False) -> SearchReport:
    """Compare ``f(m, r)`` and its maximizers with ``g(m, r)`` and the extremal family."""
    report = f_max(SearchSpec(m, r, thread_count=jobs, force=force))
    expected = extremal_certificates(m, r)
    report.expected_certificates = expected
    report.agrees = report.f_value == report.g_value and report.argmax_certificates == expected
    return report


def verify_kt(m: int, r: int, t: int, jobs: int = 1, force: bool = False) -> SearchReport:
    """Check ``max k_t`` over ``G(m, r)`` against ``k_t(aK_{r+1} + C(b))``."""
    if t < 3:
        raise ValueError("t must be at least 3")
    report = f_max(SearchSpec(m, r, t_filter=t, thread_count=jobs, force=force))
    report.agrees = report.f_value <= report.g_value
    return report
