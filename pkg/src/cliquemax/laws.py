"""Executable checks of the structural facts behind the extremal result.

Each ``check_*`` function evaluates a hypothesis exactly on every instance,
counts the instances where it fails as vacuous, and records a witness for
every instance where the hypothesis holds but the conclusion does not.

Graph-quantified checks take an iterable of ``(graph, r)`` pairs; the
standard source is :func:`connected_instances`. The statements about
unfoldable clusters only make sense for connected graphs other than
``K_{r+1}``, and the comparison with ``g`` in the averaging check needs
``r >= 3`` and ``m > C(r+1,2)``. Those restrictions are part of the
hypothesis evaluated here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .cliques import clique_counts, k_total, kt_per_edge
from .clusters import ClusterDecomposition, analyze_cluster, find_clusters, tight_edges
from .colex import binom, build_colex, decompose, g, kt_colex
from .graph_core import (
    CapacityError,
    Graph,
    bits,
    canonical_form,
    components,
    disjoint_union,
    from_graph6,
    is_connected,
    popcount,
    to_graph6,
)
from .moves import (
    blue_clique_counts,
    colex_fold,
    fixed_loss,
    flell_bound,
    fold,
    maxfl_bound,
    partial_fold,
)
from .search import connected_certificates

Instance = tuple[Graph, int]


@dataclass
class LawReport:
    law_id: str
    instances_checked: int = 0
    vacuous: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violate(self, graph: Optional[Graph], **details) -> None:
        entry = {"graph6": to_graph6(graph) if graph is not None else None}
        entry.update(details)
        self.violations.append(entry)

    def to_json(self) -> dict:
        return {
            "law_id": self.law_id,
            "instances_checked": self.instances_checked,
            "vacuous": self.vacuous,
            "violations": self.violations,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


# -- instance sources ---------------------------------------------------------


def connected_instances(r_values: Iterable[int], m_max: int, jobs: int = 1) -> Iterator[Instance]:
    """Every connected graph with at most ``m_max`` edges and Δ <= r, per ``r``."""
    for r in r_values:
        table = connected_certificates(m_max, r, None, jobs)
        for level in table:
            for cert in level:
                yield from_graph6(cert), r


def small_graphs(n_max: int) -> Iterator[Graph]:
    """Every graph without isolated vertices on at most ``n_max`` vertices (plus the empty graph)."""
    table = connected_certificates(binom(n_max, 2), max(n_max - 1, 1), n_max)
    by_order: dict[int, list[bytes]] = {}
    for level in table:
        for cert in level:
            by_order.setdefault(from_graph6(cert).n, []).append(cert)
    pool = sorted((n, c) for n, certs in by_order.items() for c in certs)

    def build(start: int, room: int, parts: list[bytes]) -> Iterator[Graph]:
        yield disjoint_union(*(from_graph6(c) for c in parts))
        for i in range(start, len(pool)):
            n, c = pool[i]
            if n > room:
                break
            yield from build(i, room - n, parts + [c])

    yield from build(0, n_max, [])


def graphs_on(s: int) -> Iterator[Graph]:
    """Every graph on exactly ``s`` vertices, isolated vertices allowed."""
    for h in small_graphs(s):
        yield disjoint_union(h, Graph.empty(s - h.n))


def _clusters(h: Graph, r: int) -> list[ClusterDecomposition]:
    return [analyze_cluster(h, r, t) for t in find_clusters(h, r)]


def _is_complete_block(h: Graph, r: int) -> bool:
    return h.n == r + 1 and h.edge_count() == binom(r + 1, 2)


# -- colex and clique-count laws ----------------------------------------------


def check_kruskal_katona(graphs: Iterable[Graph]) -> LawReport:
    """``k_t(G) <= k_t(C(e(G)))`` for every ``t``."""
    rep = LawReport("kruskal_katona")
    for h in graphs:
        rep.instances_checked += 1
        m = h.edge_count()
        counts = clique_counts(h.adj, h.vertex_mask)
        for t in range(2, len(counts)):
            bound = kt_colex(m, t)
            if counts[t] > bound:
                rep.violate(h, t=t, observed=counts[t], bound=bound)
    return rep


def check_numt(u_max: int = 40, t_max: int = 10) -> LawReport:
    """``k_t(C(u)) + C(q, t-1) <= k_t(C(u+q))`` whenever ``C(q,2) <= u``."""
    rep = LawReport("numt")
    for u in range(u_max + 1):
        q = 1
        while binom(q, 2) <= u:
            for t in range(2, t_max + 1):
                rep.instances_checked += 1
                left = kt_colex(u, t) + binom(q, t - 1)
                right = kt_colex(u + q, t)
                if left > right:
                    rep.violate(None, u=u, q=q, t=t, observed=left, bound=right)
            q += 1
    return rep


def _family_signatures(m: int, r: int) -> list[tuple[bytes, ...]]:
    """Extremal graphs as sorted tuples of component certificates.

    Works on components so that graphs beyond the vertex capacity (such as
    ``mK_2`` for large ``m``) can still be compared.
    """
    dec = decompose(m, r)
    block = canonical_form(Graph.complete(r + 1))
    base = [block] * dec.a
    out = [tuple(sorted(base + ([canonical_form(build_colex(dec.b))] if dec.b else [])))]
    if dec.d == 1:
        extra = [canonical_form(Graph.complete(dec.c)), canonical_form(Graph.complete(2))]
        out.append(tuple(sorted(base + extra)))
    return out


def check_disco(m_max: int = 60, r_values: Iterable[int] = range(1, 6)) -> LawReport:
    """``g(m1+m2) >= g(m1) + g(m2)``, equal exactly when the union is extremal."""
    rep = LawReport("disco")
    for r in r_values:
        sigs = {m: _family_signatures(m, r) for m in range(m_max + 1)}
        for m1 in range(1, m_max // 2 + 1):
            for m2 in range(m1, m_max - m1 + 1):
                rep.instances_checked += 1
                whole, parts = g(m1 + m2, r), g(m1, r) + g(m2, r)
                union = tuple(sorted(sigs[m1][0] + sigs[m2][0]))
                union_extremal = union in sigs[m1 + m2]
                if whole < parts or (whole == parts) != union_extremal:
                    rep.violate(
                        None, m1=m1, m2=m2, r=r, observed=whole, bound=parts,
                        union_extremal=union_extremal,
                    )
    return rep


# -- fixed loss ---------------------------------------------------------------


def check_fixed_loss_bounds(s_max: int = 7) -> LawReport:
    """``fl(R) <= s(2^(s-1)-1)`` with equality only at ``K_s``, and the degree-one bound."""
    if s_max > 7:
        raise CapacityError("fixed-loss check is limited to s <= 7")
    rep = LawReport("fixed_loss_bounds")
    for s in range(1, s_max + 1):
        for red in graphs_on(s):
            rep.instances_checked += 1
            fl = fixed_loss(red)
            top = maxfl_bound(s)
            complete = red.edge_count() == binom(s, 2)
            if fl > top or (fl == top) != complete:
                rep.violate(red, s=s, observed=fl, bound=top, complete=complete)
            ell = sum(1 for d in red.degrees() if d == 1)
            bound = flell_bound(s, ell)
            if fl > bound:
                rep.violate(red, s=s, ell=ell, observed=fl, bound=str(bound))
    return rep


# -- cluster structure and move accounting ------------------------------------


def check_cluster_structure(instances: Iterable[Instance]) -> LawReport:
    """Disjoint clusters that are exactly the maximal tight cliques, at most two
    clusters touching an edge, no cluster of size ``r``, small clusters when
    ``m > C(r+1,2)``, and ``k_t(e) <= C(r-2,t-2)`` on non-tight edges."""
    rep = LawReport("cluster_structure")
    for h, r in instances:
        rep.instances_checked += 1
        clusters = find_clusters(h, r)
        union = 0
        for t in clusters:
            if union & t:
                rep.violate(h, r=r, reason="clusters overlap")
            union |= t
        owner = {v: i for i, t in enumerate(clusters) for v in bits(t)}
        for u, v in h.edges():
            touching = {owner[x] for x in (u, v) if x in owner}
            if len(touching) > 2:
                rep.violate(h, r=r, edge=[u + 1, v + 1], reason="edge touches >2 clusters")
        m = h.edge_count()
        for t in clusters:
            size = popcount(t)
            if size == r:
                rep.violate(h, r=r, reason="cluster of size r")
            block = size == r + 1
            if block != any(c == t and popcount(c) == r + 1 for c in components(h)):
                rep.violate(h, r=r, reason="size r+1 cluster is not a K_{r+1} component")
            if is_connected(h) and m > binom(r + 1, 2) and size > r - 1:
                rep.violate(h, r=r, reason="large cluster in big connected graph")
            for x in bits(t):
                if popcount(h.adj[x]) != r:
                    rep.violate(h, r=r, reason="cluster vertex below degree r")
        tight = tight_edges(h, r)
        internal = {(u, v) for u, v in h.edges() if u in owner and v in owner and owner[u] == owner[v]}
        if tight != internal:
            rep.violate(h, r=r, reason="tight edges differ from cluster-internal edges")
        top = max(h.degrees(), default=0) + 1
        for t in range(2, top + 1):
            per_edge = kt_per_edge(h, t)
            for e, count in per_edge.items():
                if e not in tight and count > binom(r - 2, t - 2):
                    rep.violate(h, r=r, t=t, edge=[e[0] + 1, e[1] + 1], observed=count)
        for cd in _clusters(h, r):
            for x in bits(cd.S):
                if cd.blue_degree(x) > cd.red_degree(x):
                    rep.violate(h, r=r, reason="d_B(x) > d_R(x)", vertex=x + 1)
    return rep


def check_move_accounting(instances: Iterable[Instance]) -> LawReport:
    """Edge counts and degree bounds after fold, colex fold and partial fold."""
    rep = LawReport("move_accounting")
    for h, r in instances:
        m = h.edge_count()
        for cd in _clusters(h, r):
            rep.instances_checked += 1
            out = fold(h, cd)
            res = out.result
            if res.max_degree() > r or res.edge_count() != m - cd.e_B + cd.e_R:
                rep.violate(h, r=r, move="fold", edges=res.edge_count())
            block = res.induced(cd.T | cd.S)
            if block.n != r + 1 or block.edge_count() != binom(r + 1, 2):
                rep.violate(h, r=r, move="fold", reason="T+S is not K_{r+1}")
            if cd.e_B >= cd.e_R and out.padded().edge_count() != m:
                rep.violate(h, r=r, move="fold", reason="padding does not restore m")
            if cd.e_B < cd.e_R:
                res = colex_fold(h, cd).result
                if res.edge_count() != m or res.max_degree() > r:
                    rep.violate(h, r=r, move="colex_fold", edges=res.edge_count())
            if cd.e_B <= cd.e_R:
                res = partial_fold(h, cd).result
                if res.edge_count() != m or res.max_degree() > r:
                    rep.violate(h, r=r, move="partial_fold", edges=res.edge_count())
    return rep


def check_blue_bound(instances: Iterable[Instance], t: Optional[int] = None) -> LawReport:
    """Blue ``t``-cliques number at most ``C(e(B), t-1)``."""
    rep = LawReport("blue_bound")
    for h, r in instances:
        for cd in _clusters(h, r):
            rep.instances_checked += 1
            counts = blue_clique_counts(h, cd)
            sizes = counts if t is None else {t: counts.get(t, 0)}
            for size, count in sizes.items():
                if count > binom(cd.e_B, size - 1):
                    rep.violate(h, r=r, T=[v + 1 for v in bits(cd.T)], t=size, observed=count)
    return rep


# -- local moves --------------------------------------------------------------


def check_colex_fold(instances: Iterable[Instance]) -> LawReport:
    """With ``e(B) < e(R) <= r`` the colex fold keeps ``m``, Δ and weakly raises every ``k_t``."""
    rep = LawReport("colex_fold")
    for h, r in instances:
        if not is_connected(h):
            rep.vacuous += 1
            continue
        for cd in _clusters(h, r):
            if not cd.e_B < cd.e_R <= r:
                rep.vacuous += 1
                continue
            rep.instances_checked += 1
            res = colex_fold(h, cd).result
            before = clique_counts(h.adj, h.vertex_mask)
            after = clique_counts(res.adj, res.vertex_mask)
            after += [0] * max(0, len(before) - len(after))
            drops = [t for t in range(2, len(before)) if after[t] < before[t]]
            if drops or res.edge_count() != h.edge_count() or res.max_degree() > r:
                rep.violate(h, r=r, T=[v + 1 for v in bits(cd.T)], dropped_t=drops)
    return rep


def check_partial_fold(instances: Iterable[Instance]) -> LawReport:
    """With ``|T| >= (r-1)/2`` and ``1 <= e(B) < e(R)`` a partial fold strictly gains."""
    rep = LawReport("partial_fold")
    for h, r in instances:
        if not is_connected(h):
            rep.vacuous += 1
            continue
        for cd in _clusters(h, r):
            if not (2 * cd.size >= r - 1 and 1 <= cd.e_B < cd.e_R):
                rep.vacuous += 1
                continue
            rep.instances_checked += 1
            out = partial_fold(h, cd)
            if out.delta_k <= 0 or out.result.max_degree() > r or out.delta_edges != 0:
                rep.violate(h, r=r, T=[v + 1 for v in bits(cd.T)], delta_k=out.delta_k)
    return rep


# -- unfoldable clusters and averaging ----------------------------------------


def _unfoldable(h: Graph, cd: ClusterDecomposition, k: int) -> bool:
    return k_total(fold(h, cd).result) <= k


def check_sbound(instances: Iterable[Instance]) -> LawReport:
    """Unfoldable clusters have ``fl(R) >= 2^r - 2^|T|`` and ``2^|T| <= |S|``.

    Hypothesis: ``G`` connected and not ``K_{r+1}``.
    """
    rep = LawReport("sbound")
    for h, r in instances:
        if not is_connected(h) or _is_complete_block(h, r):
            rep.vacuous += 1
            continue
        k = k_total(h)
        for cd in _clusters(h, r):
            if not _unfoldable(h, cd, k):
                rep.vacuous += 1
                continue
            rep.instances_checked += 1
            fl = fixed_loss(cd.red_graph())
            if fl < 2**r - 2**cd.size or 2**cd.size > cd.s:
                rep.violate(h, r=r, T=[v + 1 for v in bits(cd.T)], fl=fl, s=cd.s)
    return rep


def check_clusnum(instances: Iterable[Instance], t: Optional[int] = None) -> LawReport:
    """Unfoldable clusters touch ``>= 2 C(|T|,2)`` edges with ``k_t(e) <= C(r-3,t-2)``.

    Hypothesis: ``r >= 3``, ``3 <= t <= r+1``, ``G`` connected and not ``K_{r+1}``.
    """
    rep = LawReport("clusnum")
    for h, r in instances:
        if r < 3 or not is_connected(h) or _is_complete_block(h, r):
            rep.vacuous += 1
            continue
        k = k_total(h)
        sizes = range(3, r + 2) if t is None else [t] if 3 <= t <= r + 1 else []
        per_t = {s: kt_per_edge(h, s) for s in sizes}
        for cd in _clusters(h, r):
            if not _unfoldable(h, cd, k):
                rep.vacuous += 1
                continue
            for s in sizes:
                rep.instances_checked += 1
                light = sum(
                    1
                    for (u, v), count in per_t[s].items()
                    if (cd.T >> u & 1 or cd.T >> v & 1) and count <= binom(r - 3, s - 2)
                )
                if light < 2 * binom(cd.size, 2):
                    rep.violate(h, r=r, t=s, T=[v + 1 for v in bits(cd.T)], observed=light)
    return rep


def averaging_hypothesis(h: Graph, r: int, strict: bool = False) -> bool:
    """Every cluster is unfoldable or has a heavy red graph and is small.

    Default: ``e(R) >= r-2`` and ``|T| <= r/2``; ``strict``:
    ``e(R) >= r+1`` and ``|T| <= (r-2)/2``.
    """
    k = k_total(h)
    for cd in _clusters(h, r):
        if strict:
            heavy = cd.e_R >= r + 1 and 2 * cd.size <= r - 2
        else:
            heavy = cd.e_R >= r - 2 and 2 * cd.size <= r
        if not heavy and not _unfoldable(h, cd, k):
            return False
    return True


def check_averaging(instances: Iterable[Instance], strict: bool = False) -> LawReport:
    """Under the averaging hypothesis: fewer than half the edges are tight,
    ``sum_e k_t(e) <= m C(r-2,t-2)`` for ``t >= 4``, and ``k(G) < g(m, r)``.

    Also checks the identity ``sum_e k_t(e) = C(t,2) k_t(G)`` that turns the
    weighted edge sum into ``k(G)``. The hypothesis needs ``G`` connected and
    not ``K_{r+1}``; the
    final comparison with ``g`` is made only when ``r >= 3`` and
    ``m > C(r+1,2)`` (below that the colex graph itself may meet the hypothesis).
    """
    rep = LawReport("averaging_strict" if strict else "averaging")
    for h, r in instances:
        m = h.edge_count()
        if not m or not is_connected(h) or _is_complete_block(h, r) or not averaging_hypothesis(h, r, strict):
            rep.vacuous += 1
            continue
        rep.instances_checked += 1
        if 2 * len(tight_edges(h, r)) >= m:
            rep.violate(h, r=r, reason="at least half the edges are tight")
        counts = clique_counts(h.adj, h.vertex_mask)
        for t in range(2, len(counts)):
            total = sum(kt_per_edge(h, t).values())
            if total != binom(t, 2) * counts[t]:
                rep.violate(h, r=r, t=t, reason="edge-clique identity fails")
            if t >= 4 and total > m * binom(r - 2, t - 2):
                rep.violate(h, r=r, t=t, observed=total, bound=m * binom(r - 2, t - 2))
        if r < 3 or m <= binom(r + 1, 2):
            continue
        k = sum(counts[2:])
        if k >= g(m, r):
            rep.violate(h, r=r, observed=k, bound=g(m, r), reason="k(G) >= g(m,r)")
    return rep


def check_improve_or_average(instances: Iterable[Instance]) -> LawReport:
    """Every connected non-extremal instance either admits ``improve`` or
    satisfies the averaging hypothesis with ``k(G) < g(m, r)``."""
    from .moves import improve

    rep = LawReport("improve_or_average")
    for h, r in instances:
        m = h.edge_count()
        if r < 3 or m <= binom(r + 1, 2) or not is_connected(h):
            rep.vacuous += 1
            continue
        rep.instances_checked += 1
        k = k_total(h)
        step = improve(h, r)
        if step is not None:
            better, _ = step
            if better.edge_count() != m or better.max_degree() > r or k_total(better) < k:
                rep.violate(h, r=r, reason="improve returned an invalid graph")
            continue
        if not averaging_hypothesis(h, r, strict=True) or k >= g(m, r):
            rep.violate(h, r=r, observed=k, bound=g(m, r), reason="no move and not averaged")
    return rep


STANDARD_R = (1, 2, 3, 4)
STANDARD_M = 12


def run_all(r_values: Iterable[int] = STANDARD_R, m_max: int = STANDARD_M, jobs: int = 1) -> list[LawReport]:
    """Every law over the standard grid."""
    r_values = tuple(r_values)
    inst = list(connected_instances(r_values, m_max, jobs))
    return [
        check_kruskal_katona(small_graphs(7)),
        check_blue_bound(inst),
        check_numt(40, 10),
        check_colex_fold(inst),
        check_partial_fold(inst),
        check_fixed_loss_bounds(7),
        check_sbound(inst),
        check_clusnum(inst),
        check_averaging(inst),
        check_averaging(inst, strict=True),
        check_disco(60, range(1, 6)),
        check_cluster_structure(inst),
        check_move_accounting(inst),
        check_improve_or_average(inst),
    ]
