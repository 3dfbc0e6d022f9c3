"""Small undirected simple graphs stored as per-vertex neighbor bitsets.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means vertex ``v``
is a member). Internally vertices are 0-based; the edge-list text format
and :func:`from_edges` use 1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 63

Edge = tuple[int, int]


class CapacityError(ValueError):
    """Raised when a graph would exceed :data:`MAX_VERTICES` vertices."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def vset(vertices: Iterable[int]) -> int:
    """Bitmask of 0-based ``vertices``."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n > MAX_VERTICES:
            raise CapacityError(f"{self.n} vertices exceeds capacity {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Edge]) -> Graph:
        """Build from 0-based pairs; duplicates are rejected."""
        if n > MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
        adj = [0] * n
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def add_edges(self, pairs: Iterable[Edge]) -> Graph:
        adj = list(self.adj)
        for u, v in pairs:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edges(self, pairs: Iterable[Edge]) -> Graph:
        adj = list(self.adj)
        for u, v in pairs:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def induced(self, mask: int) -> Graph:
        """Subgraph induced on ``mask``, relabeled in increasing vertex order."""
        keep = list(bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for w in bits(self.adj[v] & mask):
                row |= 1 << index[w]
            adj.append(row)
        return Graph(len(keep), tuple(adj))

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is old vertex ``order[i]``."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = [0] * self.n
        for i, v in enumerate(order):
            row = 0
            for w in bits(self.adj[v]):
                row |= 1 << pos[w]
            adj[i] = row
        return Graph(self.n, tuple(adj))

    def strip_isolated(self) -> Graph:
        return self.induced(vset(v for v, a in enumerate(self.adj) if a))

    def validate(self) -> None:
        """Check symmetry, irreflexivity and range of every adjacency row."""
        full = self.vertex_mask
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise AssertionError(f"loop at {v}")
            if row & ~full:
                raise AssertionError(f"row {v} has bits beyond vertex count")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise AssertionError(f"asymmetric edge {v}-{w}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[(u + 1, v + 1) for u, v in self.edges()]})"


def from_edges(edges: Iterable[Sequence[int]]) -> Graph:
    """Graph from 1-based edges; the vertex count is the largest endpoint."""
    pairs = [(int(u), int(v)) for u, v in edges]
    if any(u < 1 or v < 1 for u, v in pairs):
        raise ValueError("endpoints are 1-based")
    n = max((max(p) for p in pairs), default=0)
    if n > MAX_VERTICES:
        raise CapacityError(f"endpoint {n} exceeds capacity {MAX_VERTICES}")
    return Graph.from_pairs(n, [(u - 1, v - 1) for u, v in pairs])


def common_neighborhood(g: Graph, k: int) -> int:
    """Common neighbors of the vertex set ``k``, excluding ``k`` itself."""
    if not k:
        raise ValueError("common neighborhood of the empty set is undefined")
    out = g.vertex_mask
    for v in bits(k):
        out &= g.adj[v]
    return out & ~k


def complement_within(g: Graph, s: int) -> Graph:
    """Graph on the vertices of ``s`` (original labels) whose edges are non-edges of ``g``."""
    adj = [0] * g.n
    for v in bits(s):
        adj[v] = s & ~g.adj[v] & ~(1 << v)
    return Graph(g.n, tuple(adj))


def disjoint_union(*graphs: Graph) -> Graph:
    total = sum(h.n for h in graphs)
    if total > MAX_VERTICES:
        raise CapacityError(f"union has {total} vertices, capacity is {MAX_VERTICES}")
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(row << offset for row in h.adj)
        offset += h.n
    return Graph(total, tuple(adj))


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# -- graph6 -----------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    body = []
    acc = nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                body.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        body.append(chr((acc << (6 - nbits)) + 63))
    return head + "".join(body)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    data = [ord(ch) - 63 for ch in text]
    if not data or any(not 0 <= x < 64 for x in data):
        raise ValueError(f"malformed graph6 string {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise ValueError(f"unsupported graph6 size header in {text!r}")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 graph has {n} vertices")
    needed = -(-(n * (n - 1) // 2) // 6)
    if len(body) != needed:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {needed}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def to_edgelist(g: Graph) -> str:
    return "".join(f"{u + 1} {v + 1}\n" for u, v in g.edges())


def from_edgelist(text: str) -> Graph:
    pairs = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"expected 'u v', got {line!r}")
        pairs.append((int(fields[0]), int(fields[1])))
    return from_edges(pairs)


def parse_graph(text: str) -> Graph:
    """Autodetect graph6 vs edge list by the first non-blank character."""
    stripped = text.lstrip()
    if stripped and not stripped[0].isdigit():
        return from_graph6(stripped.split()[0])
    return from_edgelist(text)


# -- canonical form -----------------------------------------------------------


def _refine(adj: Sequence[int], colors: list[int]) -> tuple[list[int], tuple]:
    """Refine a coloring to the coarsest equitable one.

    Colors are ranks (0..k-1). Returns the refined coloring and a trace that
    is invariant under relabeling.
    """
    n = len(adj)
    ncolors = len(set(colors))
    trace = []
    while True:
        cells: dict[int, int] = {}
        for v, c in enumerate(colors):
            cells[c] = cells.get(c, 0) | (1 << v)
        cell_masks = [cells[c] for c in range(ncolors)]
        sigs = []
        for v in range(n):
            row = adj[v]
            sigs.append((colors[v], tuple(popcount(row & m) for m in cell_masks)))
        uniq = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(uniq)}
        new = [rank[s] for s in sigs]
        trace.append(tuple(uniq))
        if len(uniq) == ncolors:
            return new, tuple(trace)
        colors, ncolors = new, len(uniq)


def _certificate(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    pos = [0] * len(adj)
    for i, v in enumerate(order):
        pos[v] = i
    cert = 0
    for i, v in enumerate(order):
        row = 0
        for w in bits(adj[v]):
            row |= 1 << (n - 1 - pos[w])
        cert = (cert << n) | row
    return cert


def canonical_order(g: Graph) -> list[int]:
    """A canonical vertex ordering: ``g.relabel(order)`` is the canonical graph.

    Color refinement from the degree partition, then individualization of the
    first smallest non-singleton cell, keeping only children whose refinement
    trace is greatest; the leaf with the largest adjacency bit string wins.
    Automorphisms found at equal leaves prune equivalent siblings.
    """
    adj = g.adj
    n = g.n
    if n == 0:
        return []
    colors, trace = _refine(adj, _ranks([popcount(a) for a in adj]))
    best: list = [None, None, None]  # trace path, certificate, order
    autos: list[list[int]] = []

    def leaf(colors: list[int], path: tuple) -> None:
        order = sorted(range(n), key=colors.__getitem__)
        cert = _certificate(adj, order)
        if best[0] is None or (path, cert) > (best[0], best[1]):
            best[0], best[1], best[2] = path, cert, order
        elif (path, cert) == (best[0], best[1]):
            sigma = [0] * n
            for a, b in zip(best[2], order):
                sigma[a] = b
            autos.append(sigma)

    def search(colors: list[int], path: tuple, prefix: tuple) -> None:
        ncolors = max(colors) + 1
        if ncolors == n:
            leaf(colors, path)
            return
        sizes = [0] * ncolors
        for c in colors:
            sizes[c] += 1
        target = min((s, c) for c, s in enumerate(sizes) if s > 1)[1]
        children = []
        for v in range(n):
            if colors[v] != target:
                continue
            split = [2 * c + (c > target or (c == target and w != v)) for w, c in enumerate(colors)]
            refined, tr = _refine(adj, _ranks(split))
            children.append((tr, v, refined))
        top = max(tr for tr, _, _ in children)
        depth = len(path)
        if best[0] is not None and path + (top,) < best[0][: depth + 1]:
            return
        explored: list[int] = []
        for tr, v, refined in children:
            if tr != top:
                continue
            if explored and _same_orbit(v, explored, prefix, autos, n):
                continue
            explored.append(v)
            search(refined, path + (tr,), prefix + (v,))

    search(colors, (trace,), ())
    return best[2]


def _same_orbit(v: int, explored: list[int], prefix: tuple, autos: list[list[int]], n: int) -> bool:
    """Whether ``v`` shares an orbit with an explored vertex under the known
    automorphisms that fix ``prefix`` pointwise."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sigma in autos:
        if all(sigma[p] == p for p in prefix):
            for x in range(n):
                a, b = find(x), find(sigma[x])
                if a != b:
                    parent[a] = b
    root = find(v)
    return any(find(w) == root for w in explored)


def _ranks(values: Sequence) -> list[int]:
    rank = {x: i for i, x in enumerate(sorted(set(values)))}
    return [rank[x] for x in values]


def canonical_graph(g: Graph) -> Graph:
    """Canonical relabeling; components are canonized separately and sorted."""
    comps = components(g)
    if len(comps) <= 1:
        return g.relabel(canonical_order(g))
    parts = []
    for mask in comps:
        h = g.induced(mask)
        h = h.relabel(canonical_order(h))
        parts.append((h.n, to_graph6(h), h))
    parts.sort(key=lambda p: (p[0], p[1]))
    return disjoint_union(*(h for _, _, h in parts))


def canonical_form(g: Graph) -> bytes:
    """Certificate equal for two graphs exactly when they are isomorphic."""
    return to_graph6(canonical_graph(g)).encode("ascii")
