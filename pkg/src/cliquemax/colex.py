"""Colex graphs, the (a, b, c, d) decomposition of an edge budget, and the
extremal graphs ``aK_{r+1} + C(b)``."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .graph_core import Graph, CapacityError, MAX_VERTICES, disjoint_union


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _largest_c(b: int) -> int:
    """Largest ``c`` with ``C(c, 2) <= b``."""
    c = (1 + isqrt(1 + 8 * b)) // 2
    while binom(c, 2) > b:
        c -= 1
    while binom(c + 1, 2) <= b:
        c += 1
    return c


def colex_unrank(i: int) -> tuple[int, int]:
    """The ``i``-th pair (1-based, both in index and labels) in colex order."""
    if i < 1:
        raise ValueError("colex rank starts at 1")
    v = _largest_c(i - 1) + 1
    return i - binom(v - 1, 2), v


def build_colex(m: int) -> Graph:
    """The colex graph C(m) on the first ``m`` colex pairs."""
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    if m > binom(MAX_VERTICES, 2):
        raise CapacityError(f"C({m}) needs more than {MAX_VERTICES} vertices")
    pairs = [colex_unrank(i) for i in range(1, m + 1)]
    n = max((v for _, v in pairs), default=0)
    return Graph.from_pairs(n, [(u - 1, v - 1) for u, v in pairs])


@dataclass(frozen=True)
class Decomposition:
    m: int
    r: int
    a: int
    b: int
    c: int
    d: int


def decompose(m: int, r: int) -> Decomposition:
    """Write ``m = a*C(r+1,2) + b`` and ``b = C(c,2) + d`` with ``0 <= d < c``."""
    if r < 1:
        raise ValueError("degree bound must be positive")
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    block = binom(r + 1, 2)
    a, b = divmod(m, block)
    if b == 0:
        return Decomposition(m, r, a, 0, 0, 0)
    c = _largest_c(b)
    return Decomposition(m, r, a, b, c, b - binom(c, 2))


def _cd(b: int) -> tuple[int, int]:
    if b == 0:
        return 0, 0
    c = _largest_c(b)
    return c, b - binom(c, 2)


def k_colex(b: int) -> int:
    """Number of cliques of size at least 2 in C(b): ``2^c - c + 2^d - 2``."""
    if b < 0:
        raise ValueError("edge count must be nonnegative")
    c, d = _cd(b)
    return 2**c - c + 2**d - 2


def kt_colex(u: int, t: int) -> int:
    """Number of ``t``-cliques in C(u): ``C(c,t) + C(d,t-1)``."""
    if u < 0 or t < 2:
        raise ValueError("need u >= 0 and t >= 2")
    c, d = _cd(u)
    return binom(c, t) + binom(d, t - 1)


def g(m: int, r: int) -> int:
    """Clique count of ``aK_{r+1} + C(b)``."""
    dec = decompose(m, r)
    return dec.a * (2 ** (r + 1) - r - 2) + k_colex(dec.b)


def gt(m: int, r: int, t: int) -> int:
    """Number of ``t``-cliques in ``aK_{r+1} + C(b)``."""
    dec = decompose(m, r)
    return dec.a * binom(r + 1, t) + kt_colex(dec.b, t)


def extremal_family(m: int, r: int) -> list[Graph]:
    """``aK_{r+1} + C(b)``, plus ``aK_{r+1} + K_c + K_2`` when ``d == 1``.

    Vertices are labeled block by block: the complete graphs first, then the
    colex part.
    """
    dec = decompose(m, r)
    blocks = [Graph.complete(r + 1)] * dec.a
    family = [disjoint_union(*blocks, build_colex(dec.b))]
    if dec.d == 1:
        family.append(disjoint_union(*blocks, Graph.complete(dec.c), Graph.complete(2)))
    return family
