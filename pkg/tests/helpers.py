"""Brute-force oracles and hypothesis strategies shared by the tests.

The oracles are deliberately independent of the engines they check: raw
enumeration over bipartitions and over total vertex maps.
"""
from __future__ import annotations

import itertools

from hypothesis import strategies as st

from homcut.graph import Graph
from homcut.hom import witness_failure


def brute_factor_cuts(g: Graph, i: int, j: int) -> list[tuple[int, ...]]:
    """part1 tuples of all valid cuts, canonicalized like the engine."""
    out = []
    n = g.n
    for mask in range(1, (1 << n) - 1):
        part1 = frozenset(v for v in range(n) if mask >> v & 1)
        cross = [0] * n
        for u, v in g.edges:
            if u != v and ((u in part1) != (v in part1)):
                cross[u] += 1
                cross[v] += 1
        if all(cross[v] <= (i if v in part1 else j) for v in range(n)):
            if i == j and 0 not in part1:
                continue
            out.append(tuple(sorted(part1)))
    return sorted(out)


def brute_witnesses(g: Graph, h: Graph, variant) -> list[tuple[int, ...]]:
    """Every total map accepted by the (independent) witness checker."""
    out = []
    for img in itertools.product(range(h.n), repeat=g.n):
        if witness_failure(g, h, list(img), variant) is None:
            out.append(img)
    return sorted(out)


def brute_max_clique(g: Graph) -> int:
    best = 1
    for size in range(2, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                best = size
                break
    return best


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, loops: bool = True):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if loops:
        pairs += [(u, u) for u in range(n)]
    if not pairs:
        return Graph(n, frozenset())
    edges = draw(st.sets(st.sampled_from(pairs)))
    return Graph.build(n, edges)


@st.composite
def connected_irreflexive_graphs(draw, min_n: int = 2, max_n: int = 7):
    from homcut.graph import is_connected

    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    # a drawn spanning tree guarantees connectivity; extra edges on top
    base = set()
    for k in range(1, n):
        attach = draw(st.integers(0, k - 1))
        base.add((attach, k))
    extra = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    g = Graph.build(n, base | extra)
    assert is_connected(g)
    return g
