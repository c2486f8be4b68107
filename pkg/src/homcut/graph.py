"""Undirected graphs with optional self-loops, and the small-graph toolkit.

Vertices are the integers ``0 .. n-1``.  An edge is a canonical pair
``(u, v)`` with ``u <= v``; the pair ``(u, u)`` encodes a self-loop at ``u``
(such a vertex is called *reflexive*).  Graphs are immutable after
construction, so values can be shared freely across workers; every operation
in this module is a pure function.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional


class GraphParseError(ValueError):
    """Raised when a graph file does not follow the ``p ghom`` format."""


def _canon(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite undirected graph; ``(u, u)`` pairs in ``edges`` are loops."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range or not canonical")

    @staticmethod
    def build(n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Construct a graph, canonicalizing edge pairs."""
        return Graph(n, frozenset(_canon(u, v) for u, v in edges))

    @cached_property
    def _nbrs(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                nbrs[u].add(v)
                nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, u: int) -> frozenset[int]:
        """Vertices adjacent to ``u``, never including ``u`` itself."""
        return self._nbrs[u]

    def reflexive(self, u: int) -> bool:
        return (u, u) in self.edges

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self.edges

    def degree(self, u: int) -> int:
        """Number of incident edges; a loop counts once."""
        return len(self._nbrs[u]) + (1 if self.reflexive(u) else 0)

    @property
    def reflexive_vertices(self) -> list[int]:
        return [u for u in range(self.n) if self.reflexive(u)]

    @property
    def is_irreflexive(self) -> bool:
        return not any(u == v for u, v in self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def non_loop_edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self.edges if u != v)


# ---------------------------------------------------------------------------
# small factories used throughout the tests and suites


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.build(n, edges)


def path_graph(n: int, loops: Iterable[int] = ()) -> Graph:
    edges = [(k, k + 1) for k in range(n - 1)]
    edges += [(u, u) for u in loops]
    return Graph.build(n, edges)


def cycle_graph(n: int, loops: Iterable[int] = ()) -> Graph:
    edges = [(k, (k + 1) % n) for k in range(n)]
    edges += [(u, u) for u in loops]
    return Graph.build(n, edges)


def complete_graph(n: int, loops: Iterable[int] = ()) -> Graph:
    edges = list(combinations(range(n), 2))
    edges += [(u, u) for u in loops]
    return Graph.build(n, edges)


# ---------------------------------------------------------------------------
# file format


def parse_graph(text: str | bytes) -> Graph:
    """Parse the line-oriented graph format.

    Comment lines start with ``c``, the single header is
    ``p ghom <n> <m>``, followed by exactly ``m`` lines ``e <u> <v>`` with
    1-based endpoints; ``e u u`` encodes a loop.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = -1
    m = -1
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n >= 0:
                raise GraphParseError(f"line {lineno}: duplicate header")
            if len(tokens) != 4 or tokens[1] != "ghom":
                raise GraphParseError(f"line {lineno}: malformed header {line!r}")
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise GraphParseError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise GraphParseError(f"line {lineno}: negative count in header")
        elif tokens[0] == "e":
            if n < 0:
                raise GraphParseError(f"line {lineno}: edge before header")
            if len(tokens) != 3:
                raise GraphParseError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphParseError(f"line {lineno}: malformed edge line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"line {lineno}: endpoint out of range in {line!r}")
            pair = _canon(u - 1, v - 1)
            if pair in edges:
                raise GraphParseError(f"line {lineno}: duplicate edge {line!r}")
            edges.add(pair)
        else:
            raise GraphParseError(f"line {lineno}: unrecognized line {line!r}")
    if n < 0:
        raise GraphParseError("missing 'p ghom <n> <m>' header")
    if len(edges) != m:
        raise GraphParseError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def serialize_graph(g: Graph) -> str:
    """Canonical text form: header plus edges sorted lexicographically."""
    lines = [f"p ghom {g.n} {len(g.edges)}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structure queries


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances from ``source``; ``-1`` marks unreachable vertices.

    Loops never shorten paths: distance is the length of a shortest path
    between distinct vertices.
    """
    if not 0 <= source < g.n:
        raise ValueError("source out of range")
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def all_pairs_distances(g: Graph) -> list[list[int]]:
    return [distances_from(g, u) for u in range(g.n)]


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph plus the list mapping new ids to old ids."""
    old = sorted(set(vertices))
    if old and not (0 <= old[0] and old[-1] < g.n):
        raise ValueError("vertex out of range")
    index = {v: k for k, v in enumerate(old)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph.build(len(old), edges), old


def max_clique_size(g: Graph) -> int:
    """Exact maximum clique size by branch and bound.

    Cliques are sets of pairwise-adjacent distinct vertices; loops are
    irrelevant and a single vertex is a clique of size 1.
    """
    if g.n == 0:
        raise ValueError("empty graph has no cliques")
    best = 1
    nbrs = [g.neighbors(u) for u in range(g.n)]

    def extend(cand: list[int], size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + len(cand) <= best:
                return
            v = cand.pop(0)
            extend([u for u in cand if u in nbrs[v]], size + 1)

    extend(list(range(g.n)), 0)
    return best


def is_bipartite(g: Graph) -> bool:
    """Two-colourability ignoring loops (odd-cycle detection)."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def is_irreflexive_complete(g: Graph) -> bool:
    return g.is_irreflexive and len(g.edges) == g.n * (g.n - 1) // 2


def is_tree(g: Graph) -> bool:
    """Connected with no cycle of length >= 3; loops are permitted."""
    return is_connected(g) and len(g.non_loop_edges()) == g.n - 1


def is_loop_connected(g: Graph) -> bool:
    """True iff in every component the reflexive vertices induce a connected
    subgraph; a component with at most one reflexive vertex qualifies."""
    for comp in connected_components(g):
        looped = [u for u in comp if g.reflexive(u)]
        if len(looped) <= 1:
            continue
        sub, _ = induced_subgraph(g, looped)
        if not is_connected(sub):
            return False
    return True


# ---------------------------------------------------------------------------
# surgery


def identify_vertices(g: Graph, u: int, v: int) -> tuple[Graph, list[int]]:
    """Merge ``u`` and ``v`` into one vertex adjacent to all their former
    neighbours; the merged vertex is reflexive iff ``u`` or ``v`` was, or
    ``uv`` was an edge.  Returns the new graph and the old-to-new id map.
    """
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    lo, hi = min(u, v), max(u, v)
    mapping = []
    k = 0
    for w in range(g.n):
        if w == hi:
            mapping.append(-1)  # patched below
            continue
        mapping.append(k)
        k += 1
    mapping[hi] = mapping[lo]
    edges = {(mapping[a], mapping[b]) for a, b in g.edges}
    return Graph.build(g.n - 1, edges), mapping


def add_true_twin(g: Graph, v: int, make_reflexive: bool) -> Graph:
    """Append a new vertex adjacent to ``v`` and to every neighbour of ``v``."""
    if not 0 <= v < g.n:
        raise ValueError("vertex out of range")
    t = g.n
    edges = set(g.edges)
    edges.add((v, t))
    edges.update(_canon(w, t) for w in g.neighbors(v))
    if make_reflexive:
        edges.add((t, t))
    return Graph(g.n + 1, frozenset(edges))


# ---------------------------------------------------------------------------
# twins and isomorphism


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    """Adjacent vertices sharing the same neighbours outside the pair."""
    if u == v:
        return False
    if v not in g.neighbors(u):
        return False
    return g.neighbors(u) - {u, v} == g.neighbors(v) - {u, v}


def true_twin_classes(g: Graph, vertices: Optional[Iterable[int]] = None) -> list[list[int]]:
    """Partition a vertex set into maximal mutual-true-twin classes.

    The true-twin relation is transitive, so greedy grouping is exact.
    """
    verts = sorted(set(vertices)) if vertices is not None else list(range(g.n))
    classes: list[list[int]] = []
    placed: set[int] = set()
    for u in verts:
        if u in placed:
            continue
        cls = [u]
        placed.add(u)
        for v in verts:
            if v not in placed and are_true_twins(g, u, v):
                cls.append(v)
                placed.add(v)
        classes.append(cls)
    return classes


_ISO_MAX_N = 8


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism by permutation search with signature pruning.

    Intended for tiny graphs; inputs beyond 8 vertices are rejected.  Loops
    must map to loops.
    """
    if g1.n > _ISO_MAX_N or g2.n > _ISO_MAX_N:
        raise ValueError(f"isomorphism check supports at most {_ISO_MAX_N} vertices")
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False

    def sig(g: Graph, u: int) -> tuple[int, bool]:
        return (len(g.neighbors(u)), g.reflexive(u))

    if sorted(sig(g1, u) for u in range(g1.n)) != sorted(sig(g2, u) for u in range(g2.n)):
        return False
    n = g1.n
    image = [-1] * n
    used = [False] * n

    def place(u: int) -> bool:
        if u == n:
            return True
        su = sig(g1, u)
        for x in range(n):
            if used[x] or sig(g2, x) != su:
                continue
            ok = True
            for w in range(u):
                if g1.has_edge(u, w) != g2.has_edge(x, image[w]):
                    ok = False
                    break
            if ok:
                image[u] = x
                used[x] = True
                if place(u + 1):
                    return True
                used[x] = False
                image[u] = -1
        return False

    return place(0)
