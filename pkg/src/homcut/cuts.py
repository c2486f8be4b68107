"""Exact decision and enumeration for (i, j)-factor cuts.

A cut is an ordered bipartition ``(part1, part2)`` of the vertices of a
connected irreflexive graph such that, among the crossing edges, every
``part1`` vertex is incident to at most ``i`` of them and every ``part2``
vertex to at most ``j``; ``i <= j`` throughout.  The ``(1, 1)`` case is the
classical matching cut.  When ``i == j`` the two orientations of a
bipartition are interchangeable, so cuts are canonicalized with vertex 0 in
``part1``; when ``i < j`` orientation matters and both are distinct objects.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph, is_connected

DEFAULT_ENUMERATION_BOUND = 16


@dataclass(frozen=True)
class FactorCut:
    part1: frozenset[int]
    part2: frozenset[int]
    i: int
    j: int

    def side_of(self, v: int) -> int:
        if v in self.part1:
            return 1
        if v in self.part2:
            return 2
        raise ValueError(f"vertex {v} is in neither part")

    def crossing_edges(self, g: Graph) -> list[tuple[int, int]]:
        return sorted(
            (u, v)
            for u, v in g.edges
            if u != v and (u in self.part1) != (v in self.part1)
        )


def _validate_params(i: int, j: int) -> None:
    if i < 1 or j < 1:
        raise ValueError("cut parameters must be positive")
    if i > j:
        raise ValueError(f"cut parameters must satisfy i <= j, got ({i}, {j})")


def _require_cuttable(g: Graph) -> None:
    if not g.is_irreflexive:
        raise ValueError("cut problems are defined on irreflexive graphs")
    if not is_connected(g):
        raise ValueError("cut problems are defined on connected graphs")


def check_factor_cut(g: Graph, cut: FactorCut) -> bool:
    """True iff ``cut`` is a valid (i, j)-factor cut of ``g``."""
    _require_cuttable(g)
    _validate_params(cut.i, cut.j)
    if cut.part1 & cut.part2:
        raise ValueError("cut parts overlap")
    if cut.part1 | cut.part2 != frozenset(range(g.n)):
        raise ValueError("cut parts do not cover the vertex set")
    if not cut.part1 or not cut.part2:
        return False
    crossing = [0] * g.n
    for u, v in g.edges:
        if u != v and (u in cut.part1) != (v in cut.part1):
            crossing[u] += 1
            crossing[v] += 1
    return all(
        crossing[v] <= (cut.i if v in cut.part1 else cut.j) for v in range(g.n)
    )


def _adjacency_csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    counts = [len(g.neighbors(u)) for u in range(g.n)]
    start = np.zeros(g.n + 1, np.int32)
    np.cumsum(counts, out=start[1:])
    flat = np.empty(int(start[-1]), np.int32)
    pos = start[:-1].copy()
    for u, v in g.edges:
        if u == v:
            continue
        flat[pos[u]] = v
        pos[u] += 1
        flat[pos[v]] = u
        pos[v] += 1
    for u in range(g.n):
        flat[start[u]:start[u + 1]] = np.sort(flat[start[u]:start[u + 1]])
    return start, flat


def _decode(sides: np.ndarray, i: int, j: int) -> FactorCut:
    part1 = frozenset(int(v) for v in np.flatnonzero(sides == 1))
    part2 = frozenset(int(v) for v in np.flatnonzero(sides == 2))
    return FactorCut(part1, part2, i, j)


def _search(g: Graph, i: int, j: int, cap: int) -> tuple[list[FactorCut], bool]:
    start, flat = _adjacency_csr(g)
    fix_first = 1 if i == j else 0
    while True:
        out = np.zeros((cap, g.n), np.int8)
        count, truncated = _kernels.cut_search(start, flat, i, j, fix_first, out, cap)
        if not truncated or cap == 1:
            cuts = [_decode(out[k], i, j) for k in range(count)]
            return cuts, bool(truncated)
        cap *= 4


def find_factor_cut(g: Graph, i: int, j: int) -> FactorCut | None:
    """Exact decision; returns some valid cut or ``None``.

    Fast path: a vertex ``v`` of degree at most ``j`` yields the trivial cut
    ``(V - {v}, {v})``; otherwise the exhaustive branching search runs.
    """
    _validate_params(i, j)
    _require_cuttable(g)
    if g.n < 2:
        return None
    for v in range(g.n):
        if g.degree(v) <= j:
            cut = FactorCut(frozenset(range(g.n)) - {v}, frozenset({v}), i, j)
            assert check_factor_cut(g, cut)
            return cut
    cuts, _ = _search(g, i, j, cap=1)
    if not cuts:
        return None
    cut = cuts[0]
    assert check_factor_cut(g, cut)
    return cut


def enumerate_factor_cuts(
    g: Graph, i: int, j: int, max_n: int = DEFAULT_ENUMERATION_BOUND
) -> list[FactorCut]:
    """All valid cuts, sorted by their ``part1`` vertex tuple.

    Each bipartition appears once when ``i == j`` (vertex 0 pinned to
    ``part1``) and in both orientations when ``i < j``.  Graphs larger than
    ``max_n`` are rejected; raise the bound explicitly for bigger instances.
    """
    _validate_params(i, j)
    _require_cuttable(g)
    if g.n > max_n:
        raise ValueError(f"graph has {g.n} vertices, enumeration bound is {max_n}")
    cuts, _ = _search(g, i, j, cap=1024)
    return sorted(cuts, key=lambda c: tuple(sorted(c.part1)))


def are_factor_roots(
    g: Graph,
    i: int,
    j: int,
    s: int,
    t: int,
    max_n: int = DEFAULT_ENUMERATION_BOUND,
) -> bool:
    """True iff every (i, j)-factor cut separates ``s`` and ``t``; when
    ``i < j`` the orientation ``s`` in ``part1``, ``t`` in ``part2`` is
    required.  Vacuously true when no cut exists.

    Decided by exhaustive enumeration; at this scale brute force is the
    honest oracle, since the promise class has no known polynomial recognizer.
    """
    if s == t:
        raise ValueError("roots must be distinct")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError("root out of range")
    for cut in enumerate_factor_cuts(g, i, j, max_n=max_n):
        if i < j:
            if not (s in cut.part1 and t in cut.part2):
                return False
        else:
            if (s in cut.part1) == (t in cut.part1):
                return False
    return True


# ---------------------------------------------------------------------------
# text format


def format_cut(cut: FactorCut) -> str:
    v1 = " ".join(str(v + 1) for v in sorted(cut.part1))
    v2 = " ".join(str(v + 1) for v in sorted(cut.part2))
    return f"V1: {v1}\nV2: {v2}\n"


def parse_cut(text: str, i: int, j: int) -> FactorCut:
    parts: dict[str, frozenset[int]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip()
        if key not in {"V1", "V2"}:
            raise ValueError(f"unrecognized cut line {line!r}")
        parts[key] = frozenset(int(tok) - 1 for tok in rest.split())
    if set(parts) != {"V1", "V2"}:
        raise ValueError("cut text must contain one V1: and one V2: line")
    return FactorCut(parts["V1"], parts["V2"], i, j)
