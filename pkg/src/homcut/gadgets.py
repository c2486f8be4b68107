"""Constructive hardness reductions with per-vertex provenance.

Three constructions live here:

* matching-cut to (i, j)-factor-cut lifts: one attached clique when
  ``i == 1`` (case 1), two attached cliques when ``i >= 2`` (case 2);
* the surjective-colouring instance built from a connected target with
  exactly two non-adjacent looped vertices (per input edge, two bridge paths
  between a red/blue vertex quartet; per input vertex, a clique glued to
  them; two rooted factor graphs carrying the rest of the target);
* the true-twin lift of such a target, paired with enlarged cliques.

Every constructed vertex carries exactly one provenance record describing
its role, so instances can be audited and the original input reconstructed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    add_true_twin,
    distances_from,
    induced_subgraph,
    is_connected,
    max_clique_size,
)


@dataclass(frozen=True)
class RootedFactor:
    """A target half with its looped centre replaced by a clique of roots."""

    graph: Graph
    roots: tuple[int, ...]
    origin: tuple[int, ...]  # per-vertex originating target vertex


@dataclass(frozen=True)
class TargetAnalysis:
    """Derived quantities of a connected target with exactly two
    non-adjacent looped vertices ``p`` and ``q``.

    ``h1`` holds the vertices strictly closer to ``p``; ``h2`` the rest
    (ties included).  ``n_p`` are the neighbours of ``p`` lying on shortest
    p-q paths and ``r_p`` is the largest clique size inside ``n_p``
    (symmetrically for ``q``).  Orientation is normalized so that
    ``r_p <= r_q``, keeping (r_p, r_q) a valid cut-parameter pair.
    """

    target: Graph
    p: int
    q: int
    ell: int
    omega: int
    h1: frozenset[int]
    h2: frozenset[int]
    f1: RootedFactor
    f2: RootedFactor
    n_p: frozenset[int]
    n_q: frozenset[int]
    r_p: int
    r_q: int


@dataclass(frozen=True)
class GadgetInstance:
    graph: Graph
    provenance: tuple[dict, ...]
    meta: dict


class TargetRejected(ValueError):
    """The target violates a precondition of the construction."""


def _shortest_path_neighbours(h: Graph, a: int, dist_from_other: list[int], ell: int) -> frozenset[int]:
    return frozenset(v for v in h.neighbors(a) if dist_from_other[v] == ell - 1)


def _clique_in(h: Graph, vertices: frozenset[int]) -> int:
    sub, _ = induced_subgraph(h, vertices)
    return max_clique_size(sub)


def _build_factor(h: Graph, part: frozenset[int], centre: int, omega: int) -> RootedFactor:
    """Replace ``centre`` by a clique of ``omega`` roots inside the induced
    half; copies ``t^a`` and ``t^b`` of vertices ``x`` and ``y`` are adjacent
    exactly when ``xy`` is an edge of the half.  The result carries no loops.
    """
    others = sorted(part - {centre})
    index = {x: omega + k for k, x in enumerate(others)}
    edges: set[tuple[int, int]] = set()
    for a in range(omega):
        for b in range(a + 1, omega):
            if h.has_edge(centre, centre):
                edges.add((a, b))
    for x in others:
        if h.has_edge(centre, x):
            for a in range(omega):
                edges.add((a, index[x]))
        for y in others:
            if x < y and h.has_edge(x, y):
                edges.add((index[x], index[y]))
    graph = Graph.build(omega + len(others), edges)
    origin = tuple([centre] * omega + others)
    return RootedFactor(graph, tuple(range(omega)), origin)


def analyze_target(h: Graph) -> TargetAnalysis:
    """Validate and analyse a two-looped target; raises ``TargetRejected``
    naming the violated condition otherwise.

    The internal structural facts (both halves connected, with distances to
    their looped vertex preserved) are theorems for valid targets, so a
    violation raises ``RuntimeError`` rather than rejecting the input.
    """
    if not is_connected(h):
        raise TargetRejected("target must be connected")
    looped = h.reflexive_vertices
    if len(looped) != 2:
        raise TargetRejected(
            f"target must have exactly 2 reflexive vertices, found {len(looped)}"
        )
    a, b = looped
    if h.has_edge(a, b):
        raise TargetRejected("the two reflexive vertices must be non-adjacent")

    def analysis_for(p: int, q: int):
        dist_p = distances_from(h, p)
        dist_q = distances_from(h, q)
        ell = dist_p[q]
        n_p = _shortest_path_neighbours(h, p, dist_q, ell)
        n_q = _shortest_path_neighbours(h, q, dist_p, ell)
        return dist_p, dist_q, ell, n_p, n_q, _clique_in(h, n_p), _clique_in(h, n_q)

    dist_p, dist_q, ell, n_p, n_q, r_p, r_q = analysis_for(a, b)
    p, q = a, b
    if r_p > r_q:
        # swap orientation so the cut parameters satisfy r_p <= r_q
        p, q = b, a
        dist_p, dist_q, ell, n_p, n_q, r_p, r_q = analysis_for(p, q)
    h1 = frozenset(v for v in range(h.n) if 0 <= dist_p[v] < dist_q[v] or dist_q[v] < 0 <= dist_p[v])
    h2 = frozenset(range(h.n)) - h1
    omega = max_clique_size(h)

    # structural self-checks; failures would indicate a bug, not bad input
    for part, centre, dist in ((h1, p, dist_p), (h2, q, dist_q)):
        sub, old = induced_subgraph(h, part)
        if not is_connected(sub):
            raise RuntimeError("target half is disconnected; analysis is buggy")
        centre_new = old.index(centre)
        sub_dist = distances_from(sub, centre_new)
        for new, v in enumerate(old):
            if sub_dist[new] != dist[v]:
                raise RuntimeError("distance to the looped vertex not preserved in its half")

    return TargetAnalysis(
        target=h,
        p=p,
        q=q,
        ell=ell,
        omega=omega,
        h1=h1,
        h2=h2,
        f1=_build_factor(h, h1, p, omega),
        f2=_build_factor(h, h2, q, omega),
        n_p=n_p,
        n_q=n_q,
        r_p=r_p,
        r_q=r_q,
    )


# ---------------------------------------------------------------------------
# matching cut -> (i, j)-factor cut


def _require_cut_instance(g: Graph, s: int, t: int) -> None:
    if not g.is_irreflexive:
        raise ValueError("instance graph must be irreflexive")
    if not is_connected(g):
        raise ValueError("instance graph must be connected")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError("root out of range")
    if s == t:
        raise ValueError("roots must be distinct")


def build_factorcut_case1(g: Graph, s: int, t: int, j: int) -> GadgetInstance:
    """Attach one clique of size ``max((n-1)(j-1), 1+j)`` fully joined to
    ``s``; every other vertex receives ``j - 1`` private clique neighbours.

    With ``j == 1`` the target problem coincides with the source problem, so
    the input passes through unchanged (flagged in the metadata).
    """
    _require_cut_instance(g, s, t)
    if j < 1:
        raise ValueError("j must be at least 1")
    n = g.n
    if j == 1:
        provenance = tuple({"role": "original", "vertex": v} for v in range(n))
        meta = {"kind": "factorcut-case1", "i": 1, "j": 1, "k": 0, "s": s, "t": t,
                "passthrough": True}
        return GadgetInstance(g, provenance, meta)
    k = max((n - 1) * (j - 1), 1 + j)
    edges = set(g.edges)
    kv = list(range(n, n + k))
    for a in range(k):
        for b in range(a + 1, k):
            edges.add((kv[a], kv[b]))
    for x in kv:
        edges.add((s, x))
    # round-robin attachment: each clique vertex serves one outside vertex
    ptr = 0
    for v in range(n):
        if v == s:
            continue
        for _ in range(j - 1):
            edges.add((v, kv[ptr]))
            ptr += 1
    assert ptr <= k, "clique too small for the one-neighbour rule"
    provenance = tuple(
        [{"role": "original", "vertex": v} for v in range(n)]
        + [{"role": "k_vertex", "clique": "K", "index": a} for a in range(k)]
    )
    meta = {"kind": "factorcut-case1", "i": 1, "j": j, "k": k, "s": s, "t": t,
            "passthrough": False}
    return GadgetInstance(Graph.build(n + k, edges), provenance, meta)


def build_factorcut_case2(g: Graph, s: int, t: int, i: int, j: int) -> GadgetInstance:
    """Attach cliques of size ``max((n-1)(j-1), i+j)`` at both roots; every
    non-root vertex receives ``j - 1`` private neighbours in the ``s`` clique
    and ``i - 1`` in the ``t`` clique."""
    _require_cut_instance(g, s, t)
    if i < 2:
        raise ValueError("case 2 requires i >= 2")
    if j < i:
        raise ValueError("parameters must satisfy i <= j")
    n = g.n
    k = max((n - 1) * (j - 1), i + j)
    edges = set(g.edges)
    ks = list(range(n, n + k))
    kt = list(range(n + k, n + 2 * k))
    for block, anchor in ((ks, s), (kt, t)):
        for a in range(k):
            for b in range(a + 1, k):
                edges.add((min(block[a], block[b]), max(block[a], block[b])))
        for x in block:
            edges.add((min(anchor, x), max(anchor, x)))
    ptr = 0
    for v in range(n):
        if v == s:
            continue
        for _ in range(j - 1):
            edges.add((v, ks[ptr]))
            ptr += 1
    assert ptr <= k
    ptr = 0
    for v in range(n):
        if v == t:
            continue
        for _ in range(i - 1):
            edges.add((v, kt[ptr]))
            ptr += 1
    assert ptr <= k
    provenance = tuple(
        [{"role": "original", "vertex": v} for v in range(n)]
        + [{"role": "k_vertex", "clique": "Ks", "index": a} for a in range(k)]
        + [{"role": "k_vertex", "clique": "Kt", "index": a} for a in range(k)]
    )
    meta = {"kind": "factorcut-case2", "i": i, "j": j, "k": k, "s": s, "t": t}
    return GadgetInstance(Graph.build(n + 2 * k, edges), provenance, meta)


def build_factorcut(g: Graph, s: int, t: int, i: int, j: int) -> GadgetInstance:
    """Dispatch on ``i``: one attached clique when ``i == 1``, two otherwise."""
    if i < 1 or j < i:
        raise ValueError("parameters must satisfy 1 <= i <= j")
    if i == 1:
        return build_factorcut_case1(g, s, t, j)
    return build_factorcut_case2(g, s, t, i, j)


# ---------------------------------------------------------------------------
# the surjective-colouring instance


def build_surjective_instance(
    ta: TargetAnalysis,
    g: Graph,
    s: int,
    t: int,
    clique_size: Optional[int] = None,
) -> GadgetInstance:
    """Build the reduction instance from a cut-with-roots instance ``(g, s, t)``.

    Per edge ``uv`` of ``g``: four vertices (red/blue for each endpoint) and
    two bridge paths of length ``ell - 2`` joining red-of-one to blue-of-the-
    other; at ``ell == 2`` the pairs are identified, so one vertex is red for
    one endpoint and blue for the other.  Per vertex ``u``: a clique ``C_u``
    adjacent to all its red and blue vertices, with the red ones pairwise
    adjacent and the blue ones kept independent.  The two rooted factors are
    glued by identifying root ``k`` with the ``k``-th member of ``C_s``
    (respectively ``C_t``).

    ``clique_size`` (default: the target's clique number ``omega``) enlarges
    every ``C_u``; the enlarged form pairs with true-twin lifted targets.
    The vertex count always equals
    ``clique_size * n + 2 * (ell - 1) * m + |V_target| - 2``.
    """
    if g.n < 2:
        raise ValueError("instance graph needs at least 2 vertices")
    _require_cut_instance(g, s, t)
    size = ta.omega if clique_size is None else clique_size
    if size < ta.omega:
        raise ValueError(f"clique size {size} is below the clique number {ta.omega}")
    n, m = g.n, len(g.edges)
    ell = ta.ell
    gedges = g.sorted_edges()

    prov: list[dict] = []
    edges: set[tuple[int, int]] = set()

    def connect(a: int, b: int) -> None:
        edges.add((a, b) if a < b else (b, a))

    cliques = [[u * size + k for k in range(size)] for u in range(n)]
    for u in range(n):
        for k in range(size):
            prov.append({"role": "clique", "vertex": u, "index": k})
        for a in range(size):
            for b in range(a + 1, size):
                connect(cliques[u][a], cliques[u][b])

    base = size * n
    red_of: dict[tuple[int, int], int] = {}   # (vertex, edge index) -> red vertex
    blue_of: dict[tuple[int, int], int] = {}
    for ei, (u, v) in enumerate(gedges):
        block = base + ei * 2 * (ell - 1)
        if ell == 2:
            x, y = block, block + 1
            red_of[u, ei] = x
            blue_of[v, ei] = x
            red_of[v, ei] = y
            blue_of[u, ei] = y
            prov.append({"role": "red_blue", "red_of": u, "blue_of": v, "edge": [u, v]})
            prov.append({"role": "red_blue", "red_of": v, "blue_of": u, "edge": [u, v]})
        else:
            ru, bu, rv, bv = block, block + 1, block + 2, block + 3
            red_of[u, ei] = ru
            blue_of[u, ei] = bu
            red_of[v, ei] = rv
            blue_of[v, ei] = bv
            prov.append({"role": "red", "vertex": u, "edge": [u, v]})
            prov.append({"role": "blue", "vertex": u, "edge": [u, v]})
            prov.append({"role": "red", "vertex": v, "edge": [u, v]})
            prov.append({"role": "blue", "vertex": v, "edge": [u, v]})
            inner = ell - 3
            p1 = [block + 4 + k for k in range(inner)]
            p2 = [block + 4 + inner + k for k in range(inner)]
            for k in range(inner):
                prov.append({"role": "path_inner", "edge": [u, v], "path": 1, "position": k + 1})
            for k in range(inner):
                prov.append({"role": "path_inner", "edge": [u, v], "path": 2, "position": k + 1})
            for chain in ([ru] + p1 + [bv], [rv] + p2 + [bu]):
                for a, b in zip(chain, chain[1:]):
                    connect(a, b)

    for u in range(n):
        incident = [ei for ei, (a, b) in enumerate(gedges) if u in (a, b)]
        for ei in incident:
            for c in cliques[u]:
                connect(c, red_of[u, ei])
                connect(c, blue_of[u, ei])
        reds = [red_of[u, ei] for ei in incident]
        for a in range(len(reds)):
            for b in range(a + 1, len(reds)):
                connect(reds[a], reds[b])

    # glue the rooted factors onto the cliques of the two roots
    fbase = base + 2 * (ell - 1) * m
    fmaps = []
    for which, factor, anchor in (("f1", ta.f1, s), ("f2", ta.f2, t)):
        fmap: dict[int, int] = {}
        for k, root in enumerate(factor.roots):
            fmap[root] = cliques[anchor][k]
        for w in range(factor.graph.n):
            if w in fmap:
                continue
            fmap[w] = fbase
            prov.append({"role": which, "target_vertex": factor.origin[w]})
            fbase += 1
        for a, b in factor.graph.edges:
            connect(fmap[a], fmap[b])
        fmaps.append(fmap)

    total = fbase
    expected = size * n + 2 * (ell - 1) * m + ta.target.n - 2
    assert total == expected, "vertex count diverges from the size formula"
    graph = Graph.build(total, edges)
    assert graph.is_irreflexive
    meta = {
        "kind": "surjective",
        "n": n,
        "m": m,
        "ell": ell,
        "omega": ta.omega,
        "clique_size": size,
        "s": s,
        "t": t,
        "target_vertices": ta.target.n,
        "expected_vertices": expected,
        "cliques": tuple(tuple(c) for c in cliques),
    }
    return GadgetInstance(graph, tuple(prov), meta)


def lift_target(h: Graph, ta: TargetAnalysis, i: int, j: int) -> Graph:
    """Add ``i`` reflexive true twins of ``p`` and ``j`` of ``q``; the
    ``(0, 0)`` lift is the target itself."""
    if i < 0 or j < 0:
        raise ValueError("twin counts must be non-negative")
    if h != ta.target:
        raise ValueError("analysis does not belong to this target")
    out = h
    for _ in range(i):
        out = add_true_twin(out, ta.p, True)
    for _ in range(j):
        out = add_true_twin(out, ta.q, True)
    return out


# ---------------------------------------------------------------------------
# provenance serialization


def provenance_json(inst: GadgetInstance) -> dict:
    """Sidecar payload: 1-based vertex ids mapped to their role records."""
    def shift(record: dict) -> dict:
        out = dict(record)
        for key in ("vertex", "red_of", "blue_of"):
            if key in out:
                out[key] = out[key] + 1
        if "edge" in out:
            out["edge"] = [e + 1 for e in out["edge"]]
        if "target_vertex" in out:
            out["target_vertex"] = out["target_vertex"] + 1
        if "index" in out:
            out["index"] = out["index"] + 1
        return out

    return {str(v + 1): shift(rec) for v, rec in enumerate(inst.provenance)}
