"""Exact solvers for five homomorphism variants, plus witness checking.

A witness is a total vertex map ``f`` from the input graph ``g`` into the
target ``h`` (a plain ``list[int]``) such that every ``g``-edge lands on an
``h``-edge; two adjacent vertices may share an image only when that image
carries a loop.  The variants:

``"hom"``      plain homomorphism,
``"surj"``     every target vertex must be hit,
``"comp"``     every non-loop target edge must be realized by an input edge
               (loops are exempt; vertex-surjectivity is not implied),
``Retraction`` anchored vertices are fixed pointwise onto an induced copy of
               the target inside the input,
``ListHom``    per-vertex candidate lists.

A retraction is solved as a list homomorphism with singleton lists on the
anchors.  Search order is frozen (variables by descending input degree, ties
by id; values ascending), so witnesses are reproducible across runs and
backends.  Inputs to ``"hom"``/``"surj"``/``"comp"`` must be irreflexive
unless ``allow_reflexive_input`` is set.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Union

import numpy as np

from . import _kernels
from .graph import Graph, distances_from

PLAIN = "hom"
SURJECTIVE = "surj"
COMPACTION = "comp"

_MAX_TARGET = 120  # images are stored as int8


@dataclass(frozen=True)
class Retraction:
    """Anchors are (input vertex, target vertex) pairs fixing the map on an
    induced copy of the target."""

    anchors: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ListHom:
    lists: tuple[frozenset[int], ...]


Variant = Union[str, Retraction, ListHom]
Mapping = list[int]


def _variant_mode(variant: Variant) -> int:
    if variant == SURJECTIVE:
        return 1
    if variant == COMPACTION:
        return 2
    return 0


def _validate_anchors(g: Graph, h: Graph, anchors: tuple[tuple[int, int], ...]) -> None:
    gs = [a for a, _ in anchors]
    hs = [b for _, b in anchors]
    if sorted(hs) != list(range(h.n)):
        raise ValueError("retraction anchors must cover the target exactly once")
    if len(set(gs)) != len(gs):
        raise ValueError("retraction anchors repeat an input vertex")
    for (a, x) in anchors:
        if not 0 <= a < g.n:
            raise ValueError("anchor vertex out of range")
    for (a, x), (b, y) in permutations(anchors, 2):
        if g.has_edge(a, b) != h.has_edge(x, y):
            raise ValueError("anchors do not identify an induced copy of the target")
    for a, x in anchors:
        if g.has_edge(a, a) != h.has_edge(x, x):
            raise ValueError("anchors do not identify an induced copy of the target")


def _candidate_lists(g: Graph, h: Graph, variant: Variant) -> np.ndarray:
    allowed = np.ones((g.n, h.n), np.uint8)
    if isinstance(variant, ListHom):
        if len(variant.lists) != g.n:
            raise ValueError("one candidate list per input vertex is required")
        allowed[:] = 0
        for u, lst in enumerate(variant.lists):
            for x in lst:
                if not 0 <= x < h.n:
                    raise ValueError(f"list entry {x} out of target range")
                allowed[u, x] = 1
    elif isinstance(variant, Retraction):
        _validate_anchors(g, h, variant.anchors)
        for a, x in variant.anchors:
            allowed[a, :] = 0
            allowed[a, x] = 1
    # a looped input vertex can only map onto a looped target vertex
    for u in range(g.n):
        if g.reflexive(u):
            for x in range(h.n):
                if not h.reflexive(x):
                    allowed[u, x] = 0
    return allowed


def _check_inputs(g: Graph, h: Graph, variant: Variant, allow_reflexive_input: bool) -> None:
    if g.n == 0 or h.n == 0:
        raise ValueError("input and target graphs must be nonempty")
    if h.n > _MAX_TARGET:
        raise ValueError(f"targets beyond {_MAX_TARGET} vertices are not supported")
    if variant in (PLAIN, SURJECTIVE, COMPACTION):
        if not g.is_irreflexive and not allow_reflexive_input:
            raise ValueError(
                "input graphs for this variant are irreflexive by convention; "
                "pass allow_reflexive_input=True to override"
            )
    elif not isinstance(variant, (Retraction, ListHom)):
        raise ValueError(f"unknown variant {variant!r}")


def _search_arrays(g: Graph, h: Graph, variant: Variant):
    order = np.array(
        sorted(range(g.n), key=lambda u: (-g.degree(u), u)), np.int32
    )
    nbr_start = np.zeros(g.n + 1, np.int32)
    counts = [len(g.neighbors(u)) for u in range(g.n)]
    np.cumsum(counts, out=nbr_start[1:])
    nbr = np.empty(int(nbr_start[-1]), np.int32)
    pos = nbr_start[:-1].copy()
    non_loop = g.non_loop_edges()
    for u, v in non_loop:
        nbr[pos[u]] = v
        pos[u] += 1
        nbr[pos[v]] = u
        pos[v] += 1
    edge_u = np.array([u for u, _ in non_loop], np.int32)
    edge_v = np.array([v for _, v in non_loop], np.int32)
    inc_start = np.zeros(g.n + 1, np.int32)
    np.cumsum(counts, out=inc_start[1:])
    inc_edge = np.empty(int(inc_start[-1]), np.int32)
    pos = inc_start[:-1].copy()
    for e, (u, v) in enumerate(non_loop):
        inc_edge[pos[u]] = e
        pos[u] += 1
        inc_edge[pos[v]] = e
        pos[v] += 1
    hadj = np.zeros((h.n, h.n), np.uint8)
    h_eidx = np.full((h.n, h.n), -1, np.int32)
    n_h_edges = 0
    for x, y in sorted(h.edges):
        hadj[x, y] = 1
        hadj[y, x] = 1
        if x != y:
            h_eidx[x, y] = n_h_edges
            h_eidx[y, x] = n_h_edges
            n_h_edges += 1
    allowed = _candidate_lists(g, h, variant)
    return order, nbr_start, nbr, inc_start, inc_edge, edge_u, edge_v, allowed, hadj, h_eidx, n_h_edges


def _run(g: Graph, h: Graph, variant: Variant, cap: int, allow_reflexive_input: bool):
    _check_inputs(g, h, variant, allow_reflexive_input)
    arrays = _search_arrays(g, h, variant)
    allowed = arrays[7]
    if not allowed.any(axis=1).all():
        return [], False  # some vertex has an empty candidate list
    mode = _variant_mode(variant)
    out = np.zeros((cap, g.n), np.int8)
    count, truncated = _kernels.hom_search(*arrays[:10], arrays[10], mode, out, cap)
    witnesses = [[int(x) for x in out[k]] for k in range(count)]
    for f in witnesses:
        failure = witness_failure(g, h, f, variant)
        if failure is not None:  # pragma: no cover - engine self-check
            raise RuntimeError(f"search produced an invalid witness: {failure}")
    return witnesses, bool(truncated)


def solve(
    g: Graph, h: Graph, variant: Variant, *, allow_reflexive_input: bool = False
) -> Optional[Mapping]:
    """Return the canonical witness, or ``None`` iff none exists.

    The result is deterministic: the first mapping in the frozen search
    order.  Every returned witness is re-verified with ``check_witness``.
    """
    witnesses, _ = _run(g, h, variant, cap=1, allow_reflexive_input=allow_reflexive_input)
    return witnesses[0] if witnesses else None


def enumerate_all(
    g: Graph,
    h: Graph,
    variant: Variant,
    limit: int = 100_000,
    *,
    allow_reflexive_input: bool = False,
) -> tuple[list[Mapping], bool]:
    """All witnesses in search order, plus a truncation flag.

    If more than ``limit`` witnesses exist the first ``limit`` are returned
    and the flag is True.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    witnesses, truncated = _run(
        g, h, variant, cap=limit + 1, allow_reflexive_input=allow_reflexive_input
    )
    if truncated:
        return witnesses[:limit], True
    return witnesses, False


# ---------------------------------------------------------------------------
# witness checking (independent of the search kernel)


def witness_failure(g: Graph, h: Graph, f: Mapping, variant: Variant) -> Optional[str]:
    """None if ``f`` is a valid witness, else a human-readable reason."""
    if len(f) != g.n:
        return f"mapping has {len(f)} entries for {g.n} vertices"
    if any(not (0 <= x < h.n) for x in f):
        return "mapping image out of target range"
    for u, v in g.edges:
        if not h.has_edge(f[u], f[v]):
            return f"edge ({u + 1}, {v + 1}) maps to non-edge ({f[u] + 1}, {f[v] + 1})"
    if variant == SURJECTIVE:
        missing = set(range(h.n)) - set(f)
        if missing:
            return f"target vertex {min(missing) + 1} is not hit"
    elif variant == COMPACTION:
        realized = {(min(f[u], f[v]), max(f[u], f[v])) for u, v in g.edges if f[u] != f[v]}
        for x, y in h.edges:
            if x != y and (x, y) not in realized:
                return f"target edge ({x + 1}, {y + 1}) is not realized"
    elif isinstance(variant, Retraction):
        for a, x in variant.anchors:
            if f[a] != x:
                return f"anchor {a + 1} maps to {f[a] + 1} instead of {x + 1}"
    elif isinstance(variant, ListHom):
        for u, lst in enumerate(variant.lists):
            if f[u] not in lst:
                return f"vertex {u + 1} maps outside its list"
    return None


def check_witness(g: Graph, h: Graph, f: Mapping, variant: Variant) -> bool:
    """True iff ``f`` preserves all edges and satisfies the variant clause."""
    return witness_failure(g, h, f, variant) is None


def is_distance_nonexpansive(g: Graph, h: Graph, f: Mapping) -> bool:
    """Check dist_g(u, v) >= dist_h(f(u), f(v)) over all connected pairs.

    Holds for every homomorphism: the image of a path is a walk.
    """
    dh = [distances_from(h, x) for x in range(h.n)]
    for u in range(g.n):
        dg = distances_from(g, u)
        for v in range(u + 1, g.n):
            if dg[v] < 0:
                continue
            dhv = dh[f[u]][f[v]]
            if dhv < 0 or dg[v] < dhv:
                return False
    return True


def find_induced_copy(g: Graph, h: Graph) -> Optional[tuple[tuple[int, int], ...]]:
    """Anchors for some induced copy of ``h`` inside ``g``, or ``None``.

    Brute-force over injections; meant for tiny targets when setting up
    retraction instances.
    """
    verts = list(range(g.n))
    for combo in permutations(verts, h.n):
        ok = True
        for x in range(h.n):
            if g.has_edge(combo[x], combo[x]) != h.has_edge(x, x):
                ok = False
                break
            for y in range(x + 1, h.n):
                if g.has_edge(combo[x], combo[y]) != h.has_edge(x, y):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return tuple((combo[x], x) for x in range(h.n))
    return None


# ---------------------------------------------------------------------------
# witness text format


def format_witness(f: Mapping) -> str:
    return "".join(f"{u + 1} -> {x + 1}\n" for u, x in enumerate(f))


def parse_vertex_pairs(text: str) -> list[tuple[int, int]]:
    """Parse ``<u> -> <x>`` lines (1-based) into 0-based pairs."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        left, sep, right = line.partition("->")
        if not sep:
            raise ValueError(f"line {lineno}: expected '<u> -> <x>', got {line!r}")
        pairs.append((int(left) - 1, int(right) - 1))
    return pairs
