"""Complexity classifier for surjective target colouring.

For targets on at most four vertices the classification is complete: the
problem is NP-complete exactly when some connected component is irreflexive
and non-bipartite, or not loop-connected, or the target is (up to
relabelling) the reflexive 4-cycle or the paw with a looped pendant;
everything else is polynomial-time solvable.  For larger targets the
classifier applies the hardness rules it can justify per component and the
one polynomial rule it can justify globally (loop-connected trees), and
otherwise answers honestly with ``UNKNOWN``.

Rules fire in a fixed documented order; since the hardness rules are
monotone (any one suffices), the order only affects which certificate is
reported.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    are_isomorphic,
    connected_components,
    cycle_graph,
    graph_from_edges,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_loop_connected,
    is_tree,
    true_twin_classes,
)

P = "P"
NPC = "NPC"
UNKNOWN = "UNKNOWN"

# reference encodings of the three special four-vertex targets
C4_STAR = cycle_graph(4, loops=range(4))
DIAMOND = graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)])
PAW_STAR = graph_from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 3)])

_CITATIONS = {
    "irreflexive-nonbipartite": "component is irreflexive and contains an odd cycle",
    "nonloopconnected-tree": "component is a tree whose looped vertices do not induce a connected subgraph",
    "two-reflexive": "component is connected with exactly two non-adjacent looped vertices",
    "twin-lifted-two-reflexive": (
        "component's looped vertices form two non-adjacent true-twin classes whose "
        "contraction is connected with exactly two non-adjacent looped vertices"
    ),
    "reflexive-c4": "component is the reflexive 4-cycle",
    "looped-pendant-paw": "component is the paw with a loop on its pendant vertex",
    "small-target-table": "no hardness pattern applies; targets on at most four vertices are then polynomial",
    "loop-connected-tree": "target is a tree whose looped vertices induce a connected subgraph",
    "no-rule": "no implemented rule covers this target",
}

_COROLLARY_NOTE = (
    "on at most four vertices the surjective, edge-surjective and anchored "
    "variants are polynomially equivalent"
)


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: tuple[int, ...]
    verdict: str
    rule: str
    citation: str


@dataclass(frozen=True)
class Classification:
    verdict: str
    rule: str
    citation: str
    components: tuple[ComponentVerdict, ...]
    notes: tuple[str, ...] = ()


def recognize_lifted_target(h: Graph) -> Optional[tuple[Graph, int, int]]:
    """Invert the true-twin lift of a two-looped target.

    Succeeds when the looped vertices of a connected graph split into exactly
    two non-adjacent mutual-true-twin classes and contracting each class to a
    single looped vertex leaves a connected graph with exactly two
    non-adjacent looped vertices.  Returns the contracted base and the two
    class sizes minus one (classes ordered by smallest member).
    """
    if h.n == 0 or not is_connected(h):
        return None
    looped = h.reflexive_vertices
    if len(looped) < 2:
        return None
    classes = true_twin_classes(h, looped)
    if len(classes) != 2:
        return None
    cls_a, cls_b = sorted(classes, key=min)
    for u in cls_a:
        for v in cls_b:
            if h.has_edge(u, v):
                return None
    # contracting a mutual-true-twin class is the same as deleting all but
    # one member: the survivors keep the class's entire neighbourhood
    survivors = sorted(set(range(h.n)) - set(sorted(cls_a)[1:]) - set(sorted(cls_b)[1:]))
    base, _ = induced_subgraph(h, survivors)
    if not is_connected(base):
        return None
    if len(base.reflexive_vertices) != 2:
        return None
    ra, rb = base.reflexive_vertices
    if base.has_edge(ra, rb):
        return None
    return base, len(cls_a) - 1, len(cls_b) - 1


def _component_hardness(comp: Graph) -> Optional[tuple[str, str]]:
    """First hardness rule that fires for a connected component, if any."""
    if comp.is_irreflexive and not is_bipartite(comp):
        return "irreflexive-nonbipartite", _CITATIONS["irreflexive-nonbipartite"]
    if is_tree(comp) and not is_loop_connected(comp):
        return "nonloopconnected-tree", _CITATIONS["nonloopconnected-tree"]
    looped = comp.reflexive_vertices
    if len(looped) == 2 and not comp.has_edge(*looped):
        return "two-reflexive", _CITATIONS["two-reflexive"]
    if recognize_lifted_target(comp) is not None:
        return "twin-lifted-two-reflexive", _CITATIONS["twin-lifted-two-reflexive"]
    if comp.n <= 8:
        if are_isomorphic(comp, C4_STAR):
            return "reflexive-c4", _CITATIONS["reflexive-c4"]
        if are_isomorphic(comp, PAW_STAR):
            return "looped-pendant-paw", _CITATIONS["looped-pendant-paw"]
    return None


def classify(h: Graph) -> Classification:
    """Classify the surjective colouring problem with target ``h``.

    Hardness of any single component settles the whole target (adding
    components never makes the problem easier), so hardness rules run per
    component; the polynomial verdicts are global.
    """
    comps = connected_components(h)
    verdicts: list[ComponentVerdict] = []
    hard: Optional[ComponentVerdict] = None
    for comp_vertices in comps:
        comp, _ = induced_subgraph(h, comp_vertices)
        fired = _component_hardness(comp)
        if fired is not None:
            rule, citation = fired
            cv = ComponentVerdict(tuple(comp_vertices), NPC, rule, citation)
            if hard is None:
                hard = cv
        else:
            cv = ComponentVerdict(tuple(comp_vertices), P if comp.n <= 4 else UNKNOWN,
                                  "small-target-table" if comp.n <= 4 else "no-rule",
                                  _CITATIONS["small-target-table" if comp.n <= 4 else "no-rule"])
        verdicts.append(cv)

    notes = (_COROLLARY_NOTE,) if h.n <= 4 else ()
    if hard is not None:
        citation = hard.citation
        if len(comps) > 1:
            citation += "; hardness of one component carries over to the whole target"
        return Classification(NPC, hard.rule, citation, tuple(verdicts), notes)
    if h.n <= 4:
        return Classification(
            P, "small-target-table", _CITATIONS["small-target-table"], tuple(verdicts), notes
        )
    if is_tree(h) and is_loop_connected(h):
        return Classification(
            P, "loop-connected-tree", _CITATIONS["loop-connected-tree"], tuple(verdicts), notes
        )
    return Classification(UNKNOWN, "no-rule", _CITATIONS["no-rule"], tuple(verdicts), notes)


def format_classification(c: Classification) -> str:
    lines = [f"VERDICT {c.verdict} RULE {c.rule}", c.citation]
    lines += list(c.notes)
    return "\n".join(lines) + "\n"
