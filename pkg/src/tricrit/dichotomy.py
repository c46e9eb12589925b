"""Structural classification of patterns into finite and infinite regimes.

For a pattern H, two questions have a complete answer: whether only
finitely many 4-vertex-critical graphs avoid H, and whether only finitely
many minimal list obstructions avoid H.  Both hinge on the shape of H:
any cycle, any claw, or an induced 2P2+P1 puts H in the infinite regime
for both questions; 2P3 keeps 4-vertex-critical graphs finite but admits
infinitely many minimal list obstructions; everything else is a linear
forest inside P6 or inside P4+kP1 and both classes are finite.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, components, find_induced_embedding, pattern_graph

CASE_CONTAINS_CYCLE = "contains-cycle"
CASE_CONTAINS_CLAW = "contains-claw"
CASE_CONTAINS_2P2_P1 = "contains-2P2+P1"
CASE_EQUALS_2P3 = "equals-2P3"
CASE_SUBGRAPH_OF_P6 = "induced-subgraph-of-P6"
CASE_SUBGRAPH_OF_P4_KP1 = "induced-subgraph-of-P4+kP1"

ALL_CASES = (
    CASE_CONTAINS_CYCLE,
    CASE_CONTAINS_CLAW,
    CASE_CONTAINS_2P2_P1,
    CASE_EQUALS_2P3,
    CASE_SUBGRAPH_OF_P6,
    CASE_SUBGRAPH_OF_P4_KP1,
)


@dataclass(frozen=True)
class DichotomyVerdict:
    """Classification of one pattern.

    ``finite_vertex_critical`` says whether only finitely many
    4-vertex-critical graphs avoid the pattern; ``finite_list_obstructions``
    says the same about minimal list obstructions.  ``witness`` is the
    embedded forbidden structure for the infinite cases, or the embedding
    into the host path(s) for the finite cases.  ``k`` is the minimal k
    for the P4+kP1 case.
    """

    case: str
    finite_vertex_critical: bool
    finite_list_obstructions: bool
    witness: tuple[int, ...] | None = None
    k: int | None = None

    def __post_init__(self):
        if self.case not in ALL_CASES:
            raise ValueError(f"unknown case {self.case!r}")

    def to_json_dict(self) -> dict:
        return {
            "case": self.case,
            "finite_vertex_critical": self.finite_vertex_critical,
            "finite_list_obstructions": self.finite_list_obstructions,
            "witness": list(self.witness) if self.witness is not None else None,
            "k": self.k,
        }


def _path_order(g: Graph, comp: list[int]) -> list[int] | None:
    """The vertices of a component in path order, or None if not a path."""
    if len(comp) == 1:
        return comp[:]
    sub_deg = {v: len([u for u in comp if g.has_edge(u, v)]) for v in comp}
    ends = [v for v in comp if sub_deg[v] == 1]
    if len(ends) != 2 or any(d > 2 for d in sub_deg.values()):
        return None
    order = [min(ends)]
    seen = {order[0]}
    while len(order) < len(comp):
        nxt = [u for u in comp if g.has_edge(order[-1], u) and u not in seen]
        if len(nxt) != 1:
            return None
        order.append(nxt[0])
        seen.add(nxt[0])
    if len(order) != len(comp):
        return None
    return order


def _linear_forest(g: Graph) -> list[list[int]] | None:
    """Components in path order if every component is a path, else None."""
    out = []
    for comp in components(g):
        order = _path_order(g, comp)
        if order is None:
            return None
        out.append(order)
    return out


def is_induced_subgraph_of_P6(h) -> tuple[int, ...] | None:
    """An embedding of ``h`` into the 6-vertex path, or None.

    The embedding maps each vertex of ``h`` to a position 0..5; edges and
    non-edges are both preserved.
    """
    g = pattern_graph(h)
    paths = _linear_forest(g)
    if paths is None:
        return None
    need = sum(len(p) for p in paths) + max(0, len(paths) - 1)
    if need > 6:
        return None
    image = [-1] * g.n
    pos = 0
    for comp in paths:
        for v in comp:
            image[v] = pos
            pos += 1
        pos += 1
    return tuple(image)


def is_induced_subgraph_of_P4kP1(h) -> tuple[int, tuple[int, ...]] | None:
    """The minimal k with ``h`` inside P4 plus k isolated vertices, or None.

    Returns (k, embedding) where host vertices 0..3 form the path and
    4..3+k are the isolated vertices.
    """
    g = pattern_graph(h)
    paths = _linear_forest(g)
    if paths is None:
        return None
    big = [p for p in paths if len(p) >= 2]
    singles = [p[0] for p in paths if len(p) == 1]
    if len(big) > 1:
        return None
    if big and len(big[0]) > 4:
        return None
    image = [-1] * g.n
    spares: list[int]
    if not big:
        # Positions 0 and 2 of the path are non-adjacent, so two isolated
        # vertices ride inside the host path for free.
        k = max(0, len(singles) - 2)
        spares = [0, 2]
    else:
        comp = big[0]
        for i, v in enumerate(comp):
            image[v] = i
        if len(comp) == 2:
            k = max(0, len(singles) - 1)
            spares = [3]
        else:
            k = len(singles)
            spares = []
    nxt = 4
    for v in singles:
        if spares:
            image[v] = spares.pop(0)
        else:
            image[v] = nxt
            nxt += 1
    return k, tuple(image)


def _find_short_cycle(g: Graph) -> tuple[int, ...] | None:
    """A shortest cycle, which is always chordless, or None in a forest."""
    best: list[int] | None = None
    for u, v in g.edges():
        # BFS from u to v avoiding the edge (u, v).
        prev = {u: u}
        queue = [u]
        while queue and v not in prev:
            nq = []
            for a in queue:
                for b in g.neighbors(a):
                    if a == u and b == v:
                        continue
                    if b not in prev:
                        prev[b] = a
                        nq.append(b)
            queue = nq
        if v in prev:
            path = [v]
            while path[-1] != u:
                path.append(prev[path[-1]])
            if best is None or len(path) < len(best):
                best = path
    return tuple(best) if best is not None else None


def classify(h) -> DichotomyVerdict:
    """Decide the finite/infinite regime of a pattern.

    Checks run in a fixed order: a cycle, then a claw, then an induced
    2P2+P1 put the pattern in the doubly infinite regime.  What remains is
    a linear forest: two components of size 3 are exactly 2P3; any other
    second component of size 2 or more fits inside P6, as does a single
    path of 5 or 6 vertices; everything else fits inside P4+kP1.
    """
    g = pattern_graph(h)
    cyc = _find_short_cycle(g)
    if cyc is not None:
        return DichotomyVerdict(CASE_CONTAINS_CYCLE, False, False, witness=cyc)
    emb = find_induced_embedding(g, "claw")
    if emb is not None:
        return DichotomyVerdict(CASE_CONTAINS_CLAW, False, False, witness=emb)
    emb = find_induced_embedding(g, "2P2+P1")
    if emb is not None:
        return DichotomyVerdict(CASE_CONTAINS_2P2_P1, False, False, witness=emb)
    paths = _linear_forest(g)
    if paths is None:
        raise AssertionError("an acyclic claw-free graph must be a linear forest")
    sizes = sorted((len(p) for p in paths), reverse=True)
    if len(sizes) >= 2 and sizes[1] >= 2:
        if sizes == [3, 3]:
            order = [v for comp in paths for v in comp]
            return DichotomyVerdict(
                CASE_EQUALS_2P3, True, False, witness=tuple(order)
            )
        emb6 = is_induced_subgraph_of_P6(g)
        if emb6 is None:
            raise AssertionError("two nontrivial path components here must fit in P6")
        return DichotomyVerdict(CASE_SUBGRAPH_OF_P6, True, True, witness=emb6)
    if sizes and sizes[0] >= 5:
        emb6 = is_induced_subgraph_of_P6(g)
        if emb6 is None:
            raise AssertionError("a single path of 5 or 6 vertices must fit in P6")
        return DichotomyVerdict(CASE_SUBGRAPH_OF_P6, True, True, witness=emb6)
    res = is_induced_subgraph_of_P4kP1(g)
    if res is None:
        raise AssertionError("remaining patterns must fit in P4+kP1")
    k, emb = res
    return DichotomyVerdict(CASE_SUBGRAPH_OF_P4_KP1, True, True, witness=emb, k=k)


def describe(verdict: DichotomyVerdict) -> str:
    """One readable sentence stating what the verdict means."""
    if verdict.case in (CASE_CONTAINS_CYCLE, CASE_CONTAINS_CLAW, CASE_CONTAINS_2P2_P1):
        inner = {
            CASE_CONTAINS_CYCLE: "a cycle",
            CASE_CONTAINS_CLAW: "an induced claw",
            CASE_CONTAINS_2P2_P1: "an induced 2P2+P1",
        }[verdict.case]
        return (
            f"The pattern contains {inner}, so infinitely many 4-vertex-critical "
            "graphs and infinitely many minimal list obstructions avoid it."
        )
    if verdict.case == CASE_EQUALS_2P3:
        return (
            "The pattern is exactly 2P3: only finitely many 4-vertex-critical "
            "graphs avoid it, but infinitely many minimal list obstructions do."
        )
    where = "P6" if verdict.case == CASE_SUBGRAPH_OF_P6 else f"P4+{verdict.k}P1"
    return (
        f"The pattern embeds in {where}: only finitely many 4-vertex-critical "
        "graphs and finitely many minimal list obstructions avoid it."
    )
