"""Obstruction predicates: minimality, critical vertices, domination.

An obstruction is a pair (G, L) with no proper coloring from the lists.
It is minimal when deleting any single vertex (with its list) restores
colorability; for list obstructions vertex deletion is the right notion
of minimality, and the predicates here only ever delete vertices.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coloring import FULL_MASK, ListSystem, l_colorable
from .graphs import Graph, induced_subgraph


def _delete_vertex(g: Graph, l: ListSystem, v: int) -> tuple[Graph, ListSystem]:
    keep = [u for u in range(g.n) if u != v]
    return induced_subgraph(g, keep), ListSystem(l.masks[u] for u in keep)


def is_obstruction(g: Graph, l: ListSystem) -> bool:
    """True when (g, l) admits no proper coloring from the lists."""
    return l_colorable(g, l) is None


def is_minimal_obstruction(g: Graph, l: ListSystem) -> bool:
    """Uncolorable, and colorable again after deleting any one vertex."""
    if l_colorable(g, l) is not None:
        return False
    for v in range(g.n):
        gd, ld = _delete_vertex(g, l, v)
        if l_colorable(gd, ld) is None:
            return False
    return True


def critical_vertices(g: Graph, l: ListSystem) -> list[int]:
    """Vertices whose deletion restores colorability.

    Only defined for obstructions; a colorable instance raises ValueError.
    """
    if l_colorable(g, l) is not None:
        raise ValueError("critical vertices are only defined for uncolorable instances")
    out = []
    for v in range(g.n):
        gd, ld = _delete_vertex(g, l, v)
        if l_colorable(gd, ld) is not None:
            out.append(v)
    return out


def extract_minimal(g: Graph, l: ListSystem) -> tuple[tuple[int, ...], Graph, ListSystem]:
    """Shrink an uncolorable instance to a minimal obstruction inside it.

    Repeatedly deletes the lowest-indexed vertex whose deletion keeps the
    instance uncolorable, recomputing after every deletion.  Returns the
    surviving original vertex indices with the induced graph and lists.
    """
    if l_colorable(g, l) is not None:
        raise ValueError("extract_minimal needs an uncolorable instance")
    alive = list(range(g.n))
    cg, cl = g, l
    changed = True
    while changed:
        changed = False
        for i in range(len(alive)):
            gd, ld = _delete_vertex(cg, cl, i)
            if l_colorable(gd, ld) is None:
                del alive[i]
                cg, cl = gd, ld
                changed = True
                break
    return tuple(alive), cg, cl


def dominates(g: Graph, l: ListSystem, u: int, v: int) -> bool:
    """Does ``u`` dominate ``v``: L(u) contained in L(v) and N(v) in N(u)?

    Neighborhoods are open, so adjacent vertices never dominate each other.
    A minimal obstruction can never contain a dominating pair.
    """
    if u == v:
        raise ValueError("domination needs two distinct vertices")
    if l.n != g.n:
        raise ValueError(f"list system has {l.n} entries for a {g.n}-vertex graph")
    if l.masks[u] & ~l.masks[v]:
        return False
    return g.rows[v] & ~g.rows[u] == 0


def is_4_vertex_critical(g: Graph) -> bool:
    """Not 3-colorable, but 3-colorable after deleting any one vertex."""
    full = ListSystem([FULL_MASK] * g.n)
    if l_colorable(g, full) is not None:
        return False
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        gd = induced_subgraph(g, keep)
        if l_colorable(gd, ListSystem([FULL_MASK] * gd.n)) is None:
            return False
    return True


@dataclass(frozen=True)
class ObstructionReport:
    """Everything the ``check`` command reports about one instance."""

    colorable: bool
    witness: tuple[int, ...] | None
    minimal: bool
    non_critical: tuple[int, ...]
    extracted: tuple[tuple[int, ...], Graph, ListSystem] | None

    def to_json_dict(self) -> dict:
        from .coloring import lists_to_json

        out: dict = {
            "colorable": self.colorable,
            "witness": list(self.witness) if self.witness is not None else None,
            "minimal": self.minimal,
            "non_critical": list(self.non_critical),
        }
        if self.extracted is None:
            out["extracted"] = None
        else:
            verts, _, ls = self.extracted
            out["extracted"] = {"vertices": list(verts), "lists": lists_to_json(ls)}
        return out


def obstruction_report(g: Graph, l: ListSystem) -> ObstructionReport:
    """Solve, test minimality, list non-critical vertices, extract a core."""
    witness = l_colorable(g, l)
    if witness is not None:
        return ObstructionReport(True, witness, False, (), None)
    crit = set(critical_vertices(g, l))
    non_crit = tuple(v for v in range(g.n) if v not in crit)
    return ObstructionReport(False, None, not non_crit, non_crit, extract_minimal(g, l))
