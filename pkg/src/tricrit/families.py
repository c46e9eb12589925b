"""Two infinite certificate families and their property verifiers.

``gen_Gr`` builds, for each r >= 1, a circulant graph on 3r+1 vertices
whose chord offsets are 1 and every value congruent to 2 mod 3 up to the
midpoint.  These graphs are 4-vertex-critical yet avoid both P7 and
2P2+P1, which certifies that forbidding those patterns leaves infinitely
many 4-vertex-critical graphs.

``gen_Hr`` builds, for each r >= 1, a chorded path on 3r-1 vertices with
color lists that force a contradiction: both endpoints insist on color 1
and the interior lists follow a period-3 schedule, with chords from
vertices congruent to 2 mod 3 forward to vertices congruent to 1 mod 3.
Each instance is a minimal list obstruction containing no induced 2P3,
which certifies that forbidding 2P3 leaves infinitely many minimal
obstructions even though 4-vertex-critical graphs stay finite there.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coloring import ListSystem, l_colorable, precolor_and_update, update_along_path
from .graphs import MAX_VERTICES, Graph, contains_induced, find_induced_embedding, induced_subgraph
from .obstructions import is_4_vertex_critical, is_minimal_obstruction


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    passed: bool
    details: str = ""


@dataclass(frozen=True)
class FamilyReport:
    """Outcome of verifying one family member, one line per property."""

    family: str
    r: int
    checks: tuple[PropertyCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "r": self.r,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "details": c.details}
                for c in self.checks
            ],
        }


def gen_Gr(r: int) -> Graph:
    """The circulant certificate graph on 3r+1 vertices.

    Vertex i is joined to i +- 1 and to i + d for every offset d = 3j+2
    with 0 <= j < r, all mod 3r+1.  The offset set is closed under
    negation mod 3r+1, which makes the construction symmetric; the degree
    implied by the offsets is asserted as a self-check.
    """
    if r < 1:
        raise ValueError(f"family parameter must be at least 1, got {r}")
    n = 3 * r + 1
    if n > MAX_VERTICES:
        raise ValueError(f"3r+1 = {n} exceeds the supported maximum of {MAX_VERTICES} vertices")
    offsets = {1, n - 1}
    for j in range(r):
        offsets.add(3 * j + 2)
        offsets.add(n - (3 * j + 2))
    edges = set()
    for i in range(n):
        for d in offsets:
            a, b = i, (i + d) % n
            edges.add((min(a, b), max(a, b)))
    g = Graph(n, sorted(edges))
    expected_degree = len(offsets)
    if any(g.degree(v) != expected_degree for v in range(n)):
        raise AssertionError("circulant degree self-check failed")
    return g


def verify_Gr(r: int) -> FamilyReport:
    """Check the four defining properties of the r-th circulant certificate."""
    g = gen_Gr(r)
    n = g.n
    checks = []

    checks.append(
        PropertyCheck("4-vertex-critical", is_4_vertex_critical(g))
    )

    emb = find_induced_embedding(g, "2P2+P1")
    checks.append(
        PropertyCheck(
            "2P2+P1-free",
            emb is None,
            "" if emb is None else f"embedding at {emb}",
        )
    )

    emb = find_induced_embedding(g, "P7")
    checks.append(
        PropertyCheck(
            "P7-free",
            emb is None,
            "" if emb is None else f"embedding at {emb}",
        )
    )

    # Deleting vertex 0 leaves a uniquely 3-colorable graph: pin the
    # triangle on the first three remaining vertices and propagate to the
    # fixpoint; every list must collapse to one color, forming a proper
    # coloring.  Vertex labels shift down by one after the deletion.
    gd = induced_subgraph(g, range(1, n))
    updated = precolor_and_update(
        gd, ListSystem.full(gd.n), {0: 1, 1: 2, 2: 3}, "exhaustive"
    )
    sizes_ok = all(updated.size(v) == 1 for v in range(gd.n))
    proper = False
    detail = ""
    if sizes_ok:
        forced = [updated.colors(v)[0] for v in range(gd.n)]
        proper = all(forced[a] != forced[b] for a, b in gd.edges())
        detail = f"last vertex forced to color {forced[-1]}"
    checks.append(
        PropertyCheck(
            "unique-coloring-after-deleting-v0",
            sizes_ok and proper,
            detail if sizes_ok and proper else "propagation did not force a proper coloring",
        )
    )

    return FamilyReport("Gr", r, tuple(checks))


def gen_Hr(r: int) -> tuple[Graph, ListSystem]:
    """The r-th chorded-path obstruction: its graph and its color lists.

    The path has 3r-1 vertices.  Writing positions 1-based, a chord joins
    position i to position j whenever i <= j-2, i = 2 mod 3 and
    j = 1 mod 3.  Both endpoints get list {1}; an interior position p gets
    {2,3}, {1,3} or {1,2} according to p mod 3 being 0, 1 or 2.
    """
    if r < 1:
        raise ValueError(f"family parameter must be at least 1, got {r}")
    n = 3 * r - 1
    if n > MAX_VERTICES:
        raise ValueError(f"3r-1 = {n} exceeds the supported maximum of {MAX_VERTICES} vertices")
    edges = [(p, p + 1) for p in range(n - 1)]
    for i in range(1, n + 1):
        if i % 3 != 2:
            continue
        for j in range(i + 2, n + 1):
            if j % 3 == 1:
                edges.append((i - 1, j - 1))
    g = Graph(n, edges)
    sets: list[tuple[int, ...]] = []
    for p in range(1, n + 1):
        if p == 1 or p == n:
            sets.append((1,))
        elif p % 3 == 0:
            sets.append((2, 3))
        elif p % 3 == 1:
            sets.append((1, 3))
        else:
            sets.append((1, 2))
    return g, ListSystem.from_sets(sets)


def verify_Hr(r: int) -> FamilyReport:
    """Check the defining properties of the r-th chorded-path obstruction."""
    g, lists = gen_Hr(r)
    n = g.n
    checks = []

    checks.append(
        PropertyCheck("minimal-obstruction", is_minimal_obstruction(g, lists))
    )

    emb = find_induced_embedding(g, "2P3")
    checks.append(
        PropertyCheck(
            "2P3-free",
            emb is None,
            "" if emb is None else f"embedding at {emb}",
        )
    )

    # For every interior vertex, deleting it splits the forcing chain:
    # color both ends 1 and update along the two remaining arms.  The two
    # forced half-colorings must cover everything and be proper together,
    # chords across the split included.
    ok = True
    detail = ""
    for mid in range(1, n - 1):
        keep = [v for v in range(n) if v != mid]
        gd = induced_subgraph(g, keep)
        ld = ListSystem(lists.masks[v] for v in keep)
        forward = list(range(mid))
        backward = list(range(gd.n - 1, mid - 1, -1))
        colors: list[int | None] = [None] * gd.n
        for path in (forward, backward):
            if not path:
                continue
            partial, flags = update_along_path(gd, ld, path, 1)
            if not all(flags):
                ok = False
                detail = f"arm {path} stalls after deleting vertex {mid}"
                break
            for v in path:
                colors[v] = partial[v]
        if not ok:
            break
        if any(c is None for c in colors):
            ok = False
            detail = f"uncovered vertex after deleting {mid}"
            break
        if any(colors[a] == colors[b] for a, b in gd.edges()):
            ok = False
            detail = f"forced halves clash after deleting vertex {mid}"
            break
    checks.append(PropertyCheck("two-sided-deletion-colorings", ok, detail))

    return FamilyReport("Hr", r, tuple(checks))
