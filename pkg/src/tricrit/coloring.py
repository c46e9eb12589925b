"""List systems over the palette {1,2,3}: exact solving and updating rules.

A list system stores one 3-bit mask per vertex (bit c-1 for color c).  The
solver is plain backtracking with unit propagation and smallest-list-first
branching, which is exact and more than fast enough at the sizes studied
here.  The updating rules are the bookkeeping steps used in criticality
arguments: deleting a forced color from the lists of neighbors, walking a
path, and running simultaneous rounds against a growing set of forced
vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import Graph, bits

PALETTE = (1, 2, 3)
FULL_MASK = 0b111

_COLOR_BIT = {1: 1, 2: 2, 3: 4}
_BIT_COLOR = {1: 1, 2: 2, 4: 3}


def color_bit(c: int) -> int:
    if c not in _COLOR_BIT:
        raise ValueError(f"color must be 1, 2 or 3, got {c}")
    return _COLOR_BIT[c]


def mask_colors(mask: int) -> tuple[int, ...]:
    return tuple(c for c in PALETTE if mask >> (c - 1) & 1)


class ListSystem:
    """Per-vertex color lists over {1,2,3}, stored as 3-bit masks."""

    __slots__ = ("masks",)

    def __init__(self, masks: Iterable[int]):
        ms = tuple(masks)
        for v, m in enumerate(ms):
            if not 0 <= m <= FULL_MASK:
                raise ValueError(f"list mask {m} at vertex {v} is not a 3-bit mask")
        self.masks = ms

    @classmethod
    def full(cls, n: int) -> "ListSystem":
        return cls([FULL_MASK] * n)

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> "ListSystem":
        masks = []
        for s in sets:
            m = 0
            for c in s:
                m |= color_bit(c)
            masks.append(m)
        return cls(masks)

    def to_sets(self) -> list[tuple[int, ...]]:
        return [mask_colors(m) for m in self.masks]

    @property
    def n(self) -> int:
        return len(self.masks)

    def mask(self, v: int) -> int:
        return self.masks[v]

    def size(self, v: int) -> int:
        return self.masks[v].bit_count()

    def colors(self, v: int) -> tuple[int, ...]:
        return mask_colors(self.masks[v])

    def with_mask(self, v: int, mask: int) -> "ListSystem":
        ms = list(self.masks)
        ms[v] = mask
        return ListSystem(ms)

    def __eq__(self, other) -> bool:
        return isinstance(other, ListSystem) and self.masks == other.masks

    def __hash__(self) -> int:
        return hash(self.masks)

    def __repr__(self) -> str:
        return f"ListSystem.from_sets({self.to_sets()!r})"


def lists_to_json(l: ListSystem) -> dict:
    return {"n": l.n, "lists": [list(cs) for cs in l.to_sets()]}


def lists_from_json(obj) -> ListSystem:
    if not isinstance(obj, dict) or "n" not in obj or "lists" not in obj:
        raise ValueError('list-system JSON must be {"n": ..., "lists": [...]}')
    n = obj["n"]
    lists = obj["lists"]
    if not isinstance(n, int) or not isinstance(lists, list) or len(lists) != n:
        raise ValueError(f"list-system JSON needs exactly n={n} lists")
    return ListSystem.from_sets(lists)


@dataclass(frozen=True)
class PartialColoring:
    """A per-vertex optional color; None where no color is assigned."""

    colors: tuple[int | None, ...]

    def __post_init__(self):
        for v, c in enumerate(self.colors):
            if c is not None and c not in PALETTE:
                raise ValueError(f"color {c} at vertex {v} outside the palette")

    def defined(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c is not None]

    def __getitem__(self, v: int) -> int | None:
        return self.colors[v]


def _check_dims(g: Graph, l: ListSystem):
    if l.n != g.n:
        raise ValueError(f"list system has {l.n} entries for a {g.n}-vertex graph")


# ---------------------------------------------------------------------------
# exact solver


def l_colorable(g: Graph, l: ListSystem) -> tuple[int, ...] | None:
    """A proper coloring choosing each vertex's color from its list, or None.

    An empty list anywhere simply makes the instance infeasible; it is not
    an error.  Every returned coloring is re-checked against the graph and
    the lists before it leaves this function.
    """
    _check_dims(g, l)
    res = _solve(g.rows, list(l.masks), bytearray(g.n), g.n)
    if res is None:
        return None
    coloring = tuple(_BIT_COLOR[m] for m in res)
    for v in range(g.n):
        if not l.masks[v] & _COLOR_BIT[coloring[v]]:
            raise RuntimeError("solver produced a color outside its list")
        m = g.rows[v]
        while m:
            b = m & -m
            m ^= b
            if coloring[b.bit_length() - 1] == coloring[v]:
                raise RuntimeError("solver produced an improper coloring")
    return coloring


def _solve(rows, masks, decided, n):
    queue = [v for v in range(n) if not decided[v] and masks[v].bit_count() == 1]
    for v in range(n):
        if not masks[v]:
            return None
    while queue:
        v = queue.pop()
        if decided[v]:
            continue
        decided[v] = 1
        bit = masks[v]
        m = rows[v]
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            mu = masks[u]
            if mu & bit:
                if decided[u]:
                    return None
                mu &= ~bit
                if not mu:
                    return None
                masks[u] = mu
                if mu.bit_count() == 1:
                    queue.append(u)
    pick = -1
    best = 4
    for v in range(n):
        if not decided[v]:
            s = masks[v].bit_count()
            if s < best:
                best = s
                pick = v
    if pick < 0:
        return masks
    m = masks[pick]
    while m:
        b = m & -m
        m ^= b
        masks2 = masks[:]
        masks2[pick] = b
        res = _solve(rows, masks2, bytearray(decided), n)
        if res is not None:
            return res
    return None


# ---------------------------------------------------------------------------
# updating rules


def update_from(g: Graph, l: ListSystem, w: int, v: int) -> ListSystem:
    """Delete the single color of ``w`` from the list of its neighbor ``v``."""
    _check_dims(g, l)
    if l.size(w) != 1:
        raise ValueError(f"vertex {w} must have a one-color list, has {l.colors(w)}")
    if not g.has_edge(w, v):
        raise ValueError(f"vertices {w} and {v} are not adjacent")
    return l.with_mask(v, l.masks[v] & ~l.masks[w])


def update_along_path(
    g: Graph, l: ListSystem, path: Sequence[int], alpha: int
) -> tuple[PartialColoring, tuple[bool, ...]]:
    """Color the first path vertex ``alpha`` and update along the path.

    Each later vertex is updated from its predecessor whenever the
    predecessor's list is down to one color at that moment.  Returns the
    partial coloring read off the final one-color lists of path vertices,
    and a per-position flag saying whether that vertex ended up colored.
    """
    _check_dims(g, l)
    if not path:
        raise ValueError("path must be non-empty")
    if len(set(path)) != len(path):
        raise ValueError("path repeats a vertex")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"consecutive path vertices {a} and {b} are not adjacent")
    abit = color_bit(alpha)
    if not l.masks[path[0]] & abit:
        raise ValueError(f"color {alpha} is not in the list of vertex {path[0]}")
    masks = list(l.masks)
    masks[path[0]] = abit
    for prev, cur in zip(path, path[1:]):
        if masks[prev].bit_count() == 1:
            masks[cur] &= ~masks[prev]
    colors: list[int | None] = [None] * g.n
    flags = []
    for v in path:
        if masks[v].bit_count() == 1:
            colors[v] = _BIT_COLOR[masks[v]]
            flags.append(True)
        else:
            flags.append(False)
    return PartialColoring(tuple(colors)), tuple(flags)


@dataclass(frozen=True)
class UpdateOutcome:
    """Full result of the round-based update: lists, forced set, conflict flag."""

    lists: ListSystem
    fixed: frozenset[int]
    conflict: bool
    rounds: int


def update_wrt_set_detailed(
    g: Graph, l: ListSystem, x: Iterable[int], rounds: int | str
) -> UpdateOutcome:
    """Run simultaneous update rounds against the forced set ``x``.

    In each round every vertex outside the current forced set loses the
    colors of its one-color forced neighbors, computed from the previous
    round's lists.  Vertices whose list first drops to size at most one
    join the forced set.  If two adjacent forced vertices share the same
    one-color list, or any list is empty, the instance is infeasible given
    the forced assignments: all lists outside the forced set are emptied
    and the conflict flag is set.  ``rounds`` is a round count or
    "exhaustive" to run to the fixpoint.
    """
    _check_dims(g, l)
    xs = frozenset(x)
    for v in xs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        if l.size(v) > 1:
            raise ValueError(f"vertex {v} in the forced set has {l.size(v)} colors listed")
    if rounds == "exhaustive":
        bound = None
    elif isinstance(rounds, int) and rounds >= 0:
        bound = rounds
    else:
        raise ValueError(f'rounds must be a non-negative integer or "exhaustive", got {rounds!r}')
    n = g.n
    grows = g.rows
    masks = list(l.masks)
    in_x = 0
    for v in xs:
        in_x |= 1 << v
    conflict = False
    done = 0
    while bound is None or done < bound:
        done += 1
        prev_masks = masks[:]
        prev_x = in_x
        for v in range(n):
            if prev_x >> v & 1:
                continue
            removal = 0
            m = grows[v] & prev_x
            while m:
                b = m & -m
                m ^= b
                mu = prev_masks[b.bit_length() - 1]
                if mu.bit_count() == 1:
                    removal |= mu
            masks[v] = prev_masks[v] & ~removal
        new_x = prev_x
        for v in range(n):
            if not prev_x >> v & 1 and masks[v].bit_count() <= 1 and prev_masks[v].bit_count() > 1:
                new_x |= 1 << v
        trigger = any(masks[v] == 0 for v in range(n))
        if not trigger:
            m = prev_x
            while m and not trigger:
                b = m & -m
                m ^= b
                u = b.bit_length() - 1
                if masks[u].bit_count() != 1:
                    continue
                nb = grows[u] & prev_x & ~((1 << (u + 1)) - 1)
                while nb:
                    bb = nb & -nb
                    nb ^= bb
                    if masks[bb.bit_length() - 1] == masks[u]:
                        trigger = True
                        break
        if trigger:
            conflict = True
            for v in range(n):
                if not new_x >> v & 1:
                    masks[v] = 0
        in_x = new_x
        if in_x == prev_x and masks == prev_masks:
            done -= 1
            break
    return UpdateOutcome(ListSystem(masks), frozenset(bits(in_x)), conflict, done)


def update_wrt_set(g: Graph, l: ListSystem, x: Iterable[int], rounds: int | str) -> ListSystem:
    """Round-based updating as in :func:`update_wrt_set_detailed`, lists only."""
    return update_wrt_set_detailed(g, l, x, rounds).lists


def precolor_and_update(
    g: Graph, l: ListSystem, assignment: Mapping[int, int], rounds: int | str = 3
) -> ListSystem:
    """Pin the given vertices to single colors, then run update rounds.

    The assigned color must lie in the vertex's current list.  By default
    three rounds are run; pass "exhaustive" to reach the fixpoint.
    """
    _check_dims(g, l)
    masks = list(l.masks)
    for v, c in assignment.items():
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        cb = color_bit(c)
        if not masks[v] & cb:
            raise ValueError(f"color {c} is not in the list of vertex {v}")
        masks[v] = cb
    return update_wrt_set(g, ListSystem(masks), assignment.keys(), rounds)
