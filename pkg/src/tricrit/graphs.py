"""Bitmask graphs, induced-subgraph queries, canonical forms and graph6 I/O.

Vertices are 0..n-1 and adjacency is stored as one Python int per vertex,
so neighborhood intersections and containment tests are single integer
operations.  Everything here is exact and deterministic; the size cap of
128 vertices keeps the canonical-form search and the graph6 writer simple.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

MAX_VERTICES = 128


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Undirected simple graph on vertices 0..n-1 with bitset adjacency rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be between 0 and {MAX_VERTICES}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        g = cls.__new__(cls)
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count must be at most {MAX_VERTICES}, got {n}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            m = row
            while m:
                b = m & -m
                m ^= b
                u = b.bit_length() - 1
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric between {u} and {v}")
        g.n = n
        g.rows = tuple(rows)
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.rows[v] >> (v + 1) << (v + 1)
            while m:
                b = m & -m
                m ^= b
                out.append((v, b.bit_length() - 1))
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph.from_rows([full & ~r & ~(1 << v) for v, r in enumerate(self.rows)])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under ``perm``: vertex v of self becomes perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            acc = 0
            m = row
            while m:
                b = m & -m
                m ^= b
                acc |= 1 << perm[b.bit_length() - 1]
            rows[perm[v]] = acc
        return Graph.from_rows(rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


# ---------------------------------------------------------------------------
# standard constructions


def path_graph(t: int) -> Graph:
    return Graph(t, [(i, i + 1) for i in range(t - 1)])


def cycle_graph(t: int) -> Graph:
    if t < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {t}")
    return Graph(t, [(i, (i + 1) % t) for i in range(t)])


def complete_graph(t: int) -> Graph:
    return Graph(t, [(i, j) for i in range(t) for j in range(i + 1, t)])


def claw_graph() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    off = 0
    for g in graphs:
        rows.extend(r << off for r in g.rows)
        off += g.n
    return Graph.from_rows(rows)


_PATTERN_RE_PATH = re.compile(r"^P(\d+)$")
_PATTERN_RE_CYCLE = re.compile(r"^C(\d+)$")
_PATTERN_RE_P4KP1 = re.compile(r"^P4\+(\d+)P1$")


class Pattern:
    """A forbidden pattern: a named small graph or an explicit :class:`Graph`.

    Recognized names are paths ``P1``..``P12``, cycles ``C3``..``C12``,
    ``claw``, ``2P2+P1``, ``2P3`` and the parametric family ``P4+kP1``
    written with an explicit integer k, for example ``P4+3P1``.
    """

    __slots__ = ("name", "graph")

    def __init__(self, name: str | None, graph: Graph):
        self.name = name
        self.graph = graph

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        text = text.strip()
        m = _PATTERN_RE_PATH.match(text)
        if m:
            t = int(m.group(1))
            if not 1 <= t <= 12:
                raise ValueError(f"path pattern out of supported range P1..P12: {text}")
            return cls(text, path_graph(t))
        m = _PATTERN_RE_CYCLE.match(text)
        if m:
            t = int(m.group(1))
            if not 3 <= t <= 12:
                raise ValueError(f"cycle pattern out of supported range C3..C12: {text}")
            return cls(text, cycle_graph(t))
        if text == "claw":
            return cls(text, claw_graph())
        if text == "2P2+P1":
            return cls(text, disjoint_union(path_graph(2), path_graph(2), path_graph(1)))
        if text == "2P3":
            return cls(text, disjoint_union(path_graph(3), path_graph(3)))
        m = _PATTERN_RE_P4KP1.match(text)
        if m:
            k = int(m.group(1))
            if k < 0 or 4 + k > MAX_VERTICES:
                raise ValueError(f"unsupported parameter in pattern {text}")
            return cls(text, disjoint_union(path_graph(4), *[path_graph(1)] * k))
        raise ValueError(f"unrecognized pattern name: {text!r}")

    def __repr__(self) -> str:
        return f"Pattern({self.name!r})" if self.name else f"Pattern({self.graph!r})"


def pattern_graph(h) -> Graph:
    """Coerce a Graph, Pattern or pattern name to its Graph."""
    if isinstance(h, Graph):
        return h
    if isinstance(h, Pattern):
        return h.graph
    if isinstance(h, str):
        return Pattern.parse(h).graph
    raise TypeError(f"expected Graph, Pattern or name, got {type(h).__name__}")


# ---------------------------------------------------------------------------
# induced subgraphs and components


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled 0..k-1 in ascending order.

    Duplicate vertices are rejected, as are vertices outside 0..n-1.
    """
    xs = sorted(vertices)
    for v in xs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for {g.n} vertices")
    if any(a == b for a, b in zip(xs, xs[1:])):
        raise ValueError("duplicate vertex in selection")
    pos = {v: i for i, v in enumerate(xs)}
    rows = [0] * len(xs)
    for i, v in enumerate(xs):
        m = g.rows[v]
        acc = 0
        for u in xs:
            if m >> u & 1:
                acc |= 1 << pos[u]
        rows[i] = acc
    return Graph.from_rows(rows)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= g.rows[b.bit_length() - 1]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(bits(comp))
    return out


def anticomponents(g: Graph) -> list[list[int]]:
    """Components of the complement graph."""
    return components(g.complement())


# ---------------------------------------------------------------------------
# induced-pattern detection

def _match_order(h: Graph) -> list[int]:
    # Start from a max-degree vertex, then prefer vertices with many already
    # placed neighbors so the backtracking stays connected where possible.
    if h.n == 0:
        return []
    order = [max(range(h.n), key=h.degree)]
    placed = 1 << order[0]
    while len(order) < h.n:
        best = max(
            (v for v in range(h.n) if not placed >> v & 1),
            key=lambda v: ((h.rows[v] & placed).bit_count(), h.degree(v)),
        )
        order.append(best)
        placed |= 1 << best
    return order


def _embed(g: Graph, h: Graph, order: list[int], pinned: dict[int, int]) -> list[int] | None:
    """Backtracking search for an induced embedding of h into g.

    ``pinned`` maps pattern vertices to prescribed images.  Returns the image
    list indexed by pattern vertex, or None.
    """
    n, hn = g.n, h.n
    if hn > n:
        return None
    image = [-1] * hn
    used = 0
    grows = g.rows
    hrows = h.rows

    def place(k: int, used: int) -> bool:
        if k == hn:
            return True
        p = order[k]
        adj_req = 0
        non_req = 0
        for q in order[:k]:
            if hrows[p] >> q & 1:
                adj_req |= 1 << image[q]
            else:
                non_req |= 1 << image[q]
        if p in pinned:
            u = pinned[p]
            if used >> u & 1:
                return False
            if grows[u] & adj_req == adj_req and not grows[u] & non_req:
                image[p] = u
                if place(k + 1, used | 1 << u):
                    return True
                image[p] = -1
            return False
        cand = ~used & ((1 << n) - 1)
        while cand:
            b = cand & -cand
            cand ^= b
            u = b.bit_length() - 1
            if grows[u] & adj_req == adj_req and not grows[u] & non_req:
                image[p] = u
                if place(k + 1, used | 1 << u):
                    return True
                image[p] = -1
        return False

    # Pinned vertices must be placed consistently even if they come late in
    # the order; the per-vertex branch above handles them.
    if place(0, used):
        return image
    return None


def find_induced_embedding(g: Graph, h) -> tuple[int, ...] | None:
    """An induced embedding of pattern ``h`` into ``g``, or None.

    The embedding preserves both edges and non-edges.  Entry i is the image
    of pattern vertex i.
    """
    hg = pattern_graph(h)
    if hg.n == 0:
        return ()
    res = _embed(g, hg, _match_order(hg), {})
    return tuple(res) if res is not None else None


def contains_induced(g: Graph, h) -> bool:
    """Does ``g`` contain the pattern ``h`` as an induced subgraph?"""
    hg = pattern_graph(h)
    if hg.n == 0:
        return True
    # Paths go through the dedicated detector; it is much faster and the two
    # are tested to agree.
    t = _as_path_length(hg)
    if t is not None:
        return has_induced_path(g, t)
    return _embed(g, hg, _match_order(hg), {}) is not None


def _as_path_length(h: Graph) -> int | None:
    """If h is a path, its vertex count, else None."""
    if h.n == 0:
        return None
    if h.edge_count() != h.n - 1:
        return None
    degs = sorted(h.degree(v) for v in range(h.n))
    if h.n == 1:
        return 1
    if degs[0] != 1 or degs[1] != 1 or (h.n > 2 and degs[-1] != 2):
        return None
    return h.n if len(components(h)) == 1 else None


def has_induced_path(g: Graph, t: int) -> bool:
    """Does ``g`` contain an induced path on ``t`` vertices?"""
    if t < 1:
        raise ValueError(f"path length must be positive, got {t}")
    if t == 1:
        return g.n > 0
    if t == 2:
        return any(r for r in g.rows)
    rows = g.rows
    for v in range(g.n):
        if _induced_path_from(rows, v, 1 << v, v, t - 1):
            return True
    return False


def _induced_path_from(rows, end: int, used: int, start: int, left: int) -> bool:
    # Extend an induced path rightward from ``end``; ``start`` stays an
    # endpoint.  A new vertex may touch only the current right endpoint.
    forbid = used ^ (1 << end)
    cand = rows[end] & ~used
    while cand:
        b = cand & -cand
        cand ^= b
        w = b.bit_length() - 1
        if rows[w] & forbid:
            continue
        if left == 1 or _induced_path_from(rows, w, used | b, start, left - 1):
            return True
    return False


def has_induced_path_through(rows: Sequence[int], anchor: int, t: int) -> bool:
    """Induced path on ``t`` vertices that uses vertex ``anchor``.

    Takes raw adjacency rows so enumeration loops can call it without
    building Graph objects.  The path is grown as two arms out of the
    anchor, first arm first; the second arm is opened only once the first
    holds a strict majority of the remaining vertices, so each arm pair is
    tried in one orientation only and the recursion never runs deeper on
    the second arm than on the first.  Candidates are scanned from the
    highest vertex down: callers anchor at the newest (highest) vertex,
    whose neighborhood is where a fresh path is most likely to live, and
    on this workload most queries succeed, so time-to-first-hit dominates.
    ``t == 6`` is the hot case and gets a hand-unrolled walker.
    """
    if t == 1:
        return True
    if t == 2:
        return rows[anchor] != 0
    if t == 6:
        return _path6_through(rows, anchor)
    abit = 1 << anchor
    tm1 = t - 1
    thr = t + 1

    def first_arm(end: int, ebit: int, used: int, m: int) -> bool:
        forbid = used ^ ebit
        cand = rows[end] & ~used
        while cand:
            w = cand.bit_length() - 1
            b = 1 << w
            cand ^= b
            if rows[w] & forbid:
                continue
            if m == tm1 or first_arm(w, b, used | b, m + 1):
                return True
        if 2 * m >= thr:
            forbid = used ^ abit
            cand = rows[anchor] & ~used
            while cand:
                w = cand.bit_length() - 1
                b = 1 << w
                cand ^= b
                if rows[w] & forbid:
                    continue
                if m == tm1 or second_arm(w, b, used | b, m + 1):
                    return True
        return False

    def second_arm(end: int, ebit: int, used: int, m: int) -> bool:
        forbid = used ^ ebit
        cand = rows[end] & ~used
        while cand:
            w = cand.bit_length() - 1
            b = 1 << w
            cand ^= b
            if rows[w] & forbid:
                continue
            if m == tm1 or second_arm(w, b, used | b, m + 1):
                return True
        return False

    return first_arm(anchor, abit, abit, 1)


def _path6_through(rows: Sequence[int], anchor: int) -> bool:
    # has_induced_path_through specialised to t == 6 with the recursion
    # unrolled into nested loops: same arm discipline (first arm takes at
    # least 3 of the 5 non-anchor vertices, so the splits tried are 5+0,
    # 4+1 and 3+2), same highest-vertex-first scan order.
    ar = rows[anchor]
    abit = 1 << anchor
    c1 = ar
    while c1:
        w1 = c1.bit_length() - 1
        b1 = 1 << w1
        c1 ^= b1
        u1 = abit | b1
        c2 = rows[w1] & ~u1
        while c2:
            w2 = c2.bit_length() - 1
            b2 = 1 << w2
            c2 ^= b2
            if rows[w2] & abit:
                continue
            u2 = u1 | b2
            f3 = u2 ^ b2
            c3 = rows[w2] & ~u2
            while c3:
                w3 = c3.bit_length() - 1
                b3 = 1 << w3
                c3 ^= b3
                if rows[w3] & f3:
                    continue
                u3 = u2 | b3
                f4 = u3 ^ b3
                c4 = rows[w3] & ~u3
                while c4:
                    w4 = c4.bit_length() - 1
                    b4 = 1 << w4
                    c4 ^= b4
                    if rows[w4] & f4:
                        continue
                    u4 = u3 | b4
                    f5 = u4 ^ b4
                    c5 = rows[w4] & ~u4
                    while c5:  # split 5+0: anchor, w1..w5 in one arm
                        w5 = c5.bit_length() - 1
                        b5 = 1 << w5
                        c5 ^= b5
                        if rows[w5] & f5 == 0:
                            return True
                    fl = u4 ^ abit
                    cl = ar & ~u4
                    while cl:  # split 4+1: one vertex on the far side
                        wl = cl.bit_length() - 1
                        bl = 1 << wl
                        cl ^= bl
                        if rows[wl] & fl == 0:
                            return True
                fl1 = u3 ^ abit
                cl1 = ar & ~u3
                while cl1:  # split 3+2: two vertices on the far side
                    wl1 = cl1.bit_length() - 1
                    bl1 = 1 << wl1
                    cl1 ^= bl1
                    if rows[wl1] & fl1:
                        continue
                    ul1 = u3 | bl1
                    cl2 = rows[wl1] & ~ul1
                    while cl2:
                        wl2 = cl2.bit_length() - 1
                        bl2 = 1 << wl2
                        cl2 ^= bl2
                        if rows[wl2] & u3 == 0:
                            return True
    return False


def contains_induced_through(rows: Sequence[int], n: int, h: Graph, anchor: int) -> bool:
    """Does the graph given by ``rows`` contain ``h`` induced, using ``anchor``?

    ``rows`` must already be well-formed adjacency rows; they are trusted
    so enumeration loops can call this without building Graph objects.
    """
    if h.n == 0:
        return True
    t = _as_path_length(h)
    if t is not None:
        return has_induced_path_through(rows, anchor, t)
    g = Graph.__new__(Graph)
    g.n = n
    g.rows = tuple(rows[:n])
    order = _match_order(h)
    for p in range(h.n):
        if _embed(g, h, order, {p: anchor}) is not None:
            return True
    return False


# ---------------------------------------------------------------------------
# canonical forms


def canonical_form(g: Graph, vertex_classes: Sequence[int] | None = None) -> bytes:
    """A canonical byte string for ``g`` with optional vertex classes.

    Two graphs get the same string exactly when some isomorphism between
    them preserves the given classes.  Classes default to all-zero.  The
    string is produced by equitable refinement plus individualization,
    taking the lexicographically smallest discrete encoding.
    """
    n = g.n
    if vertex_classes is None:
        classes: tuple[int, ...] = (0,) * n
    else:
        classes = tuple(vertex_classes)
        if len(classes) != n:
            raise ValueError("vertex_classes length must match vertex count")
        if any(not 0 <= c <= 255 for c in classes):
            raise ValueError("vertex classes must be small non-negative integers")
    if n == 0:
        return bytes([0])
    cells: list[tuple[int, ...]] = []
    for value in sorted(set(classes)):
        cells.append(tuple(v for v in range(n) if classes[v] == value))
    return _canon_search(g.rows, cells, classes, n)


def _refine(rows: Sequence[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(tuple(groups[sig]))
        cells = new_cells
        if not changed:
            return cells


def _canon_search(rows, cells, classes, n) -> bytes:
    cells = _refine(rows, cells)
    for idx, cell in enumerate(cells):
        if len(cell) > 1:
            best = None
            for v in cell:
                child = cells[:idx] + [(v,), tuple(u for u in cell if u != v)] + cells[idx + 1:]
                cand = _canon_search(rows, child, classes, n)
                if best is None or cand < best:
                    best = cand
            return best
    order = [cell[0] for cell in cells]
    return _encode_labeled(rows, order, classes, n)


def _encode_labeled(rows, order, classes, n) -> bytes:
    out = bytearray([n])
    out.extend(classes[v] for v in order)
    acc = 0
    nbits = 0
    for i in range(n):
        ri = rows[order[i]]
        for j in range(i + 1, n):
            acc = acc << 1 | (ri >> order[j] & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)


# ---------------------------------------------------------------------------
# graph6


def write_graph6(g: Graph) -> str:
    """Header-less graph6 encoding of ``g``."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    chunks = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        chunks.append(chr((acc << (6 - nbits)) + 63))
    return head + "".join(chunks)


def parse_graph6(text: str) -> Graph:
    """Parse a header-less graph6 string; raises :class:`Graph6Error` on faults."""
    s = text.rstrip("\n")
    if not s:
        raise Graph6Error("empty graph6 input", 0)
    for off, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"byte {code} outside graph6 range 63..126", off)
    if s[0] == "~":
        if len(s) < 4:
            raise Graph6Error("truncated extended vertex-count field", len(s))
        if s[1] == "~":
            raise Graph6Error("vertex counts above 258047 are not supported", 1)
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        body_start = 4
    else:
        n = ord(s[0]) - 63
        body_start = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds the supported maximum {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - body_start < need:
        raise Graph6Error(f"adjacency data truncated, need {need} bytes", len(s))
    if len(s) - body_start > need:
        raise Graph6Error("trailing bytes after adjacency data", body_start + need)
    rows = [0] * n
    idx = 0
    for pos in range(body_start, len(s)):
        val = ord(s[pos]) - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = val >> shift & 1
            if idx < nbits:
                if bit:
                    # column-major upper triangle: bit idx belongs to pair (i, j)
                    j = _g6_col(idx)
                    i = idx - j * (j - 1) // 2
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bits", pos)
            idx += 1
    return Graph.from_rows(rows)


def _g6_col(idx: int) -> int:
    # Largest j with j*(j-1)/2 <= idx.
    j = int((2 * idx) ** 0.5) + 2
    while j * (j - 1) // 2 > idx:
        j -= 1
    return j
