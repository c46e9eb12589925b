"""Chorded propagation paths and their exhaustive pruned enumeration.

A configuration is a path v_1..v_k whose vertices carry colors from
{1,2,3} with c(v_1) = 1 and consecutive colors distinct, together with a
set of extra chords.  The color lists implied by the coloring are {1} at
v_1 and {c(v_i), c(v_{i-1})} elsewhere, so coloring v_1 forces the whole
path.  A chord (v_i, v_j) with i < j-1 is admissible when the color of
v_i is absent from the list at v_j, and, for i >= 3, when the chord is
compatible with the forced propagation: c(v_{i-1}) = c(v_j) and the three
colors c(v_i), c(v_j), c(v_{j-1}) are pairwise distinct.  The enumerator
counts labeled configurations whose graphs avoid every forbidden pattern,
growing the path one vertex at a time; both the chord rule and pattern
freeness are preserved under truncation, so depth-first growth visits
exactly the admissible configurations.
"""
from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graphs import (
    Graph,
    contains_induced_through,
    has_induced_path_through,
    pattern_graph,
    _as_path_length,
)

# Reference counts for the enumeration with P6 forbidden, lengths 1..25.
# The CLI checks its own output against this vector.
P6_REFERENCE_COUNTS = (
    1, 2, 6, 22, 86, 350, 1220, 2656, 4208, 5360,
    5864, 5604, 5686, 5004, 4120, 3400, 2454, 1688, 1064, 516,
    202, 72, 18, 2, 0,
)

MAX_ENUM_LENGTH = 64
_HARD_LIMIT = 128

_OTHERS = {1: (2, 3), 2: (1, 3), 3: (1, 2)}


class ResourceLimitError(RuntimeError):
    """The unbounded length search ran past the hard configuration limit."""


@dataclass(frozen=True)
class PropConfig:
    """A colored chorded path; vertices are 1-based in the public interface."""

    colors: tuple[int, ...]
    extra_edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.colors:
            raise ValueError("a configuration has at least one vertex")
        if self.colors[0] != 1:
            raise ValueError("the first vertex is always colored 1")
        for c in self.colors:
            if c not in (1, 2, 3):
                raise ValueError(f"color {c} outside the palette")
        for a, b in zip(self.colors, self.colors[1:]):
            if a == b:
                raise ValueError("consecutive path vertices share a color")
        k = len(self.colors)
        for i, j in self.extra_edges:
            if not (1 <= i and i < j - 1 and j <= k):
                raise ValueError(f"chord ({i}, {j}) is not a valid non-consecutive pair")

    @property
    def k(self) -> int:
        return len(self.colors)

    def color(self, i: int) -> int:
        if not 1 <= i <= self.k:
            raise ValueError(f"vertex index {i} out of range 1..{self.k}")
        return self.colors[i - 1]

    def list_at(self, i: int) -> tuple[int, ...]:
        """The implied color list at v_i: {1} at the start, else the last two colors."""
        if not 1 <= i <= self.k:
            raise ValueError(f"vertex index {i} out of range 1..{self.k}")
        if i == 1:
            return (1,)
        return tuple(sorted({self.colors[i - 1], self.colors[i - 2]}))

    def graph(self) -> Graph:
        edges = [(i, i + 1) for i in range(self.k - 1)]
        edges.extend((i - 1, j - 1) for i, j in self.extra_edges)
        return Graph(self.k, edges)


def shape(cfg: PropConfig, i: int) -> tuple[int, int]:
    """The pair (c(v_i), c(v_{i-1})); undefined at the path start."""
    if i == 1:
        raise ValueError("shape is undefined at the first path vertex")
    if not 2 <= i <= cfg.k:
        raise ValueError(f"vertex index {i} out of range 2..{cfg.k}")
    return (cfg.colors[i - 1], cfg.colors[i - 2])


def satisfies_condition1(cfg: PropConfig) -> bool:
    """Do all chords starting at v_3 or later respect forced propagation?

    A chord (v_i, v_j) with i >= 3 must have c(v_{i-1}) = c(v_j) and the
    colors c(v_i), c(v_j), c(v_{j-1}) pairwise distinct.
    """
    cs = cfg.colors
    for i, j in cfg.extra_edges:
        if i < 3:
            continue
        if cs[i - 2] != cs[j - 1]:
            return False
        if len({cs[i - 1], cs[j - 1], cs[j - 2]}) != 3:
            return False
    return True


def admissible_edge(cfg: PropConfig, i: int, j: int) -> bool:
    """May the chord (v_i, v_j) be added to this configuration?

    Requires c(v_i) outside the list at v_j; chords with i >= 3 must also
    respect forced propagation as in :func:`satisfies_condition1`.
    """
    k = cfg.k
    if not (1 <= i and i < j - 1 and j <= k):
        raise ValueError(f"chord ({i}, {j}) is not a valid non-consecutive pair for k={k}")
    cs = cfg.colors
    if cs[i - 1] == cs[j - 1] or cs[i - 1] == cs[j - 2]:
        return False
    if i >= 3:
        if cs[i - 2] != cs[j - 1]:
            return False
        if len({cs[i - 1], cs[j - 1], cs[j - 2]}) != 3:
            return False
    return True


@dataclass(frozen=True)
class EnumerationResult:
    """Per-length tallies of accepted configurations."""

    counts: tuple[int, ...]

    @property
    def max_length(self) -> int:
        best = 0
        for i, c in enumerate(self.counts):
            if c:
                best = i + 1
        return best

    def count_at(self, k: int) -> int:
        if not 1 <= k <= len(self.counts):
            raise ValueError(f"length {k} outside the enumerated range 1..{len(self.counts)}")
        return self.counts[k - 1]

    @property
    def total(self) -> int:
        return sum(self.counts)


def _pack_forbidden(forbidden: Iterable) -> tuple[tuple[int, ...], tuple]:
    """Split normalized patterns into path lengths and explicit row tuples."""
    path_ts = []
    others = []
    for h in forbidden:
        hg = pattern_graph(h)
        t = _as_path_length(hg)
        if t is not None:
            path_ts.append(t)
        else:
            others.append(hg.rows)
    return tuple(sorted(set(path_ts))), tuple(others)


def _rows_to_graphs(row_tuples) -> tuple[Graph, ...]:
    out = []
    for rows in row_tuples:
        g = Graph.__new__(Graph)
        g.n = len(rows)
        g.rows = rows
        out.append(g)
    return tuple(out)


def _hits_new_vertex(rows: list[int], n: int, anchor: int, path_ts, other_graphs) -> bool:
    for t in path_ts:
        if t <= n and has_induced_path_through(rows, anchor, t):
            return True
    for hg in other_graphs:
        if hg.n <= n and contains_induced_through(rows, n, hg, anchor):
            return True
    return False


class _Engine:
    """Depth-first enumeration with incremental pattern checks."""

    def __init__(self, path_ts, other_graphs, max_n, collect, stop_depth=None, hard_limit=None):
        self.path_ts = path_ts
        self.other_graphs = other_graphs
        self.max_n = max_n
        self.counts = [0] * max_n
        self.lines: list[tuple[int, str, str]] | None = [] if collect else None
        self.stop_depth = stop_depth
        self.tasks: list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = []
        self.hard_limit = hard_limit

    def run_root(self):
        if self.max_n == 0:
            return
        colors = [1]
        rows = [0]
        if _hits_new_vertex(rows, 1, 0, self.path_ts, self.other_graphs):
            return
        self.counts[0] += 1
        extra: list[tuple[int, int]] = []
        if self.lines is not None:
            self._emit(colors, extra)
        if self.stop_depth is not None and 1 >= self.stop_depth:
            self.tasks.append(((1,), ()))
            return
        self._extend(colors, rows, extra)

    def run_from(self, colors: Sequence[int], extra: Sequence[tuple[int, int]]):
        """Extend below an already-counted configuration."""
        colors = list(colors)
        k = len(colors)
        rows = [0] * k
        for i in range(k - 1):
            rows[i] |= 1 << (i + 1)
            rows[i + 1] |= 1 << i
        for i0, j0 in extra:
            rows[i0] |= 1 << j0
            rows[j0] |= 1 << i0
        self._extend(colors, rows, list(extra))

    def _emit(self, colors, extra):
        cs = "".join(map(str, colors))
        es = ",".join(f"{i + 1}-{j + 1}" for i, j in sorted(extra)) if extra else "-"
        self.lines.append((len(colors), cs, es))

    def _extend(self, colors, rows, extra):
        k = len(colors)
        if k == self.max_n:
            return
        last = colors[-1]
        kbit = 1 << k
        prev_bit = 1 << (k - 1)
        counts = self.counts
        path_ts = self.path_ts
        other_graphs = self.other_graphs
        for alpha in _OTHERS[last]:
            adm = [
                i0
                for i0 in range(k - 1)
                if colors[i0] != alpha
                and colors[i0] != last
                and (i0 < 2 or colors[i0 - 1] == alpha)
            ]
            colors.append(alpha)
            rows[k - 1] |= kbit
            n = k + 1
            for sub in range(1 << len(adm)):
                row = prev_bit
                chosen = []
                s = sub
                while s:
                    low = s & -s
                    s ^= low
                    i0 = adm[low.bit_length() - 1]
                    row |= 1 << i0
                    rows[i0] |= kbit
                    chosen.append(i0)
                rows.append(row)
                if not _hits_new_vertex(rows, n, k, path_ts, other_graphs):
                    counts[k] += 1
                    if self.hard_limit is not None and n >= self.hard_limit:
                        raise ResourceLimitError(
                            f"configurations reach length {n}; the search looks unbounded"
                        )
                    for i0 in chosen:
                        extra.append((i0, k))
                    if self.lines is not None:
                        self._emit(colors, extra)
                    if self.stop_depth is not None and n >= self.stop_depth:
                        self.tasks.append((tuple(colors), tuple(extra)))
                    else:
                        self._extend(colors, rows, extra)
                    del extra[len(extra) - len(chosen):]
                rows.pop()
                for i0 in chosen:
                    rows[i0] &= ~kbit
            rows[k - 1] &= ~kbit
            colors.pop()


def _worker(args):
    colors, extra, max_n, path_ts, other_rows, collect = args
    eng = _Engine(path_ts, _rows_to_graphs(other_rows), max_n, collect)
    eng.run_from(colors, extra)
    return eng.counts, eng.lines


def enumerate_propagation_paths(
    forbidden: Iterable,
    max_n: int,
    emit=None,
    jobs: int = 1,
) -> EnumerationResult:
    """Count pattern-free configurations of every length up to ``max_n``.

    ``forbidden`` is a collection of patterns (graphs, Pattern objects or
    names).  ``emit``, if given, is a writable text sink or a file path;
    accepted configurations are written one per line as
    ``<length> <colors> <chords>`` in sorted order.  ``jobs`` farms
    subtrees out to worker processes; results do not depend on it.  The
    pool never exceeds the machine's core count — the work is CPU-bound,
    so extra processes beyond that only add scheduling overhead.
    """
    if not isinstance(max_n, int) or max_n < 0:
        raise ValueError(f"max_n must be a non-negative integer, got {max_n!r}")
    if max_n > MAX_ENUM_LENGTH:
        raise ValueError(f"max_n is capped at {MAX_ENUM_LENGTH}, got {max_n}")
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    path_ts, other_rows = _pack_forbidden(forbidden)
    other_graphs = _rows_to_graphs(other_rows)
    collect = emit is not None
    jobs = min(jobs, os.cpu_count() or 1)
    split = min(6, max_n - 1)
    if jobs == 1 or split < 2:
        eng = _Engine(path_ts, other_graphs, max_n, collect)
        eng.run_root()
        counts, lines = eng.counts, eng.lines
    else:
        driver = _Engine(path_ts, other_graphs, max_n, collect, stop_depth=split)
        driver.run_root()
        counts, lines = driver.counts, driver.lines
        argss = [
            (colors, extra, max_n, path_ts, other_rows, collect)
            for colors, extra in driver.tasks
        ]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            for wcounts, wlines in pool.imap_unordered(_worker, argss, chunksize=8):
                for i, c in enumerate(wcounts):
                    counts[i] += c
                if collect and wlines:
                    lines.extend(wlines)
    if collect:
        lines.sort()
        text = "".join(f"{k} {cs} {es}\n" for k, cs, es in lines)
        if hasattr(emit, "write"):
            emit.write(text)
        else:
            with open(emit, "w") as fh:
                fh.write(text)
    return EnumerationResult(tuple(counts))


def max_propagation_length(forbidden: Iterable) -> int:
    """Largest length reaching a nonzero count, searched without a bound.

    Runs the depth-first enumeration with no length cap; if configurations
    ever reach length 128 the search is presumed unbounded and a
    :class:`ResourceLimitError` is raised.
    """
    path_ts, other_rows = _pack_forbidden(forbidden)
    eng = _Engine(path_ts, _rows_to_graphs(other_rows), _HARD_LIMIT, False, hard_limit=_HARD_LIMIT)
    eng.run_root()
    best = 0
    for i, c in enumerate(eng.counts):
        if c:
            best = i + 1
    return best


def parse_emitted_line(line: str) -> PropConfig:
    """Rebuild a configuration from one line of the emission stream."""
    parts = line.split()
    if len(parts) != 3:
        raise ValueError(f"malformed configuration line: {line!r}")
    k = int(parts[0])
    colors = tuple(int(ch) for ch in parts[1])
    if len(colors) != k:
        raise ValueError(f"length field {k} disagrees with colors {parts[1]!r}")
    edges = []
    if parts[2] != "-":
        for item in parts[2].split(","):
            a, b = item.split("-")
            edges.append((int(a), int(b)))
    return PropConfig(colors, frozenset(edges))
