from __future__ import annotations

import io
import multiprocessing

import pytest

from tricrit.graphs import pattern_graph
from tricrit.propagation import (
    EnumerationResult,
    P6_REFERENCE_COUNTS,
    PropConfig,
    ResourceLimitError,
    admissible_edge,
    enumerate_propagation_paths,
    max_propagation_length,
    parse_emitted_line,
    satisfies_condition1,
    shape,
)

from oracles import brute_count_configs, chord_ok, config_graph, contains_induced_brute


def test_prop_config_validation():
    PropConfig((1, 2, 1, 3), frozenset({(1, 3), (2, 4)}))
    with pytest.raises(ValueError):
        PropConfig(())
    with pytest.raises(ValueError):
        PropConfig((2, 1))  # must start with color 1
    with pytest.raises(ValueError):
        PropConfig((1, 1))
    with pytest.raises(ValueError):
        PropConfig((1, 4))
    with pytest.raises(ValueError):
        PropConfig((1, 2, 1), frozenset({(1, 2)}))  # consecutive pair
    with pytest.raises(ValueError):
        PropConfig((1, 2, 1), frozenset({(0, 2)}))
    with pytest.raises(ValueError):
        PropConfig((1, 2, 1), frozenset({(2, 9)}))


def test_prop_config_accessors():
    cfg = PropConfig((1, 2, 3), frozenset({(1, 3)}))
    assert cfg.k == 3
    assert cfg.color(2) == 2
    assert cfg.list_at(1) == (1,)
    assert cfg.list_at(3) == (2, 3)
    g = cfg.graph()
    assert g.n == 3 and g.edge_count() == 3
    with pytest.raises(ValueError):
        cfg.color(0)
    with pytest.raises(ValueError):
        cfg.list_at(4)


def test_shape_examples():
    assert shape(PropConfig((1, 2)), 2) == (2, 1)
    assert shape(PropConfig((1, 2, 3)), 3) == (3, 2)
    assert shape(PropConfig((1, 3, 1)), 3) == (1, 3)
    with pytest.raises(ValueError):
        shape(PropConfig((1, 2)), 1)


def test_condition1_examples():
    assert satisfies_condition1(PropConfig((1, 2, 3, 1, 2)))
    assert satisfies_condition1(PropConfig((1, 2, 3, 1, 2), frozenset({(3, 5)})))
    assert not satisfies_condition1(PropConfig((1, 2, 3, 2, 3), frozenset({(3, 5)})))


def test_admissible_edge_examples():
    assert admissible_edge(PropConfig((1, 2, 3)), 1, 3)
    assert not admissible_edge(PropConfig((1, 2, 1)), 1, 3)
    assert admissible_edge(PropConfig((1, 2, 3, 1, 2)), 3, 5)
    assert not admissible_edge(PropConfig((1, 2, 1, 3, 2)), 2, 5)
    with pytest.raises(ValueError):
        admissible_edge(PropConfig((1, 2, 1)), 2, 3)


def test_admissible_edge_matches_independent_restatement():
    # every color sequence of length 6, every chord: the library predicate
    # and the test-local restatement agree
    import itertools

    for tail in itertools.product((1, 2, 3), repeat=5):
        cs = (1,) + tail
        if any(a == b for a, b in zip(cs, cs[1:])):
            continue
        cfg = PropConfig(cs)
        for j in range(3, 7):
            for i in range(1, j - 1):
                assert admissible_edge(cfg, i, j) == chord_ok(cs, i, j)


def test_enumeration_result_accessors():
    r = EnumerationResult((1, 2, 0, 4, 0))
    assert r.max_length == 4
    assert r.count_at(2) == 2
    assert r.total == 7
    with pytest.raises(ValueError):
        r.count_at(0)
    with pytest.raises(ValueError):
        r.count_at(6)


def test_enumerate_p6_prefix():
    r = enumerate_propagation_paths(["P6"], 5)
    assert r.counts == (1, 2, 6, 22, 86)


def test_enumerate_no_forbidden_n3():
    assert enumerate_propagation_paths([], 3).counts == (1, 2, 6)


def test_enumerate_edge_cases():
    assert enumerate_propagation_paths(["P6"], 0).counts == ()
    assert enumerate_propagation_paths(["P6"], 1).counts == (1,)
    with pytest.raises(ValueError):
        enumerate_propagation_paths(["P6"], 65)
    with pytest.raises(ValueError):
        enumerate_propagation_paths(["P6"], -1)
    with pytest.raises(ValueError):
        enumerate_propagation_paths(["P6"], 10, jobs=0)


def test_enumerate_agrees_with_brute_force():
    forbidden_sets = [
        [],
        ["P6"],
        ["P4"],
        ["P3"],
        ["claw"],
        ["C4"],
        ["2P2+P1"],
        ["P6", "C4"],
    ]
    for names in forbidden_sets:
        patterns = [pattern_graph(x) for x in names]
        r = enumerate_propagation_paths(names, 6)
        for k in range(1, 7):
            assert r.count_at(k) == brute_count_configs(patterns, k), (names, k)


def test_max_length_examples():
    assert max_propagation_length(["P3"]) == 3
    assert enumerate_propagation_paths(["P3"], 5).counts == (1, 2, 2, 0, 0)
    assert max_propagation_length(["P2"]) == 1
    with pytest.raises(ResourceLimitError):
        max_propagation_length([])


def test_emitted_stream_is_valid_and_complete():
    buf = io.StringIO()
    r = enumerate_propagation_paths(["P6"], 7, emit=buf)
    lines = buf.getvalue().strip().split("\n")
    assert len(lines) == r.total
    assert lines == sorted(lines)
    p6 = pattern_graph("P6")
    per_length = [0] * 7
    seen = set()
    for line in lines:
        assert line not in seen
        seen.add(line)
        cfg = parse_emitted_line(line)
        per_length[cfg.k - 1] += 1
        # independent re-check of every acceptance condition
        cs = cfg.colors
        assert cs[0] == 1
        assert all(a != b for a, b in zip(cs, cs[1:]))
        for i, j in cfg.extra_edges:
            assert chord_ok(cs, i, j), line
        g = config_graph(cfg.k, cfg.extra_edges)
        assert not contains_induced_brute(g, p6), line
    assert tuple(per_length) == r.counts


def test_counts_deterministic_across_workers(monkeypatch):
    # Pretend the machine has three cores so jobs=3 really runs the
    # process pool even when the test host has fewer.
    monkeypatch.setattr("tricrit.propagation.os.cpu_count", lambda: 3)
    buf1 = io.StringIO()
    buf3 = io.StringIO()
    r1 = enumerate_propagation_paths(["P6"], 9, emit=buf1, jobs=1)
    r3 = enumerate_propagation_paths(["P6"], 9, emit=buf3, jobs=3)
    assert r1.counts == r3.counts == P6_REFERENCE_COUNTS[:9]
    assert buf1.getvalue() == buf3.getvalue()


def test_jobs_capped_at_core_count(monkeypatch):
    calls = []
    real_pool = multiprocessing.get_context("fork").Pool

    class Ctx:
        def Pool(self, n):
            calls.append(n)
            return real_pool(n)

    monkeypatch.setattr("tricrit.propagation.os.cpu_count", lambda: 2)
    monkeypatch.setattr(
        "tricrit.propagation.multiprocessing.get_context", lambda kind: Ctx()
    )
    r = enumerate_propagation_paths(["P6"], 8, jobs=8)
    assert r.counts == P6_REFERENCE_COUNTS[:8]
    assert calls == [2]


def test_emit_to_path(tmp_path):
    out = tmp_path / "stream.txt"
    r = enumerate_propagation_paths(["P6"], 4, emit=str(out))
    lines = out.read_text().strip().split("\n")
    assert len(lines) == r.total == 31
    assert lines[0] == "1 1 -"
    assert parse_emitted_line(lines[0]) == PropConfig((1,))


def test_reference_counts_shape():
    assert len(P6_REFERENCE_COUNTS) == 25
    assert P6_REFERENCE_COUNTS[-1] == 0
    assert sum(P6_REFERENCE_COUNTS) == 49605
