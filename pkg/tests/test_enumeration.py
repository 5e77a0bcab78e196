from itertools import product

import pytest

from ecindex.enumeration import (
    connected_graphs,
    free_trees,
    labeled_connected_classes,
    pendent_count,
    prufer_decode,
    rank_trees,
    value_classes,
    verify_proposition,
)
from ecindex.errors import DomainError, SizeError
from ecindex.families import build_family, family
from ecindex.formats import write_graph6
from ecindex.graph import canonical_graph_code_small, canonical_tree_code, eccentricity_profile

TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]
GRAPH_COUNTS = [1, 1, 2, 6, 21, 112, 853]


def fam(tag, *params):
    return build_family(family(tag, *params))


def prufer_classes(n):
    """Oracle: canonical codes of every labeled tree on n vertices."""
    if n <= 2:
        return {canonical_tree_code(prufer_decode([], n))} if n == 2 else None
    return {canonical_tree_code(prufer_decode(list(seq), n)) for seq in product(range(n), repeat=n - 2)}


@pytest.mark.parametrize("n", range(1, 13))
def test_free_tree_counts(n):
    trees = list(free_trees(n))
    assert len(trees) == TREE_COUNTS[n - 1]
    assert all(t.is_tree() and t.n == n for t in trees)
    assert len({canonical_tree_code(t) for t in trees}) == len(trees)


@pytest.mark.parametrize("n", range(13, 17))
def test_free_tree_counts_large(n):
    assert sum(1 for _ in free_trees(n)) == TREE_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(2, 9))
def test_free_trees_match_prufer_oracle(n):
    assert {canonical_tree_code(t) for t in free_trees(n)} == prufer_classes(n)


def test_free_trees_small_cases():
    (k1,) = free_trees(1)
    assert k1.n == 1 and k1.m == 0
    assert len(list(free_trees(6))) == 6
    assert len(list(free_trees(7))) == 11


def test_free_trees_deterministic():
    assert [t.edges for t in free_trees(9)] == [t.edges for t in free_trees(9)]


@pytest.mark.parametrize("n", [0, 17])
def test_free_trees_size_error(n):
    with pytest.raises(SizeError):
        list(free_trees(n))


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_graph_counts(n):
    graphs = list(connected_graphs(n))
    assert len(graphs) == GRAPH_COUNTS[n - 1]
    assert len({canonical_graph_code_small(g) for g in graphs}) == len(graphs)


@pytest.mark.parametrize("n", range(1, 6))
def test_connected_graphs_match_labeled_oracle(n):
    assert {canonical_graph_code_small(g) for g in connected_graphs(n)} == labeled_connected_classes(n)


def test_connected_graphs_by_edge_count():
    g43 = list(connected_graphs(4, 3))
    assert len(g43) == 2
    assert {canonical_graph_code_small(g) for g in g43} == {
        canonical_graph_code_small(fam("path", 4)), canonical_graph_code_small(fam("star", 4))}
    assert len(list(connected_graphs(3))) == 2
    for n in range(2, 8):
        assert sum(1 for _ in connected_graphs(n, n - 1)) == TREE_COUNTS[n - 1]


def test_connected_graphs_size_error():
    with pytest.raises(SizeError, match="graph6"):
        list(connected_graphs(8))


# ---------------------------------------------------------------------------
# rankings


def test_rank_n6_min():
    assert rank_trees(6, "min", top=6).values == [15, 24, 24, 29, 31, 38]


def test_rank_n6_max():
    ranked = rank_trees(6, "max", top=3)
    assert ranked.values == [38, 31, 29]
    expected = [fam("path", 6), fam("path-plus-pendant", 6, 1), fam("path-plus-pendant", 6, 2)]
    assert [c for c, _, _ in ranked.entries] == [canonical_tree_code(t) for t in expected]


def test_rank_n7_diameter4():
    ranked = rank_trees(7, "min", diameter=4, top=1)
    assert ranked.values == [34]
    assert ranked.entries[0][0] == canonical_tree_code(fam("tree-diam-min", 7, 4))


def test_rank_sorted_with_code_tiebreak():
    for order in ("min", "max"):
        entries = rank_trees(10, order).entries
        sign = 1 if order == "min" else -1
        keys = [(sign * xi, code) for code, _, xi in entries]
        assert keys == sorted(keys)
        assert len({c for c, _, _ in entries}) == len(entries)


def test_rank_deterministic():
    a = [(str(c), write_graph6(t), xi) for c, t, xi in rank_trees(11, "max").entries]
    b = [(str(c), write_graph6(t), xi) for c, t, xi in rank_trees(11, "max").entries]
    assert a == b


@pytest.mark.parametrize("n", range(2, 13))
def test_rank_exhaustive_by_class(n):
    total = TREE_COUNTS[n - 1]
    assert len(rank_trees(n).entries) == total
    assert sum(len(rank_trees(n, diameter=d).entries) for d in range(n)) == total
    assert sum(len(rank_trees(n, pendents=p).entries) for p in range(max(n, 3))) == total
    for _, t, _ in rank_trees(n, diameter=min(3, n - 1)).entries:
        assert eccentricity_profile(t).diameter == min(3, n - 1)
    for _, t, _ in rank_trees(n, pendents=2).entries:
        assert pendent_count(t) == 2


@pytest.mark.parametrize("n", range(5, 13))
def test_min_over_diameter_increments(n):
    lows = {d: rank_trees(n, "min", diameter=d, top=1).values[0] for d in range(2, n)}
    for d in range(3, n):
        assert lows[d] - lows[d - 1] == (2 * d - 3 if d % 2 == 0 else 2 * n - 3)


def test_value_classes():
    classes = value_classes(rank_trees(6), 3)
    assert [v for v, _ in classes] == [15, 24, 29]
    assert len(classes[1][1]) == 2


def test_rank_errors():
    with pytest.raises(DomainError):
        rank_trees(6, "median")
    with pytest.raises(DomainError):
        rank_trees(6, diameter=2, pendents=3)
    with pytest.raises(DomainError):
        rank_trees(6, diameter=6)
    with pytest.raises(DomainError):
        rank_trees(6, top=-1)
    with pytest.raises(SizeError):
        rank_trees(17)


# ---------------------------------------------------------------------------
# proposition verification


def test_verify_p7():
    v = verify_proposition("P7", 10)
    assert v.passed and v.parameter_range == "n=6..10"
    second = next(w for w in v.witnesses if w.params == {"n": 6, "rank": 2})
    assert second.value == 24 and len(second.found) == 2


def test_verify_p9():
    v = verify_proposition("P9", 10)
    assert v.passed
    third = next(w for w in v.witnesses if w.params == {"n": 6, "rank": 3})
    assert third.value == 29


def test_verify_p5():
    v = verify_proposition("P5", 7)
    assert v.passed
    w4 = next(w for w in v.witnesses if w.params == {"n": 4})
    expected = [fam("complete", 4), fam("complete-minus-matching", 4, 1),
                fam("cycle", 4), fam("path", 4)]
    assert w4.found == sorted(str(canonical_graph_code_small(g)) for g in expected)


def test_verify_p6_ceil_and_floor():
    assert verify_proposition("P6", 10, n_min=5).passed
    floor = verify_proposition("P6", 10, n_min=5, variant="floor")
    assert not floor.passed
    bad = {(w.params["n"], w.params["d"]) for w in floor.witnesses if not w.ok}
    expected_bad = {(n, d) for n in range(5, 11) for d in range(3, n - 1, 2)}
    assert bad == expected_bad


def test_verify_p8():
    v = verify_proposition("P8", 11)
    assert v.passed
    assert {(w.params["n"], w.params["p"]) for w in v.witnesses} == {
        (n, p) for n in range(4, 12) for p in range(2, n - 1)}


@pytest.mark.parametrize("prop", ["P2", "P3"])
def test_verify_graph_props(prop):
    v = verify_proposition(prop, 7)
    assert v.passed, v.mismatches


def test_verify_passed_iff_no_mismatches():
    v = verify_proposition("P6", 8, variant="floor")
    assert v.passed == (not v.mismatches)
    assert all(w.ok for w in v.witnesses) == v.passed


def test_verify_errors():
    with pytest.raises(SizeError):
        verify_proposition("P2", 8)
    with pytest.raises(SizeError):
        verify_proposition("P7", 15)
    with pytest.raises(DomainError):
        verify_proposition("P4", 6)
    with pytest.raises(DomainError):
        verify_proposition("P6", 6, variant="round")
