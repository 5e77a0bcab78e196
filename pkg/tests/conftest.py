from itertools import combinations

import pytest
from hypothesis import strategies as st

from ecindex.enumeration import prufer_decode
from ecindex.graph import from_edge_list

INF = float("inf")


def fw_distances(g):
    """Floyd-Warshall all-pairs distances; independent of the BFS code path."""
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def oracle_xi(g):
    d = fw_distances(g)
    return sum(len(g.adj[u]) * max(d[u]) for u in range(g.n))


@st.composite
def trees(draw, min_n=2, max_n=14):
    n = draw(st.integers(min_n, max_n))
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(seq, n)


@st.composite
def connected_graphs(draw, min_n=1, max_n=30):
    n = draw(st.integers(min_n, max_n))
    base = draw(trees(min_n=n, max_n=n)) if n >= 2 else from_edge_list(1, [])
    pairs = list(combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n)) if pairs else []
    return from_edge_list(n, list(base.edges) + extra)


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return from_edge_list(n, chosen)


@pytest.fixture
def p4():
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k4():
    return from_edge_list(4, list(combinations(range(4), 2)))
