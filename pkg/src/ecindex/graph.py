"""Simple undirected graphs on vertices ``0..n-1``.

Distances, eccentricities, complements and canonical codes for isomorphism
testing on small instances live here. Everything is exact and integral.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .errors import DisconnectedGraphError, DomainError, GraphInputError, SizeError

MAX_VERTICES = 200_000
MAX_SMALL_CODE_VERTICES = 8


class Graph:
    """Immutable simple undirected graph.

    ``edges`` is a sorted tuple of ``(u, v)`` pairs with ``u < v`` and
    ``adj[u]`` is the sorted tuple of neighbours of ``u``.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: tuple[tuple[int, int], ...], adj: tuple[tuple[int, ...], ...]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        nbrs = self.adj[u]
        # adjacency lists are short for the graphs handled here
        return v in nbrs

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and is_connected(self)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate pairs collapse to one edge."""
    if n < 0:
        raise GraphInputError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise SizeError(f"vertex count {n} exceeds the supported maximum {MAX_VERTICES}")
    edge_set = set()
    for pair in pairs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        edge_set.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(edge_set))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, edges, tuple(tuple(sorted(x)) for x in nbrs))


def relabel(g: Graph, mapping: Sequence[int]) -> Graph:
    """Return the graph with vertex ``u`` renamed to ``mapping[u]``."""
    if sorted(mapping) != list(range(g.n)):
        raise GraphInputError("mapping must be a permutation of the vertex set")
    return from_edge_list(g.n, ((mapping[u], mapping[v]) for u, v in g.edges))


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    self_centered: bool


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def bfs_distances(g: Graph, u: int) -> list[int]:
    """Shortest-path edge counts from ``u``; raises if some vertex is unreachable."""
    if not 0 <= u < g.n:
        raise GraphInputError(f"vertex {u} outside 0..{g.n - 1}")
    dist = _bfs(g, u)
    for v, d in enumerate(dist):
        if d < 0:
            raise DisconnectedGraphError(v)
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs distances by one BFS per vertex.

    Frontiers are int bitsets, so a level costs O(n) word operations rather
    than a scan of every edge, which matters for dense graphs.
    """
    n = g.n
    if n == 0:
        raise DomainError("distances need at least one vertex")
    masks = [0] * n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    full = (1 << n) - 1
    rows = []
    for s in range(n):
        row = [0] * n
        seen = frontier = 1 << s
        depth = 0
        while frontier:
            depth += 1
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= masks[low.bit_length() - 1]
                f ^= low
            frontier = reach & ~seen
            seen |= frontier
            f = frontier
            while f:
                low = f & -f
                row[low.bit_length() - 1] = depth
                f ^= low
        if seen != full:
            missing = (full & ~seen)
            raise DisconnectedGraphError((missing & -missing).bit_length() - 1)
        rows.append(row)
    return rows


def profile_from_distances(dist: Sequence[Sequence[int]]) -> EccentricityProfile:
    ecc = tuple(max(row) for row in dist)
    radius, diameter = min(ecc), max(ecc)
    return EccentricityProfile(ecc, radius, diameter, radius == diameter)


def _tree_eccentricities(g: Graph) -> tuple[int, ...]:
    # in a tree every vertex is farthest from one end of a diametral path,
    # so three sweeps replace one BFS per vertex
    d0 = bfs_distances(g, 0)
    a = d0.index(max(d0))
    da = _bfs(g, a)
    b = da.index(max(da))
    db = _bfs(g, b)
    return tuple(max(x, y) for x, y in zip(da, db))


def eccentricity_profile(g: Graph) -> EccentricityProfile:
    if g.n >= 2 and g.m == g.n - 1:
        ecc = _tree_eccentricities(g)
        radius, diameter = min(ecc), max(ecc)
        return EccentricityProfile(ecc, radius, diameter, radius == diameter)
    return profile_from_distances(distance_matrix(g))


def complement(g: Graph) -> Graph:
    n = g.n
    present = set(g.edges)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    return from_edge_list(n, pairs)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return min(_bfs(g, 0)) >= 0


# ---------------------------------------------------------------------------
# canonical codes


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-class fingerprint; only codes of the same ``kind`` compare."""

    kind: str
    data: bytes

    def __str__(self):
        return f"{self.kind}:{self.data.decode('ascii')}"


def tree_centers(g: Graph) -> list[int]:
    """One or two central vertices, found by stripping leaves layer by layer."""
    n = g.n
    if n <= 2:
        return list(range(n))
    degree = g.degrees()
    layer = [u for u in range(n) if degree[u] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for v in g.adj[u]:
                degree[v] -= 1
                if degree[v] == 1:
                    nxt.append(v)
        layer = nxt
    return sorted(layer)


def _rooted_code(g: Graph, root: int) -> bytes:
    # iterative post-order so deep paths do not hit the recursion limit
    parent = [-1] * g.n
    order = []
    stack = [root]
    seen = [False] * g.n
    seen[root] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                stack.append(v)
    children: list[list[bytes]] = [[] for _ in range(g.n)]
    code = [b""] * g.n
    for u in reversed(order):
        kids = children[u]
        kids.sort()
        code[u] = b"(" + b"".join(kids) + b")"
        if parent[u] >= 0:
            children[parent[u]].append(code[u])
    return code[root]


def canonical_tree_code(g: Graph) -> CanonicalCode:
    """Center-rooted subtree-sorting code; equal iff the trees are isomorphic."""
    if not g.is_tree():
        raise DomainError("canonical_tree_code requires a tree")
    centers = tree_centers(g)
    return CanonicalCode("tree", min(_rooted_code(g, c) for c in centers))


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.intp).reshape(-1, n)


@lru_cache(maxsize=None)
def _pair_columns(n: int) -> tuple[np.ndarray, np.ndarray]:
    # column-major upper triangle, the graph6 bit order
    rows = [i for j in range(n) for i in range(j)]
    cols = [j for j in range(n) for i in range(j)]
    return np.array(rows, dtype=np.intp), np.array(cols, dtype=np.intp)


def canonical_graph_code_small(g: Graph) -> CanonicalCode:
    """Lexicographically least upper-triangle bit string over all relabelings.

    The bits are emitted in graph6 order, so the payload is the graph6 string
    of the least relabeling.
    """
    n = g.n
    if n > MAX_SMALL_CODE_VERTICES:
        raise SizeError(
            f"canonical_graph_code_small handles n <= {MAX_SMALL_CODE_VERTICES}, got n={n}; "
            "use an external canonical labeling tool (e.g. nauty) for larger graphs"
        )
    rows, cols = _pair_columns(n)
    if len(rows) == 0:
        return CanonicalCode("graph", _graph6_bits(n, []))
    adjm = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        adjm[u, v] = adjm[v, u] = 1
    perms = _permutation_table(n)
    bits = adjm[perms[:, rows], perms[:, cols]]
    weights = np.left_shift(np.int64(1), np.arange(len(rows) - 1, -1, -1, dtype=np.int64))
    best = int(np.argmin(bits @ weights))
    return CanonicalCode("graph", _graph6_bits(n, bits[best].tolist()))


def _graph6_bits(n: int, bits: list[int]) -> bytes:
    out = bytearray([n + 63])
    padded = bits + [0] * (-len(bits) % 6)
    for k in range(0, len(padded), 6):
        value = 0
        for b in padded[k:k + 6]:
            value = (value << 1) | b
        out.append(value + 63)
    return bytes(out)


def isomorphic_small(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_graph_code_small(g) == canonical_graph_code_small(h)
