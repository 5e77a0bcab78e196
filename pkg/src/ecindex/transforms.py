"""Two tree rewirings with a known effect on the eccentric connectivity index.

``lemma1_apply`` collapses a star hanging off a vertex into pendent vertices
(strictly decreasing the index). ``lemma2_apply`` moves a branch closer to
the far end of a degree-2 path (strictly increasing it). Both validate their
hypotheses before rewiring and raise :class:`HypothesisError` otherwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DomainError, HypothesisError
from .graph import Graph, bfs_distances, from_edge_list


@dataclass(frozen=True)
class Lemma1Site:
    tree: Graph
    u: int
    v: int
    a: int


@dataclass(frozen=True)
class Lemma2Site:
    tree: Graph
    x: int
    y: int
    path: tuple[int, ...]
    m_neighbors: tuple[int, ...]
    n_branch_root: int


def _require_tree(g: Graph) -> None:
    if not g.is_tree():
        raise DomainError("input must be a tree")


def _depth_from(g: Graph, root: int, starts) -> int:
    """Largest distance from ``root`` to a vertex in the branches at ``starts``."""
    best = 0
    seen = {root}
    frontier = list(starts)
    seen.update(frontier)
    depth = 1
    while frontier:
        best = depth
        nxt = []
        for w in frontier:
            for z in g.adj[w]:
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
        depth += 1
    return best


def _rewire(g: Graph, removed, added) -> Graph:
    removed = {(min(e), max(e)) for e in removed}
    kept = [e for e in g.edges if e not in removed]
    return from_edge_list(g.n, kept + list(added))


# ---------------------------------------------------------------------------
# lemma 1


def validate_lemma1(site: Lemma1Site) -> None:
    g, u, v, a = site.tree, site.u, site.v, site.a
    _require_tree(g)
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise HypothesisError(f"vertices u={u}, v={v} must lie in 0..{g.n - 1}")
    if not g.has_edge(u, v):
        raise HypothesisError(f"v={v} must be adjacent to u={u}")
    others = [w for w in g.adj[v] if w != u]
    if a < 1:
        raise HypothesisError(f"star pendent count a must be >= 1, got {a}")
    if len(others) != a or any(len(g.adj[w]) != 1 for w in others):
        raise HypothesisError(f"v={v} must have exactly a={a} pendent neighbours besides u={u}")
    if g.n - (a + 1) < 2:
        raise HypothesisError("the retained subtree Q must have at least two vertices")


def lemma1_apply(site: Lemma1Site) -> Graph:
    """Detach the star at ``v`` and hang all of its a+1 vertices on ``u``."""
    validate_lemma1(site)
    g, u, v = site.tree, site.u, site.v
    pendents = [w for w in g.adj[v] if w != u]
    removed = [(v, w) for w in pendents]
    added = [(u, w) for w in pendents]
    return _rewire(g, removed, added)


def find_lemma1_sites(tree: Graph) -> list[Lemma1Site]:
    _require_tree(tree)
    if tree.n < 4:
        raise DomainError("site discovery needs n >= 4")
    sites = []
    for u in range(tree.n):
        for v in tree.adj[u]:
            others = [w for w in tree.adj[v] if w != u]
            a = len(others)
            if a >= 1 and tree.n - (a + 1) >= 2 and all(len(tree.adj[w]) == 1 for w in others):
                sites.append(Lemma1Site(tree, u, v, a))
    return sites


# ---------------------------------------------------------------------------
# lemma 2


def _walk_path(g: Graph, x: int, y: int) -> list[int] | None:
    """The x..y path in a tree, or None if x == y."""
    if x == y:
        return None
    parent = {x: -1}
    queue = deque([x])
    while queue:
        w = queue.popleft()
        for z in g.adj[w]:
            if z not in parent:
                parent[z] = w
                queue.append(z)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    return path[::-1]


def validate_lemma2(site: Lemma2Site) -> None:
    g, x, y = site.tree, site.x, site.y
    _require_tree(g)
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise HypothesisError(f"vertices x={x}, y={y} must lie in 0..{g.n - 1}")
    path = _walk_path(g, x, y)
    if path is None:
        raise HypothesisError("x and y must be distinct")
    if tuple(path) != tuple(site.path):
        raise HypothesisError(f"path {list(site.path)} is not the x-y path {path}")
    if any(len(g.adj[w]) != 2 for w in path[1:-1]):
        raise HypothesisError("internal vertices of the x-y path must have degree two")
    if len(g.adj[x]) < 2:
        raise HypothesisError(f"x={x} must have degree at least two")
    toward_x = path[-2]
    root = site.n_branch_root
    if root not in g.adj[y] or root == toward_x:
        raise HypothesisError(f"N root {root} must be a neighbour of y off the x-y path")
    m_nbrs = set(site.m_neighbors)
    if not m_nbrs:
        raise HypothesisError("y must have at least one neighbour in M")
    expected = set(g.adj[y]) - {toward_x, root}
    if m_nbrs != expected:
        raise HypothesisError(
            f"M neighbours must be all of y's remaining neighbours {sorted(expected)}, got {sorted(m_nbrs)}"
        )
    if len(g.adj[root]) < 2:
        raise HypothesisError("N must not be a single vertex")
    depth_m = _depth_from(g, y, m_nbrs)
    depth_n = _depth_from(g, y, [root])
    if depth_m > depth_n:
        raise HypothesisError(
            f"max distance from y into M ({depth_m}) exceeds max distance into N ({depth_n})"
        )
    ecc_x, ecc_y = max(bfs_distances(g, x)), max(bfs_distances(g, y))
    if ecc_x <= ecc_y:
        # without this the rewiring can leave the index unchanged or lower it
        raise HypothesisError(f"eccentricity of x ({ecc_x}) must exceed eccentricity of y ({ecc_y})")


def lemma2_apply(site: Lemma2Site) -> Graph:
    """Move every M-neighbour of ``y`` over to ``x``."""
    validate_lemma2(site)
    y, x = site.y, site.x
    removed = [(y, w) for w in site.m_neighbors]
    added = [(x, w) for w in site.m_neighbors]
    return _rewire(site.tree, removed, added)


def find_lemma2_sites(tree: Graph) -> list[Lemma2Site]:
    """All (x, y, N) choices satisfying the hypotheses, ordered by (y, x, N root)."""
    _require_tree(tree)
    if tree.n < 4:
        raise DomainError("site discovery needs n >= 4")
    sites = []
    adj = tree.adj
    for y in range(tree.n):
        if len(adj[y]) < 3:
            continue
        candidates = []
        for first in adj[y]:
            # walk away from y through degree-2 vertices; each stop is an x
            prev, cur = y, first
            path = [y, cur]
            while True:
                if len(adj[cur]) >= 2:
                    candidates.append((cur, first, tuple(reversed(path))))
                if len(adj[cur]) != 2:
                    break
                nxt = adj[cur][0] if adj[cur][1] == prev else adj[cur][1]
                prev, cur = cur, nxt
                path.append(cur)
        depth = {w: _depth_from(tree, y, [w]) for w in adj[y]}
        ecc_y = max(depth.values())
        for x, first, path in candidates:
            ecc_x = max(bfs_distances(tree, x))
            if ecc_x <= ecc_y:
                continue
            for root in adj[y]:
                if root == first or len(adj[root]) < 2:
                    continue
                m_nbrs = tuple(w for w in adj[y] if w not in (first, root))
                if max(depth[w] for w in m_nbrs) <= depth[root]:
                    sites.append(Lemma2Site(tree, x, y, path, m_nbrs, root))
    sites.sort(key=lambda s: (s.y, s.x, s.n_branch_root))
    return sites


def lemma1_descent(tree: Graph) -> list[Graph]:
    """Apply the first available Lemma 1 site until none remains."""
    chain_ = [tree]
    while tree.n >= 4:
        sites = find_lemma1_sites(tree)
        if not sites:
            break
        tree = lemma1_apply(sites[0])
        chain_.append(tree)
    return chain_


__all__ = [
    "Lemma1Site",
    "Lemma2Site",
    "find_lemma1_sites",
    "find_lemma2_sites",
    "lemma1_apply",
    "lemma1_descent",
    "lemma2_apply",
    "validate_lemma1",
    "validate_lemma2",
]
