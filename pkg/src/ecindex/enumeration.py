"""Exhaustive generation of small trees and connected graphs, rankings by the
eccentric connectivity index, and brute-force checks of the extremal results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator

from .errors import DomainError, SizeError
from .families import (
    a_nm,
    build_family,
    closed_form_xi,
    family,
    family_members,
    family_size,
    tree_diam_min_floor_variant,
)
from .formats import read_graph6
from .graph import (
    CanonicalCode,
    Graph,
    canonical_graph_code_small,
    canonical_tree_code,
    eccentricity_profile,
    from_edge_list,
    is_connected,
)
from .invariants import eccentric_connectivity_index, first_zagreb

MAX_TREE_VERTICES = 16
MAX_GRAPH_VERTICES = 7
MAX_TREE_VERIFY = 14


# ---------------------------------------------------------------------------
# free trees: level sequences of center-rooted trees (Wright, Richmond,
# Odlyzko & McKay), each isomorphism class visited exactly once


def _successor_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Next rooted level sequence in reverse-lexicographic order."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    nxt = list(levels)
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - p + q]
    return nxt


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split at the root into the first principal subtree and the remainder."""
    second = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            second = i
            break
    left = [x - 1 for x in levels[1:second]]
    rest = [0] + levels[second:]
    return left, rest


def _next_free(levels: list[int]) -> list[int] | None:
    # repair a candidate until it is the canonical center-rooted form
    while levels is not None:
        left, rest = _split(levels)
        left_h, rest_h = max(left), max(rest)
        ok = rest_h >= left_h
        if ok and rest_h == left_h:
            if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
                ok = False
        if ok:
            return levels
        p = len(left)
        nxt = _successor_rooted(levels, p)
        if nxt is not None and levels[p] > 2:
            new_left, _ = _split(nxt)
            tail = list(range(1, max(new_left) + 2))
            nxt[-len(tail):] = tail
        levels = nxt
    return None


def _levels_to_graph(levels: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, lev in enumerate(levels):
        while stack and levels[stack[-1]] >= lev:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return from_edge_list(len(levels), edges)


def free_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices, in a fixed order."""
    if not 1 <= n <= MAX_TREE_VERTICES:
        raise SizeError(f"free_trees supports 1 <= n <= {MAX_TREE_VERTICES}, got {n}")
    if n <= 2:
        yield from_edge_list(n, [(0, 1)] if n == 2 else [])
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is None:
            return
        yield _levels_to_graph(levels)
        levels = _successor_rooted(levels)


def prufer_decode(seq: list[int], n: int) -> Graph:
    """Labeled tree on ``n`` vertices from a Prüfer sequence of length n-2."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# connected graphs


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[tuple[CanonicalCode, Graph], ...]:
    if n == 1:
        g = from_edge_list(1, [])
        return ((canonical_graph_code_small(g), g),)
    # every connected graph has a non-cut vertex, so extending each smaller
    # connected class by one vertex with a nonempty neighbourhood reaches all
    found: dict[CanonicalCode, Graph] = {}
    last = n - 1
    for _, base in _connected_classes(n - 1):
        for mask in range(1, 1 << last):
            extra = [(v, last) for v in range(last) if mask >> v & 1]
            g = from_edge_list(n, base.edges + tuple(extra))
            code = canonical_graph_code_small(g)
            if code not in found:
                found[code] = _graph_from_code(code)
    return tuple(sorted(found.items()))


def _graph_from_code(code: CanonicalCode) -> Graph:
    return read_graph6(code.data.decode("ascii"))


def connected_graphs(n: int, m: int | None = None) -> Iterator[Graph]:
    """One connected graph per isomorphism class, canonical-code order."""
    if not 1 <= n <= MAX_GRAPH_VERTICES:
        raise SizeError(
            f"built-in graph generation supports 1 <= n <= {MAX_GRAPH_VERTICES}, got {n}; "
            "for larger n supply a graph6 corpus file"
        )
    for _, g in _connected_classes(n):
        if m is None or g.m == m:
            yield g


def labeled_connected_classes(n: int) -> set[CanonicalCode]:
    """Oracle: canonical codes of every labeled connected graph on n vertices."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    codes = set()
    for mask in range(1 << len(pairs)):
        g = from_edge_list(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if is_connected(g):
            codes.add(canonical_graph_code_small(g))
    return codes


# ---------------------------------------------------------------------------
# rankings


def pendent_count(g: Graph) -> int:
    return sum(1 for nbrs in g.adj if len(nbrs) == 1)


@lru_cache(maxsize=None)
def _scored_trees(n: int) -> tuple[tuple[int, CanonicalCode, Graph, int, int], ...]:
    """(xi, code, tree, diameter, pendents) for every tree on n vertices."""
    rows = []
    for t in free_trees(n):
        prof = eccentricity_profile(t)
        xi = sum(len(t.adj[u]) * prof.ecc[u] for u in range(n))
        rows.append((xi, canonical_tree_code(t), t, prof.diameter, pendent_count(t)))
    return tuple(rows)


@dataclass(frozen=True)
class RankedList:
    entries: tuple[tuple[CanonicalCode, Graph, int], ...]
    order: str
    scope: str

    @property
    def values(self) -> list[int]:
        return [xi for _, _, xi in self.entries]


def rank_trees(n: int, order: str = "min", diameter: int | None = None,
               pendents: int | None = None, top: int | None = None) -> RankedList:
    if order not in ("min", "max"):
        raise DomainError(f"order must be 'min' or 'max', got {order!r}")
    if diameter is not None and pendents is not None:
        raise DomainError("constrain by diameter or by pendent count, not both")
    if not 1 <= n <= MAX_TREE_VERTICES:
        raise SizeError(f"rank_trees supports 1 <= n <= {MAX_TREE_VERTICES}, got {n}")
    rows = _scored_trees(n)
    scope = f"all trees n={n}"
    if diameter is not None:
        if not 0 <= diameter <= n - 1:
            raise DomainError(f"diameter must lie in 0..{n - 1}, got {diameter}")
        rows = [r for r in rows if r[3] == diameter]
        scope = f"trees n={n} diameter={diameter}"
    if pendents is not None:
        if not 0 <= pendents <= max(n - 1, 2):
            raise DomainError(f"pendent count must lie in 0..{max(n - 1, 2)}, got {pendents}")
        rows = [r for r in rows if r[4] == pendents]
        scope = f"trees n={n} pendents={pendents}"
    if order == "min":
        ranked = sorted(rows, key=lambda r: (r[0], r[1]))
    else:
        ranked = sorted(rows, key=lambda r: (-r[0], r[1]))
    if top is not None:
        if top < 0:
            raise DomainError(f"top must be nonnegative, got {top}")
        ranked = ranked[:top]
    return RankedList(tuple((code, t, xi) for xi, code, t, _, _ in ranked), order, scope)


def value_classes(ranked: RankedList, count: int) -> list[tuple[int, set[CanonicalCode]]]:
    """The first ``count`` distinct values with the codes achieving each."""
    classes: list[tuple[int, set[CanonicalCode]]] = []
    for code, _, xi in ranked.entries:
        if classes and classes[-1][0] == xi:
            classes[-1][1].add(code)
        elif len(classes) < count:
            classes.append((xi, {code}))
        else:
            break
    return classes


# ---------------------------------------------------------------------------
# verification


@dataclass
class Witness:
    params: dict
    value: int | None
    expected_value: int | None
    found: list[str]
    expected: list[str]
    ok: bool


@dataclass
class VerificationVerdict:
    proposition: str
    parameter_range: str
    witnesses: list[Witness] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


PROPOSITIONS = ("P2", "P3", "P5", "P6", "P7", "P8", "P9")
DEFAULT_N_MIN = {"P2": 4, "P3": 2, "P5": 3, "P6": 4, "P7": 6, "P8": 4, "P9": 6}
GRAPH_PROPOSITIONS = ("P2", "P3", "P5")


def _codes(codes) -> list[str]:
    return sorted(str(c) for c in codes)


def _tree_codes(specs) -> set[CanonicalCode]:
    return {canonical_tree_code(build_family(s)) for s in specs}


def _graph_codes(specs) -> set[CanonicalCode]:
    return {canonical_graph_code_small(build_family(s)) for s in specs}


def _record(verdict: VerificationVerdict, params: dict, value, expected_value, found, expected) -> None:
    ok = value == expected_value and found == expected
    verdict.witnesses.append(Witness(params, value, expected_value, _codes(found), _codes(expected), ok))
    if not ok:
        detail = ", ".join(f"{k}={v}" for k, v in params.items())
        verdict.mismatches.append(
            f"{detail}: value {value} (expected {expected_value}), "
            f"{len(found)} extremal classes (expected {len(expected)})"
        )


def verify_proposition(prop: str, n_max: int, n_min: int | None = None,
                       variant: str = "ceil") -> VerificationVerdict:
    """Check one extremal proposition exhaustively for n_min <= n <= n_max.

    ``variant="floor"`` runs P6 against the formula printed with floor(d/2),
    which fails at odd d.
    """
    if prop not in PROPOSITIONS:
        raise DomainError(f"unknown proposition {prop!r}; choose from {', '.join(PROPOSITIONS)}")
    if n_min is None:
        n_min = DEFAULT_N_MIN[prop]
    n_min = max(n_min, DEFAULT_N_MIN[prop])
    cap = MAX_GRAPH_VERTICES if prop in GRAPH_PROPOSITIONS else MAX_TREE_VERIFY
    if n_max > cap:
        raise SizeError(f"{prop} verification is capped at n <= {cap}, got n_max={n_max}")
    if variant not in ("ceil", "floor"):
        raise DomainError(f"variant must be 'ceil' or 'floor', got {variant!r}")
    verdict = VerificationVerdict(prop, f"n={n_min}..{n_max}")
    for n in range(n_min, n_max + 1):
        _VERIFIERS[prop](verdict, n, variant)
    return verdict


def _verify_p2(verdict, n, _variant):
    scored = [(eccentric_connectivity_index(g), canonical_graph_code_small(g)) for g in connected_graphs(n)]
    low = min(xi for xi, _ in scored)
    found = {c for xi, c in scored if xi == low}
    _record(verdict, {"n": n}, low, 3 * (n - 1), found, _graph_codes([family("star", n)]))


def _verify_p3(verdict, n, _variant):
    by_m: dict[int, list[tuple[int, CanonicalCode, Graph]]] = {}
    for g in connected_graphs(n):
        by_m.setdefault(g.m, []).append((eccentric_connectivity_index(g), canonical_graph_code_small(g), g))
    for m in range(n - 1, comb(n, 2)):
        a = a_nm(n, m)
        rows = by_m.get(m, [])
        low = min(xi for xi, _, _ in rows)
        found = {c for xi, c, _ in rows if xi == low}
        # K_a join H: at least a universal vertices (they form the K_a)
        expected = {c for _, c, g in rows if sum(1 for d in g.degrees() if d == n - 1) >= a}
        constructed = canonical_graph_code_small(build_family(family("join-extremal", n, m)))
        if constructed not in found:
            verdict.mismatches.append(f"n={n}, m={m}: constructed K_a join H is not a minimizer")
        _record(verdict, {"n": n, "m": m, "a": a}, low, 4 * m - a * (n - 1), found, expected)


def _verify_p5(verdict, n, _variant):
    tight = set()
    violated = []
    for g in connected_graphs(n):
        xi = eccentric_connectivity_index(g)
        bound = 2 * n * g.m - first_zagreb(g)
        if xi > bound:
            violated.append(g)
        elif xi == bound:
            tight.add(canonical_graph_code_small(g))
    specs = [family("complete-minus-matching", n, k) for k in range(n // 2 + 1)]
    if n == 4:
        specs.append(family("path", 4))
    expected = _graph_codes(specs)
    _record(verdict, {"n": n}, len(violated), 0, tight, expected)


def _verify_p6(verdict, n, variant):
    for d in range(2, n - 1):
        ranked = rank_trees(n, "min", diameter=d)
        (low, found), = value_classes(ranked, 1)
        if variant == "ceil":
            expected_value = closed_form_xi(family("tree-diam-min", n, d))
        else:
            expected_value = tree_diam_min_floor_variant(n, d)
        expected = _tree_codes(family_members("tree-diam-min", n, d))
        if len(expected) != family_size("tree-diam-min", n, d):
            verdict.mismatches.append(f"n={n}, d={d}: family construction has {len(expected)} classes, "
                                      f"expected {family_size('tree-diam-min', n, d)}")
        _record(verdict, {"n": n, "d": d}, low, expected_value, found, expected)


def _verify_p7(verdict, n, _variant):
    classes = value_classes(rank_trees(n, "min"), 3)
    expected = [
        (3 * (n - 1), _tree_codes([family("star", n)])),
        (5 * n - 6, _tree_codes(family_members("double-star", n))),
        (5 * n - 1, _tree_codes([family("tree-diam-min", n, 4)])),
    ]
    for rank, ((value, found), (want, codes)) in enumerate(zip(classes, expected), start=1):
        _record(verdict, {"n": n, "rank": rank}, value, want, found, codes)


def _verify_p8(verdict, n, _variant):
    for p in range(2, n - 1):
        (high, found), = value_classes(rank_trees(n, "max", pendents=p), 1)
        expected = _tree_codes(family_members("tree-pend-max", n, p))
        if len(expected) != family_size("tree-pend-max", n, p):
            verdict.mismatches.append(f"n={n}, p={p}: family construction has {len(expected)} classes, "
                                      f"expected {family_size('tree-pend-max', n, p)}")
        _record(verdict, {"n": n, "p": p}, high, closed_form_xi(family("tree-pend-max", n, p)), found, expected)


def _verify_p9(verdict, n, _variant):
    classes = value_classes(rank_trees(n, "max"), 3)
    base = 3 * (n - 1) ** 2 // 2
    expected = [
        ((3 * (n - 1) ** 2 + 1) // 2, _tree_codes([family("path", n)])),
        (base - n, _tree_codes([family("path-plus-pendant", n, 1)])),
        (base - n - 2, _tree_codes([family("path-plus-pendant", n, 2)])),
    ]
    for rank, ((value, found), (want, codes)) in enumerate(zip(classes, expected), start=1):
        _record(verdict, {"n": n, "rank": rank}, value, want, found, codes)


_VERIFIERS = {
    "P2": _verify_p2,
    "P3": _verify_p3,
    "P5": _verify_p5,
    "P6": _verify_p6,
    "P7": _verify_p7,
    "P8": _verify_p8,
    "P9": _verify_p9,
}
