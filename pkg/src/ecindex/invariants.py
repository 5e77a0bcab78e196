"""Eccentric connectivity index and the companion invariants used in the bounds."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .graph import Graph, distance_matrix, eccentricity_profile, profile_from_distances


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    xi: int
    wiener: int
    degree_distance: int
    zagreb1: int
    min_degree: int
    max_degree: int
    radius: int
    diameter: int

    def as_dict(self) -> dict:
        return asdict(self)


def xi_from_vertices(g: Graph, ecc) -> int:
    return sum(len(g.adj[u]) * ecc[u] for u in range(g.n))


def xi_from_edges(g: Graph, ecc) -> int:
    return sum(ecc[u] + ecc[v] for u, v in g.edges)


def eccentric_connectivity_index(g: Graph) -> int:
    """Sum over vertices of degree times eccentricity."""
    ecc = eccentricity_profile(g).ecc
    return xi_from_vertices(g, ecc)


def wiener_index(g: Graph) -> int:
    dist = distance_matrix(g)
    return sum(map(sum, dist)) // 2


def degree_distance(g: Graph) -> int:
    dist = distance_matrix(g)
    return sum(len(g.adj[u]) * sum(dist[u]) for u in range(g.n))


def first_zagreb(g: Graph) -> int:
    # no distances involved, so disconnected graphs are fine
    return sum(len(nbrs) ** 2 for nbrs in g.adj)


def invariant_report(g: Graph) -> InvariantReport:
    dist = distance_matrix(g)
    prof = profile_from_distances(dist)
    xi = xi_from_vertices(g, prof.ecc)
    if xi != xi_from_edges(g, prof.ecc):
        raise AssertionError("vertex-sum and edge-sum eccentric connectivity disagree")
    degrees = g.degrees()
    totals = [sum(row) for row in dist]
    return InvariantReport(
        n=g.n,
        m=g.m,
        xi=xi,
        wiener=sum(totals) // 2,
        degree_distance=sum(d * t for d, t in zip(degrees, totals)),
        zagreb1=sum(d * d for d in degrees),
        min_degree=min(degrees),
        max_degree=max(degrees),
        radius=prof.radius,
        diameter=prof.diameter,
    )
