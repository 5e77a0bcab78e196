"""Inequalities relating the eccentric connectivity index to other invariants.

Each bound is evaluated on a concrete connected graph and reported with
whether it holds, whether it is tight, and whether the graph belongs to the
class the equality case characterizes. Rational bounds are kept as
:class:`fractions.Fraction`, so every comparison is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .families import a_nm
from .graph import (
    Graph,
    complement,
    eccentricity_profile,
    is_connected,
)
from .invariants import InvariantReport, eccentric_connectivity_index, invariant_report


class BoundId(enum.Enum):
    PROP1_LOWER = "PROP1_LOWER"
    PROP1_UPPER = "PROP1_UPPER"
    COR1_SUM = "COR1_SUM"
    PROP2_STAR_MIN = "PROP2_STAR_MIN"
    PROP3_JOIN = "PROP3_JOIN"
    COR2_UNICYCLIC = "COR2_UNICYCLIC"
    COR3_BICYCLIC = "COR3_BICYCLIC"
    PROP4_DEGDIST = "PROP4_DEGDIST"
    WIENER_LOWER = "WIENER_LOWER"
    PROP5_ZAGREB = "PROP5_ZAGREB"
    AVG_ECC_UPPER = "AVG_ECC_UPPER"


UPPER_BOUNDS = {BoundId.PROP1_UPPER, BoundId.PROP5_ZAGREB, BoundId.AVG_ECC_UPPER}


@dataclass(frozen=True)
class BoundReport:
    bound: BoundId
    applicable: bool
    bound_value: int | Fraction | None
    xi_value: int | None
    holds: bool | None
    tight: bool | None
    extremal_class_member: bool | None
    notes: str = ""

    @property
    def status(self) -> str:
        if not self.applicable:
            return "N/A"
        if not self.holds:
            return "VIOLATED"
        return "TIGHT" if self.tight else "STRICT"


class _Context:
    """Invariants of one graph, computed once and shared by all bounds."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.m = g.m
        self.profile = eccentricity_profile(g)
        self.report: InvariantReport = invariant_report(g)
        self.degrees = g.degrees()

    @property
    def xi(self) -> int:
        return self.report.xi


def _na(bound: BoundId, why: str) -> BoundReport:
    return BoundReport(bound, False, None, None, None, None, None, why)


def _compare(bound: BoundId, value, xi: int, member, notes: str = "") -> BoundReport:
    holds = xi <= value if bound in UPPER_BOUNDS else xi >= value
    if isinstance(value, Fraction) and value.denominator == 1:
        value = value.numerator
    return BoundReport(bound, True, value, xi, holds, xi == value, member, notes)


def is_star(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and (g.n == 1 or max(g.degrees()) == g.n - 1)


def is_complete(g: Graph) -> bool:
    return g.m == comb(g.n, 2)


def complete_minus_matching_k(g: Graph) -> int | None:
    """k if ``g`` is K_n minus k independent edges, else None."""
    n = g.n
    missing = [n - 1 - d for d in g.degrees()]
    if any(x not in (0, 1) for x in missing):
        return None
    # every vertex misses at most one other, so the non-edges form a matching
    return sum(missing) // 2


def is_p4(g: Graph) -> bool:
    return g.n == 4 and g.m == 3 and sorted(g.degrees()) == [1, 1, 2, 2]


def in_join_family(g: Graph, profile=None) -> bool:
    """Exactly a_{n,m} universal vertices and eccentricity two everywhere else."""
    n, m = g.n, g.m
    if not (n - 1 <= m < comb(n, 2)):
        return False
    profile = profile or eccentricity_profile(g)
    universal = [u for u in range(n) if len(g.adj[u]) == n - 1]
    if len(universal) != a_nm(n, m):
        return False
    return all(profile.ecc[u] == 2 for u in range(n) if len(g.adj[u]) != n - 1)


def _prop1_lower(c: _Context) -> BoundReport:
    member = c.profile.self_centered
    return _compare(BoundId.PROP1_LOWER, 2 * c.m * c.profile.radius, c.xi, member,
                    "self-centered" if member else "")


def _prop1_upper(c: _Context) -> BoundReport:
    member = c.profile.self_centered
    return _compare(BoundId.PROP1_UPPER, 2 * c.m * c.profile.diameter, c.xi, member,
                    "self-centered" if member else "")


def _cor1_sum(c: _Context) -> BoundReport:
    bid = BoundId.COR1_SUM
    if c.n < 4:
        return _na(bid, "needs n >= 4")
    comp = complement(c.g)
    if not is_connected(comp):
        return _na(bid, "complement is disconnected")
    comp_prof = eccentricity_profile(comp)
    total = c.xi + eccentric_connectivity_index(comp)
    member = (c.profile.self_centered and c.profile.radius == 2
              and comp_prof.self_centered and comp_prof.radius == 2)
    return _compare(bid, 2 * c.n * (c.n - 1), total, member,
                    "G and complement self-centered, radius 2" if member else "")


def _prop2(c: _Context) -> BoundReport:
    bid = BoundId.PROP2_STAR_MIN
    if c.n < 3:
        return _na(bid, "needs n >= 3")
    if c.n == 3:
        # both connected 3-vertex graphs, S_3 and K_3, attain 3(n-1)
        return _compare(bid, 3 * (c.n - 1), c.xi, True, "S_3" if c.m == 2 else "K_3")
    member = is_star(c.g)
    return _compare(bid, 3 * (c.n - 1), c.xi, member, f"S_{c.n}" if member else "")


def _prop3(c: _Context) -> BoundReport:
    bid = BoundId.PROP3_JOIN
    if not (c.n - 1 <= c.m < comb(c.n, 2)):
        return _na(bid, "needs n-1 <= m < C(n,2)")
    a = a_nm(c.n, c.m)
    member = in_join_family(c.g, c.profile)
    return _compare(bid, 4 * c.m - a * (c.n - 1), c.xi, member,
                    f"G({c.n},{c.m}) with a={a}" if member else f"a={a}")


def _cor2(c: _Context) -> BoundReport:
    bid = BoundId.COR2_UNICYCLIC
    if c.m != c.n or c.n < 4:
        return _na(bid, "needs a unicyclic graph with n >= 4")
    member = max(c.degrees) == c.n - 1
    return _compare(bid, 3 * c.n + 1, c.xi, member, "S_n + e" if member else "")


def _cor3(c: _Context) -> BoundReport:
    bid = BoundId.COR3_BICYCLIC
    if c.m != c.n + 1 or c.n < 5:
        return _na(bid, "needs a bicyclic graph with n >= 5")
    member = max(c.degrees) == c.n - 1
    return _compare(bid, 3 * c.n + 5, c.xi, member, "S_n + 2e" if member else "")


def _prop4(c: _Context) -> BoundReport:
    bid = BoundId.PROP4_DEGDIST
    if c.n < 2:
        return _na(bid, "needs n >= 2")
    member = is_complete(c.g)
    return _compare(bid, Fraction(c.report.degree_distance, c.n - 1), c.xi, member,
                    f"K_{c.n}" if member else "")


def _wiener(c: _Context) -> BoundReport:
    bid = BoundId.WIENER_LOWER
    if c.n < 2:
        return _na(bid, "needs n >= 2")
    member = is_complete(c.g)
    value = Fraction(2 * c.report.min_degree * c.report.wiener, c.n - 1)
    return _compare(bid, value, c.xi, member, f"K_{c.n}" if member else "")


def _prop5(c: _Context) -> BoundReport:
    bid = BoundId.PROP5_ZAGREB
    if c.n < 3:
        return _na(bid, "needs n >= 3")
    k = complete_minus_matching_k(c.g)
    if k is not None:
        member, notes = True, f"K_{c.n}" if k == 0 else f"K_{c.n}-{k}e"
    elif is_p4(c.g):
        member, notes = True, "P_4"
    else:
        member, notes = False, ""
    return _compare(bid, 2 * c.n * c.m - c.report.zagreb1, c.xi, member, notes)


def avg_ecc_upper_value(n: int, min_degree: int, max_degree: int) -> Fraction:
    """(9n/(4(delta+1)) + 15/4) * Delta * n over the common denominator 4(delta+1)."""
    return Fraction((9 * n + 15 * (min_degree + 1)) * max_degree * n, 4 * (min_degree + 1))


def _avg_ecc(c: _Context) -> BoundReport:
    bid = BoundId.AVG_ECC_UPPER
    if c.n < 2:
        return _na(bid, "needs n >= 2")
    value = avg_ecc_upper_value(c.n, c.report.min_degree, c.report.max_degree)
    return _compare(bid, value, c.xi, None, "no equality characterization")


_CHECKS = {
    BoundId.PROP1_LOWER: _prop1_lower,
    BoundId.PROP1_UPPER: _prop1_upper,
    BoundId.COR1_SUM: _cor1_sum,
    BoundId.PROP2_STAR_MIN: _prop2,
    BoundId.PROP3_JOIN: _prop3,
    BoundId.COR2_UNICYCLIC: _cor2,
    BoundId.COR3_BICYCLIC: _cor3,
    BoundId.PROP4_DEGDIST: _prop4,
    BoundId.WIENER_LOWER: _wiener,
    BoundId.PROP5_ZAGREB: _prop5,
    BoundId.AVG_ECC_UPPER: _avg_ecc,
}


def check_bound(g: Graph, bound: BoundId | str) -> BoundReport:
    bound = BoundId(bound)
    return _CHECKS[bound](_Context(g))


def check_all_bounds(g: Graph) -> list[BoundReport]:
    ctx = _Context(g)
    return [_CHECKS[b](ctx) for b in BoundId]
