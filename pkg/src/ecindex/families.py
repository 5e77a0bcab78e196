"""Named graph families and closed-form eccentric connectivity values.

Each family is addressed by a :class:`FamilySpec`: a tag plus integer
parameters. :func:`build_family` constructs a member and
:func:`closed_form_xi` evaluates the known formula for it, so the two can be
checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .errors import DomainError, UnsupportedFormError
from .graph import Graph, from_edge_list

# tag -> (parameter names, defaults for trailing optional parameters)
FAMILY_PARAMS: dict[str, tuple[tuple[str, ...], tuple[int, ...]]] = {
    "path": (("n",), ()),
    "star": (("n",), ()),
    "cycle": (("n",), ()),
    "complete": (("n",), ()),
    "complete-bipartite": (("r", "s"), ()),
    "complete-minus-matching": (("n", "k"), ()),
    "star-plus-edges": (("n", "t", "adjacent"), (1,)),
    "join-extremal": (("n", "m"), ()),
    "tree-diam-min": (("n", "d", "j"), (0,)),
    "tree-pend-max": (("n", "p", "a"), (1,)),
    "path-plus-pendant": (("n", "i"), ()),
    "double-star": (("n", "a"), ()),
}


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.tag not in FAMILY_PARAMS:
            raise DomainError(f"unknown family tag {self.tag!r}; known: {', '.join(FAMILY_PARAMS)}")
        names, defaults = FAMILY_PARAMS[self.tag]
        params = tuple(int(p) for p in self.params)
        required = len(names) - len(defaults)
        if not required <= len(params) <= len(names):
            raise DomainError(f"{self.tag} takes parameters ({', '.join(names)}), got {len(params)} values")
        params = params + defaults[len(params) - required:]
        object.__setattr__(self, "params", params)

    @property
    def values(self) -> dict[str, int]:
        return dict(zip(FAMILY_PARAMS[self.tag][0], self.params))

    def __str__(self):
        return f"{self.tag}({', '.join(f'{k}={v}' for k, v in self.values.items())})"


def family(tag: str, *params: int) -> FamilySpec:
    return FamilySpec(tag, tuple(params))


def _require(condition: bool, spec: FamilySpec, constraint: str) -> None:
    if not condition:
        raise DomainError(f"{spec}: violates {constraint}")


def a_nm(n: int, m: int) -> int:
    """Largest a with 2m >= a(n-1) + a(n-a), for n-1 <= m < C(n,2)."""
    if not (n - 1 <= m < comb(n, 2)):
        raise DomainError(f"a_nm needs n-1 <= m < C(n,2); got n={n}, m={m}")
    a = 1
    while 2 * m >= (a + 1) * (n - 1) + (a + 1) * (n - a - 1):
        a += 1
    return a


def a_nm_radical(n: int, m: int) -> int:
    """floor((2n-1 - sqrt((2n-1)^2 - 8m)) / 2) evaluated with integer square roots."""
    if not (n - 1 <= m < comb(n, 2)):
        raise DomainError(f"a_nm needs n-1 <= m < C(n,2); got n={n}, m={m}")
    disc = (2 * n - 1) ** 2 - 8 * m
    root = isqrt(disc)
    if root * root == disc:
        return (2 * n - 1 - root) // 2
    # root < sqrt(disc) < root + 1
    return (2 * n - 2 - root) // 2


def _path_edges(vertices):
    return list(zip(vertices, vertices[1:]))


def _family_edges(spec: FamilySpec) -> tuple[int, list[tuple[int, int]]]:
    """Check the parameters and return (n, edge list) of the member."""
    tag, p = spec.tag, spec.values
    if tag == "path":
        n = p["n"]
        _require(n >= 1, spec, "n >= 1")
        return n, _path_edges(range(n))
    if tag == "star":
        n = p["n"]
        _require(n >= 1, spec, "n >= 1")
        return n, [(0, v) for v in range(1, n)]
    if tag == "cycle":
        n = p["n"]
        _require(n >= 3, spec, "n >= 3")
        return n, _path_edges(range(n)) + [(n - 1, 0)]
    if tag == "complete":
        n = p["n"]
        _require(n >= 1, spec, "n >= 1")
        return n, [(u, v) for u in range(n) for v in range(u + 1, n)]
    if tag == "complete-bipartite":
        r, s = p["r"], p["s"]
        _require(r >= 1 and s >= 1, spec, "r, s >= 1")
        return r + s, [(u, r + v) for u in range(r) for v in range(s)]
    if tag == "complete-minus-matching":
        n, k = p["n"], p["k"]
        _require(n >= 1, spec, "n >= 1")
        _require(0 <= k <= n // 2, spec, "0 <= k <= floor(n/2)")
        _require(not (n == 2 and k == 1), spec, "connectivity (K_2 - e is disconnected)")
        removed = {(2 * i, 2 * i + 1) for i in range(k)}
        return n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in removed]
    if tag == "star-plus-edges":
        n, t, adjacent = p["n"], p["t"], p["adjacent"]
        _require(t in (1, 2), spec, "t in {1, 2}")
        _require(n >= 4 if t == 1 else n >= 5, spec, "n >= 4 for t=1, n >= 5 for t=2")
        _require(adjacent in (0, 1), spec, "adjacent in {0, 1}")
        extra = [(1, 2)]
        if t == 2:
            extra.append((2, 3) if adjacent else (3, 4))
        return n, [(0, v) for v in range(1, n)] + extra
    if tag == "join-extremal":
        n, m = p["n"], p["m"]
        _require(n - 1 <= m < comb(n, 2), spec, "n-1 <= m < C(n,2)")
        a = a_nm(n, m)
        edges = [(u, v) for u in range(a) for v in range(u + 1, n)]
        rest = m - len(edges)
        h_pairs = [(u, v) for u in range(a, n) for v in range(u + 1, n)]
        return n, edges + h_pairs[:rest]
    if tag == "tree-diam-min":
        n, d, j = p["n"], p["d"], p["j"]
        _require(2 <= d <= n - 2, spec, "2 <= d <= n-2")
        extra = n - d - 1
        lo, hi = d // 2, (d + 1) // 2
        if lo == hi:
            j = extra
        _require(0 <= j <= extra, spec, "0 <= j <= n-d-1")
        edges = _path_edges(range(d + 1))
        edges += [(lo, d + 1 + i) for i in range(j)]
        edges += [(hi, d + 1 + i) for i in range(j, extra)]
        return n, edges
    if tag == "tree-pend-max":
        n, pend, a = p["n"], p["p"], p["a"]
        _require(2 <= pend <= n - 2, spec, "2 <= p <= n-2")
        _require(1 <= a <= pend // 2, spec, "1 <= a <= floor(p/2)")
        spine = n - pend
        edges = _path_edges(range(spine))
        edges += [(0, spine + i) for i in range(a)]
        edges += [(spine - 1, spine + i) for i in range(a, pend)]
        return n, edges
    if tag == "path-plus-pendant":
        n, i = p["n"], p["i"]
        _require(1 <= i <= (n - 2) // 2, spec, "1 <= i <= floor((n-2)/2)")
        return n, _path_edges(range(n - 1)) + [(i, n - 1)]
    if tag == "double-star":
        n, a = p["n"], p["a"]
        _require(1 <= a <= (n - 2) // 2, spec, "1 <= a <= floor((n-2)/2)")
        edges = [(0, 1)] + [(0, 2 + i) for i in range(a)] + [(1, v) for v in range(2 + a, n)]
        return n, edges
    raise DomainError(f"unknown family tag {tag!r}")


def build_family(spec: FamilySpec) -> Graph:
    return from_edge_list(*_family_edges(spec))


def path_xi(n: int) -> int:
    return (3 * (n - 1) ** 2 + 1) // 2


def closed_form_xi(spec: FamilySpec) -> int:
    """Formula value of the eccentric connectivity index for ``spec``."""
    _family_edges(spec)  # validates the domain
    tag, p = spec.tag, spec.values
    if tag == "path":
        return path_xi(p["n"])
    if tag == "star":
        n = p["n"]
        if n < 3:
            raise UnsupportedFormError(f"{spec}: the star formula 3(n-1) needs n >= 3")
        return 3 * (n - 1)
    if tag == "cycle":
        n = p["n"]
        return 2 * n * (n // 2)
    if tag == "complete":
        n = p["n"]
        return n * (n - 1)
    if tag == "complete-bipartite":
        r, s = p["r"], p["s"]
        if r < 2 or s < 2:
            raise UnsupportedFormError(f"{spec}: the formula 4rs needs r, s >= 2")
        return 4 * r * s
    if tag == "complete-minus-matching":
        n, k = p["n"], p["k"]
        m = comb(n, 2) - k
        zagreb = (n - 2 * k) * (n - 1) ** 2 + 2 * k * (n - 2) ** 2
        return 2 * n * m - zagreb
    if tag == "star-plus-edges":
        n = p["n"]
        return 3 * n + 1 if p["t"] == 1 else 3 * n + 5
    if tag == "join-extremal":
        n, m = p["n"], p["m"]
        a = a_nm(n, m)
        if m != comb(a, 2) + a * (n - a):
            raise UnsupportedFormError(f"{spec}: no closed form when H has edges")
        return 4 * m - a * (n - 1)
    if tag == "tree-diam-min":
        n, d = p["n"], p["d"]
        return (3 * d * d + 1) // 2 + (n - d - 1) * (1 + 2 * ((d + 1) // 2))
    if tag == "tree-pend-max":
        n, pend = p["n"], p["p"]
        return path_xi(n - pend + 2) + (pend - 2) * (2 * n - 2 * pend + 1)
    if tag == "path-plus-pendant":
        n, i = p["n"], p["i"]
        if i == 1:
            return 3 * (n - 1) ** 2 // 2 - n
        if i == 2:
            return 3 * (n - 1) ** 2 // 2 - n - 2
        raise UnsupportedFormError(f"{spec}: closed form known only for i in {{1, 2}}")
    if tag == "double-star":
        return 5 * p["n"] - 6
    raise UnsupportedFormError(f"no closed form for {tag!r}")


def tree_diam_min_floor_variant(n: int, d: int) -> int:
    """The minimum as printed with floor(d/2) in the pendent term.

    Disagrees with the true minimum for every odd d; kept to demonstrate that.
    """
    return (3 * d * d + 1) // 2 + (n - d - 1) * (1 + 2 * (d // 2))


def family_members(tag: str, n: int, k: int | None = None) -> list[FamilySpec]:
    """All parameter choices spanning one isomorphism-closed family.

    ``tree-diam-min`` takes ``k = d``, ``tree-pend-max`` takes ``k = p``.
    Members may repeat up to isomorphism (e.g. j and n-d-1-j).
    """
    if tag == "tree-diam-min":
        d = k
        if d % 2 == 0:
            return [family(tag, n, d, 0)]
        return [family(tag, n, d, j) for j in range(n - d)]
    if tag == "tree-pend-max":
        return [family(tag, n, k, a) for a in range(1, k // 2 + 1)]
    if tag == "double-star":
        return [family(tag, n, a) for a in range(1, (n - 2) // 2 + 1)]
    raise DomainError(f"family_members does not support {tag!r}")


def family_size(tag: str, n: int, k: int | None = None) -> int:
    """Number of pairwise non-isomorphic members of the family."""
    if tag == "tree-diam-min":
        d = k
        if d is None or not 2 <= d <= n - 2:
            raise DomainError(f"tree-diam-min needs 2 <= d <= n-2; got n={n}, d={d}")
        return 1 if d % 2 == 0 else (n - d + 1) // 2
    if tag == "tree-pend-max":
        pend = k
        if pend is None or not 2 <= pend <= n - 2:
            raise DomainError(f"tree-pend-max needs 2 <= p <= n-2; got n={n}, p={pend}")
        return pend // 2
    if tag == "double-star":
        if n < 4:
            raise DomainError(f"double stars need n >= 4; got n={n}")
        return (n - 2) // 2
    raise DomainError(f"family_size does not support {tag!r}")
