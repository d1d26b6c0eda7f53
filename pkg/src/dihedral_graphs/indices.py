"""Distance- and degree-based topological indices.

Every oracle is a direct sum over vertices, edges or unordered pairs, in exact
integer/``Fraction`` arithmetic.  :func:`closed_form` evaluates the closed-form
polynomials in ``p`` stated for ``Gamma(D_2p^2)``; :func:`class_count_form`
recomputes each index from the vertex-class census (class sizes, degrees and
pairwise distances by class).  The two disagree for the Schultz and Gutman
indices, whose stated polynomials use degree ``p + 1`` instead of ``2p + 1``
for the dihedral end of each reflection/own-dihedral pair.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import BudgetExceededError, InvalidParameterError
from .graph_core import Graph, build_graph, degrees, eccentricity, require_connected
from .group_core import is_prime


class IndexName(enum.Enum):
    WIENER = "Wiener"
    HYPER_WIENER = "HyperWiener"
    ZAGREB1 = "Zagreb1"
    ZAGREB2 = "Zagreb2"
    SCHULTZ = "Schultz"
    GUTMAN = "Gutman"
    ECCENTRIC_CONNECTIVITY = "EccentricConnectivity"
    EDGE_COUNT = "EdgeCount"


@dataclass(frozen=True)
class IndexReport:
    index_name: IndexName
    oracle_value: Fraction
    formula_value: Fraction | None = None
    matches: bool | None = None

    def __post_init__(self):
        if self.oracle_value.denominator != 1:
            raise AssertionError(f"{self.index_name.value} oracle is not integral")
        if self.formula_value is not None and self.matches != (
            self.oracle_value == self.formula_value
        ):
            raise AssertionError("matches flag inconsistent with values")


def _pairs(g: Graph):
    d = require_connected(g).dist
    for u, v in combinations(range(g.order), 2):
        yield u, v, d[u][v]


# ---------------------------------------------------------------------------
# oracles


def edge_count(g: Graph) -> int:
    return len(g.edges())


def wiener(g: Graph) -> int:
    return sum(d for _, _, d in _pairs(g))


def hyper_wiener(g: Graph) -> int:
    half = Fraction(1, 2)
    total = half * wiener(g) + half * sum(d * d for _, _, d in _pairs(g))
    if total.denominator != 1:
        raise AssertionError("hyper-Wiener index is not integral")
    return int(total)


def zagreb1(g: Graph) -> int:
    return sum(k * k for k in degrees(g))


def zagreb2(g: Graph) -> int:
    deg = degrees(g)
    return sum(deg[u] * deg[v] for u, v in g.edges())


def schultz(g: Graph, method: str = "pairs") -> int:
    """Sum over pairs of ``d(u, v) * (deg u + deg v)``.

    ``method="vertex"`` instead accumulates ``deg(v) * sum_u d(u, v)`` per vertex.
    """
    deg = degrees(g)
    if method == "pairs":
        return sum(d * (deg[u] + deg[v]) for u, v, d in _pairs(g))
    if method == "vertex":
        dist = require_connected(g).dist
        return sum(deg[v] * sum(dist[v]) for v in range(g.order))
    raise ValueError(f"unknown method {method!r}")


def gutman(g: Graph, method: str = "pairs") -> int:
    """Sum over pairs of ``d(u, v) * deg u * deg v``."""
    deg = degrees(g)
    if method == "pairs":
        return sum(d * deg[u] * deg[v] for u, v, d in _pairs(g))
    if method == "vertex":
        dist = require_connected(g).dist
        twice = sum(
            deg[v] * sum(dist[v][u] * deg[u] for u in range(g.order)) for v in range(g.order)
        )
        return twice // 2
    raise ValueError(f"unknown method {method!r}")


def eccentric_connectivity(g: Graph) -> int:
    require_connected(g)
    return sum(k * eccentricity(g, v) for v, k in enumerate(degrees(g)))


ORACLES = {
    IndexName.WIENER: wiener,
    IndexName.HYPER_WIENER: hyper_wiener,
    IndexName.ZAGREB1: zagreb1,
    IndexName.ZAGREB2: zagreb2,
    IndexName.SCHULTZ: schultz,
    IndexName.GUTMAN: gutman,
    IndexName.ECCENTRIC_CONNECTIVITY: eccentric_connectivity,
    IndexName.EDGE_COUNT: edge_count,
}


def oracle(name: IndexName, g: Graph) -> int:
    return ORACLES[name](g)


# ---------------------------------------------------------------------------
# closed forms in p


def _check_p(p: int) -> None:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise InvalidParameterError(f"p must be a prime, got {p!r}")


def _poly(coeffs, p: int) -> Fraction:
    """Evaluate ``sum c_k p^k`` with coefficients from the constant term up."""
    return sum((Fraction(c) * p**k for k, c in enumerate(coeffs)), Fraction(0))


H = Fraction(1, 2)

# coefficients listed from the constant term up
_CLOSED_FORMS = {
    IndexName.EDGE_COUNT: (H * 2, H * 3, H * 3),
    IndexName.WIENER: (H * 2, H * 3, H * 5, H * 3, H * 3),
    IndexName.HYPER_WIENER: (H * 2, H * 3, H * 6, H * 3, H * 6),
    IndexName.ZAGREB1: (2, 5, 7, 4),
    IndexName.ZAGREB2: (1, Fraction(7, 2), Fraction(13, 2), 6, 2),
    IndexName.SCHULTZ: (2, 5, 5, 6, 7),
    IndexName.GUTMAN: (H * 2, H * 7, H * 15, H * 13, H * 15),
    IndexName.ECCENTRIC_CONNECTIVITY: (4, 6, 7),
}


def closed_form(name: IndexName, p: int) -> Fraction:
    """Stated closed form for ``Gamma(D_2p^2)``, evaluated exactly at ``p``."""
    _check_p(p)
    return _poly(_CLOSED_FORMS[name], p)


def class_count_form(name: IndexName, p: int) -> Fraction:
    """Index of ``Gamma(D_2p^2)`` summed over vertex-class pairs.

    Classes: ``p^2`` reflections (degree 1, ``p`` per class ``H_i``), ``p``
    dihedral vertices (degree ``2p + 1``), 2 rotation vertices (degree
    ``p + 1``).  Each group is ``(number of pairs, distance, deg u, deg v)``.
    """
    _check_p(p)
    dr, dd, dc = 1, 2 * p + 1, p + 1
    groups = [
        (p * p, 1, dr, dd),  # reflection - own dihedral
        (comb(p, 2), 1, dd, dd),  # dihedral - dihedral
        (1, 1, dc, dc),  # <r> - <r^p>
        (2 * p, 1, dc, dd),  # rotation - dihedral
        (p * comb(p, 2), 2, dr, dr),  # reflections in one class
        (p * p * (p - 1), 2, dr, dd),  # reflection - other dihedral
        (2 * p * p, 2, dr, dc),  # reflection - rotation
        (p * p * comb(p, 2), 3, dr, dr),  # reflections in different classes
    ]
    if name is IndexName.EDGE_COUNT:
        return Fraction(sum(c for c, d, _, _ in groups if d == 1))
    if name is IndexName.WIENER:
        return Fraction(sum(c * d for c, d, _, _ in groups))
    if name is IndexName.HYPER_WIENER:
        return H * sum(c * d for c, d, _, _ in groups) + H * sum(c * d * d for c, d, _, _ in groups)
    if name is IndexName.ZAGREB1:
        return Fraction(p * p * dr**2 + p * dd**2 + 2 * dc**2)
    if name is IndexName.ZAGREB2:
        return Fraction(sum(c * a * b for c, d, a, b in groups if d == 1))
    if name is IndexName.SCHULTZ:
        return Fraction(sum(c * d * (a + b) for c, d, a, b in groups))
    if name is IndexName.GUTMAN:
        return Fraction(sum(c * d * a * b for c, d, a, b in groups))
    if name is IndexName.ECCENTRIC_CONNECTIVITY:
        return Fraction(p * p * dr * 3 + p * dd * 2 + 2 * dc * 2)
    raise AssertionError(name)


DEFAULT_MAX_N = 49


def verify_indices(p: int, max_n: int = DEFAULT_MAX_N, graph: Graph | None = None) -> list[IndexReport]:
    """Oracle vs stated closed form for every index on ``Gamma(D_2p^2)``."""
    _check_p(p)
    if p * p > max_n:
        raise BudgetExceededError(f"p^2 = {p * p} exceeds budget n <= {max_n}")
    g = graph if graph is not None else build_graph(p * p)
    reports = []
    for name in IndexName:
        value = Fraction(oracle(name, g))
        formula = closed_form(name, p)
        reports.append(IndexReport(name, value, formula, value == formula))
    return reports


def oracle_reports(g: Graph) -> list[IndexReport]:
    """Oracle values only, for graphs without a closed form."""
    return [IndexReport(name, Fraction(oracle(name, g))) for name in IndexName]
