"""Resolving sets, metric dimension and the resolving polynomial.

A landmark set ``W`` resolves a graph when the distance vectors
``(d(v, w) for w in W)`` are pairwise distinct.  The resolving polynomial
counts resolving sets by size: ``r_i`` is the number of resolving ``i``-sets.

Ground truth here is exhaustive enumeration.  The closed-form coefficient
expressions for ``Gamma(D_2p^2)`` are evaluated by
:func:`formula_resolving_coefficients`; the expression for the middle
coefficients has a free index ``i`` and an unspecified choice of split
``k = k1 + k2``, so every reading listed in :data:`INTERPRETATIONS` is
evaluated and compared, never trusted.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .errors import BudgetExceededError, InvalidArgumentError, InvalidParameterError
from .graph_core import Graph, IntersectionGraph, VertexClass, require_connected, twin_classes
from .group_core import Reflection, RotationCyclic, is_prime

DEFAULT_MAX_ENUM_BITS = 24


class ProfileSource(enum.Enum):
    BRUTE_FORCE = "brute_force"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class ResolvingProfile:
    """Metric dimension and coefficients ``r_beta .. r_N``."""

    beta: int
    coefficients: dict[int, int]
    order: int
    source: ProfileSource
    label: str | None = None
    notes: tuple[str, ...] = field(default=())

    def sequence(self) -> list[int]:
        return [self.coefficients[i] for i in range(self.beta, self.order + 1)]

    def check(self) -> None:
        """Structural invariants of a brute-force profile."""
        N = self.order
        if sorted(self.coefficients) != list(range(self.beta, N + 1)):
            raise AssertionError("coefficients must cover exactly [beta, N]")
        if any(c <= 0 for c in self.coefficients.values()):
            raise AssertionError("a coefficient at or above beta is zero")
        if any(c > comb(N, i) for i, c in self.coefficients.items()):
            raise AssertionError("coefficient exceeds number of subsets")
        if self.coefficients[N] != 1:
            raise AssertionError("r_N != 1")
        if N >= 2 and self.coefficients.get(N - 1) != N:
            raise AssertionError("r_(N-1) != N")


# ---------------------------------------------------------------------------
# representations


def _check_landmarks(g: Graph, landmarks: Iterable[int]) -> list[int]:
    ws = list(landmarks)
    for w in ws:
        if not isinstance(w, int) or not 0 <= w < g.order:
            raise InvalidArgumentError(f"landmark {w!r} is not a vertex")
    if len(set(ws)) != len(ws):
        raise InvalidArgumentError("repeated landmark")
    return ws


def representation(g: Graph, v: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    dist = require_connected(g).dist
    return tuple(dist[v][w] for w in _check_landmarks(g, landmarks))


def _resolves(dist, order: int, ws: Sequence[int]) -> bool:
    seen = set()
    for v in range(order):
        row = dist[v]
        key = tuple(row[w] for w in ws)
        if key in seen:
            return False
        seen.add(key)
    return True


def is_resolving(g: Graph, landmarks: Iterable[int]) -> bool:
    """Do the landmarks give every vertex a distinct distance vector?"""
    ws = _check_landmarks(g, landmarks)
    if not ws:
        return g.order <= 1
    return _resolves(require_connected(g).dist, g.order, ws)


# ---------------------------------------------------------------------------
# metric dimension


def twin_lower_bound(g: Graph) -> int:
    """Sum of ``|U| - 1`` over maximal twin classes ``U``."""
    return sum(len(block) - 1 for block in twin_classes(g))


def standard_resolving_set(g: IntersectionGraph) -> list[int]:
    """Each reflection class minus ``<s r^i>``, plus ``<r^p>``; size ``p^2 - p + 1``."""
    p = g.require_prime_square()
    drop = {g.index_of(Reflection(i)) for i in range(1, p + 1)}
    ws = [v for v in g.class_members(VertexClass.REFLECTION) if v not in drop]
    ws.append(g.index_of(RotationCyclic(p)))
    return sorted(ws)


@dataclass(frozen=True)
class MetricDimensionCertificate:
    beta: int
    basis: tuple[int, ...]
    lower_bound: int
    method: str

    def describe(self, labels: Sequence[str] | None = None) -> str:
        names = [labels[v] for v in self.basis] if labels else [str(v) for v in self.basis]
        if self.method == "twin-bound":
            why = f"twin lower bound {self.lower_bound} attained by a resolving set"
        else:
            why = f"exhaustive search above twin lower bound {self.lower_bound}"
        return f"beta = {self.beta} ({why}): {{{', '.join(names)}}}"


def _twin_transversals(blocks: list[list[int]]):
    """Sets taking all but one vertex from each twin class."""
    multi = [b for b in blocks if len(b) > 1]
    for omitted in itertools.product(*multi):
        yield sorted(v for b, o in zip(multi, omitted) for v in b if v != o)


def metric_dimension_certificate(
    g: Graph, max_enum_bits: int = DEFAULT_MAX_ENUM_BITS
) -> MetricDimensionCertificate:
    """Exact metric dimension with a witness basis.

    Any resolving set holds at least ``|U| - 1`` vertices of every twin class
    ``U``, so the size-``L`` candidates (``L`` the twin bound) are exactly the
    twin transversals; if none resolves, sizes above ``L`` are searched
    exhaustively among sets satisfying the same constraint.
    """
    dist = require_connected(g).dist
    N = g.order
    if N <= 1:
        return MetricDimensionCertificate(0, (), 0, "twin-bound")
    blocks = twin_classes(g)
    L = sum(len(b) - 1 for b in blocks)
    budget = 1 << max_enum_bits
    spent = 0

    first: list[list[int]] = []
    if isinstance(g, IntersectionGraph) and g.p is not None:
        first.append(standard_resolving_set(g))
    for ws in itertools.chain(first, _twin_transversals(blocks)):
        if len(ws) != L:
            continue
        spent += 1
        if spent > budget:
            raise BudgetExceededError(f"more than 2^{max_enum_bits} candidate sets at size {L}")
        if _resolves(dist, N, ws):
            return MetricDimensionCertificate(L, tuple(ws), L, "twin-bound")

    need = [(set(b), len(b) - 1) for b in blocks if len(b) > 1]
    for size in range(L + 1, N + 1):
        for ws in itertools.combinations(range(N), size):
            spent += 1
            if spent > budget:
                raise BudgetExceededError(
                    f"exact search refused: more than 2^{max_enum_bits} candidate sets"
                )
            chosen = set(ws)
            if any(len(b & chosen) < m for b, m in need):
                continue
            if _resolves(dist, N, ws):
                return MetricDimensionCertificate(size, tuple(ws), L, "exhaustive")
    raise AssertionError("the full vertex set always resolves")


def metric_dimension(g: Graph, max_enum_bits: int = DEFAULT_MAX_ENUM_BITS) -> int:
    return metric_dimension_certificate(g, max_enum_bits).beta


# ---------------------------------------------------------------------------
# resolving polynomial


def resolving_polynomial(
    g: Graph, max_enum_bits: int = DEFAULT_MAX_ENUM_BITS, check_upward: bool = True
) -> ResolvingProfile:
    """Count resolving sets of every size by testing all ``2^N`` subsets.

    With ``check_upward`` each one-vertex extension of a resolving set is
    confirmed to resolve, which also cross-checks the enumeration.
    """
    dist = require_connected(g).dist
    N = g.order
    if N > max_enum_bits:
        raise BudgetExceededError(
            f"2^{N} subsets exceeds the 2^{max_enum_bits} budget; use metric_dimension instead"
        )
    counts: dict[int, int] = {}
    previous: set[int] = set()
    for size in range(N + 1):
        current: set[int] = set()
        count = 0
        for ws in itertools.combinations(range(N), size):
            ok = _resolves(dist, N, ws) if ws else N <= 1
            if ok:
                count += 1
                if check_upward:
                    current.add(sum(1 << w for w in ws))
        if check_upward:
            for mask in previous:
                for v in range(N):
                    if not mask >> v & 1 and mask | 1 << v not in current:
                        raise AssertionError("a superset of a resolving set does not resolve")
            previous = current
        if count:
            counts[size] = count
    beta = min(counts)
    profile = ResolvingProfile(beta, counts, N, ProfileSource.BRUTE_FORCE)
    profile.check()
    return profile


# ---------------------------------------------------------------------------
# closed-form coefficients for Gamma(D_2p^2)


def _c(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


@dataclass(frozen=True)
class Interpretation:
    """A reading of the coefficient expressions.

    ``i_range`` fixes the free index in the ``q`` terms: ``"1..q"`` and
    ``"0..q"`` sum over that range, ``"q"`` takes the single term ``i = q``.
    ``split`` picks the decompositions ``k = k1 + k2``: ``"all"`` sums over
    unordered splits with ``k1 >= k2``, ``"balanced"`` uses only
    ``k1 = ceil(k/2)``.
    """

    i_range: str
    split: str

    @property
    def label(self) -> str:
        return f"i={self.i_range};split={self.split}"


INTERPRETATIONS = tuple(
    Interpretation(i_range, split)
    for i_range in ("1..q", "q", "0..q")
    for split in ("all", "balanced")
)


def _q_coefficient(p: int, q: int, i_range: str) -> int:
    P = _c(p, p - 1)
    fixed = _c(p, q) * P ** (p - q) * 2 + _c(p, q - 1) * P ** (p - q + 1)

    def varying(i: int) -> int:
        return (
            _c(p, q - i) * P ** (p - q + i) * 2 * _c(p, i)
            + _c(p, q - 1 - i) * P ** (p - q + 1 + i) * _c(p, i)
        )

    if i_range == "1..q":
        return fixed + sum(varying(i) for i in range(1, q + 1))
    if i_range == "0..q":
        return fixed + sum(varying(i) for i in range(0, q + 1))
    if i_range == "q":
        return fixed + varying(q)
    raise ValueError(i_range)


def _split_terms(p: int, k1: int, k2: int) -> int:
    P = _c(p, p - 1)
    t1 = _c(p, k1) * P ** (p - k1) * 2 * _c(p, k2)
    t2 = _c(p, k2) * P ** (p - k2) * 2 * _c(p, k1)
    t3 = _c(p, k1 - 1) * P ** (p - k1 + 1) * _c(p, k2)
    t4 = _c(p, k1) * P ** (p - k1) * _c(p, k2 - 1)
    t5 = _c(p, k2 - 1) * P ** (p - k2 + 1) * _c(p, k1)
    t6 = _c(p, k2) * P ** (p - k2) * _c(p, k1 - 1)
    if k1 == k2:
        return t1 + t3 + t4
    if k1 - 1 == k2:
        return t1 + t2 + t3 + t4 + t5
    if k1 == k2 - 1:
        return t1 + t2 + t3 + t4 + t6
    return t1 + t2 + t3 + t4 + t5 + t6


def _k_coefficient(p: int, k: int, split: str) -> int:
    if split == "all":
        pairs = [(k1, k - k1) for k1 in range(1, p + 1) if 1 <= k - k1 <= k1]
    elif split == "balanced":
        pairs = [((k + 1) // 2, k // 2)]
    else:
        raise ValueError(split)
    return sum(_split_terms(p, k1, k2) for k1, k2 in pairs)


def formula_resolving_coefficients(p: int) -> list[ResolvingProfile]:
    """Closed-form coefficients for ``Gamma(D_2p^2)``, one profile per interpretation.

    ``r_beta = 2 p^p``, ``r_(beta+2p) = p^2 + p + 1`` and ``r_(beta+2p+1) = 1``
    are common to all readings.  The value ``p^2 + p + 1`` at ``N - 1``
    contradicts ``r_(N-1) = N``; that conflict is recorded in ``notes``.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidParameterError(f"p must be a prime, got {p!r}")
    beta = p * p - p + 1
    N = p * p + p + 2
    notes = (
        f"r_{beta + 2 * p} = p^2+p+1 = {p * p + p + 1} conflicts with r_(N-1) = N = {N}",
    )
    profiles = []
    for interp in INTERPRETATIONS:
        coeffs = {beta: 2 * p**p}
        for q in range(1, p + 1):
            coeffs[beta + q] = _q_coefficient(p, q, interp.i_range)
        for k in range(p + 1, 2 * p):
            coeffs[beta + k] = _k_coefficient(p, k, interp.split)
        coeffs[beta + 2 * p] = p * p + p + 1
        coeffs[beta + 2 * p + 1] = 1
        profiles.append(
            ResolvingProfile(beta, coeffs, N, ProfileSource.CLOSED_FORM, interp.label, notes)
        )
    return profiles


@dataclass(frozen=True)
class ComparisonRow:
    size: int
    brute_force: int
    formula: dict[str, int]

    @property
    def agree(self) -> dict[str, bool]:
        return {label: value == self.brute_force for label, value in self.formula.items()}


@dataclass(frozen=True)
class ResolvingComparison:
    p: int
    brute_force: ResolvingProfile
    formulas: tuple[ResolvingProfile, ...]
    rows: tuple[ComparisonRow, ...]

    def agreement_counts(self) -> dict[str, int]:
        return {
            prof.label: sum(row.agree[prof.label] for row in self.rows) for prof in self.formulas
        }

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "beta": self.brute_force.beta,
            "order": self.brute_force.order,
            "interpretations": [prof.label for prof in self.formulas],
            "notes": list(self.formulas[0].notes) if self.formulas else [],
            "rows": [
                {
                    "size": row.size,
                    "brute_force": row.brute_force,
                    "formula": row.formula,
                    "agree": row.agree,
                }
                for row in self.rows
            ],
        }


def compare_resolving(
    p: int, max_enum_bits: int = DEFAULT_MAX_ENUM_BITS, graph: Graph | None = None
) -> ResolvingComparison:
    """Brute-force coefficients against every closed-form interpretation."""
    from .graph_core import build_graph

    if not isinstance(p, int) or not is_prime(p):
        raise InvalidParameterError(f"p must be a prime, got {p!r}")
    g = graph if graph is not None else build_graph(p * p)
    brute = resolving_polynomial(g, max_enum_bits)
    formulas = tuple(formula_resolving_coefficients(p))
    sizes = sorted(set(brute.coefficients).union(*(f.coefficients for f in formulas)))
    rows = tuple(
        ComparisonRow(
            size,
            brute.coefficients.get(size, 0),
            {f.label: f.coefficients.get(size, 0) for f in formulas},
        )
        for size in sizes
    )
    return ResolvingComparison(p, brute, formulas, rows)


def swap_twin(landmarks: Iterable[int], u: int, v: int) -> list[int]:
    """Replace ``u`` by ``v`` in a landmark set."""
    ws = set(landmarks)
    ws.discard(u)
    ws.add(v)
    return sorted(ws)
