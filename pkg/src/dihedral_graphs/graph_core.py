"""Intersection graphs of subgroups and their structural invariants.

Graphs are stored as one neighbor bitmask per vertex.  :class:`Graph` is a
plain simple graph (used for fixtures and re-imported exports);
:class:`IntersectionGraph` adds the group parameter, the subgroup labels and,
when ``n = p**2``, the vertex classes:

* ``REFLECTION`` with index ``i`` in ``[1, p]``: ``<s r^j>`` with ``j = i mod p``,
* ``DIHEDRAL`` with index ``i``: ``<r^p, s r^i>``,
* ``ROTATION``: ``<r>`` and ``<r^p>``.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import search
from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    InvalidArgumentError,
    InvalidParameterError,
    UnsupportedParameterError,
)
from .group_core import (
    DihedralSub,
    Reflection,
    RotationCyclic,
    Subgroup,
    enumerate_subgroups,
    intersect_nontrivially,
    prime_square_root,
)

DEFAULT_MAX_VERTICES = 40
UNREACHABLE = -1


class _Infinite:
    """Diameter/eccentricity of a disconnected graph."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    __str__ = __repr__


INFINITE = _Infinite()


class VertexClass(enum.Enum):
    REFLECTION = "reflection"
    DIHEDRAL = "dihedral"
    ROTATION = "rotation"


@dataclass(frozen=True)
class VertexTag:
    cls: VertexClass
    index: int | None = None

    def __str__(self) -> str:
        if self.cls is VertexClass.REFLECTION:
            return f"H_{self.index}"
        if self.cls is VertexClass.DIHEDRAL:
            return f"H_p^{self.index}"
        return "H_1,p"


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; ``UNREACHABLE`` marks disconnected pairs."""

    dist: tuple[tuple[int, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.dist[u][v]

    def __len__(self) -> int:
        return len(self.dist)

    @property
    def connected(self) -> bool:
        return all(d != UNREACHABLE for row in self.dist for d in row)


class Graph:
    """Simple undirected graph on vertices ``0..order-1``."""

    def __init__(self, nbr: Sequence[int]):
        self.nbr: tuple[int, ...] = tuple(nbr)
        order = len(self.nbr)
        for v, m in enumerate(self.nbr):
            if m >> v & 1:
                raise InvalidArgumentError(f"loop at vertex {v}")
            if m >> order:
                raise InvalidArgumentError(f"vertex {v} has out-of-range neighbors")
            for u in _bits(m):
                if not self.nbr[u] >> v & 1:
                    raise InvalidArgumentError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbr = [0] * order
        for u, v in edges:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        return cls(nbr)

    @property
    def order(self) -> int:
        return len(self.nbr)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.nbr[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.order) for v in _bits(self.nbr[u]) if v > u]

    def adjacency_matrix(self) -> list[list[bool]]:
        return [[self.adjacent(u, v) for v in range(self.order)] for u in range(self.order)]

    @cached_property
    def distances(self) -> DistanceMatrix:
        rows = []
        for src in range(self.order):
            row = [UNREACHABLE] * self.order
            row[src] = 0
            queue = deque([src])
            while queue:
                u = queue.popleft()
                for w in _bits(self.nbr[u]):
                    if row[w] == UNREACHABLE:
                        row[w] = row[u] + 1
                        queue.append(w)
            rows.append(tuple(row))
        return DistanceMatrix(tuple(rows))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(
            len(vs), [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        )


class IntersectionGraph(Graph):
    """Intersection graph of the proper nontrivial subgroups of D_2n."""

    def __init__(self, n: int, vertices: Sequence[Subgroup], nbr: Sequence[int]):
        super().__init__(nbr)
        self.n = n
        self.p = prime_square_root(n)
        self.vertices: tuple[Subgroup, ...] = tuple(vertices)
        self.vertex_class: tuple[VertexTag | None, ...] = tuple(
            _classify(sub, self.p) for sub in self.vertices
        )

    def labels(self) -> list[str]:
        return [sub.label for sub in self.vertices]

    def index_of(self, kind) -> int:
        for v, sub in enumerate(self.vertices):
            if sub.kind == kind:
                return v
        raise InvalidArgumentError(f"no vertex {kind!r}")

    def class_members(self, cls: VertexClass, index: int | None = None) -> list[int]:
        return [
            v
            for v, tag in enumerate(self.vertex_class)
            if tag is not None and tag.cls is cls and (index is None or tag.index == index)
        ]

    def require_prime_square(self) -> int:
        if self.p is None:
            raise UnsupportedParameterError(f"n={self.n} is not the square of a prime")
        return self.p


def _classify(sub: Subgroup, p: int | None) -> VertexTag | None:
    if p is None:
        return None
    kind = sub.kind
    if isinstance(kind, Reflection):
        return VertexTag(VertexClass.REFLECTION, (kind.i - 1) % p + 1)
    if isinstance(kind, DihedralSub):
        return VertexTag(VertexClass.DIHEDRAL, kind.i)
    if isinstance(kind, RotationCyclic):
        return VertexTag(VertexClass.ROTATION)
    raise AssertionError(kind)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(n: int) -> IntersectionGraph:
    """Intersection graph of D_2n, vertices in enumeration order."""
    subs = enumerate_subgroups(n)
    nbr = [0] * len(subs)
    for u in range(len(subs)):
        for v in range(u + 1, len(subs)):
            if intersect_nontrivially(subs[u], subs[v]):
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
    return IntersectionGraph(n, subs, nbr)


# ---------------------------------------------------------------------------
# invariants


def _check_vertex(g: Graph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < g.order:
        raise IndexError(f"vertex {v!r} out of range for order {g.order}")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return bin(g.nbr[v]).count("1")


def degrees(g: Graph) -> list[int]:
    return [degree(g, v) for v in range(g.order)]


def distance_matrix(g: Graph) -> DistanceMatrix:
    return g.distances


def eccentricity(g: Graph, v: int):
    """Largest distance from ``v``, or ``INFINITE`` if some vertex is unreachable."""
    _check_vertex(g, v)
    row = g.distances.dist[v]
    if UNREACHABLE in row:
        return INFINITE
    return max(row)


def diameter(g: Graph):
    if not g.distances.connected:
        return INFINITE
    return max((max(row) for row in g.distances.dist), default=0)


def require_connected(g: Graph) -> DistanceMatrix:
    d = g.distances
    if not d.connected:
        raise DisconnectedGraphError("graph is disconnected")
    return d


def _check_budget(g: Graph, max_vertices: int) -> None:
    if g.order > max_vertices:
        raise BudgetExceededError(
            f"exact search refused: {g.order} vertices exceeds budget {max_vertices}"
        )


def maximum_independent_set(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[int]:
    _check_budget(g, max_vertices)
    return list(_bits(search.max_independent_set(g.nbr)))


def maximum_clique(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[int]:
    _check_budget(g, max_vertices)
    return list(_bits(search.max_clique(g.nbr)))


def independence_number(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    return len(maximum_independent_set(g, max_vertices))


def clique_number(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    return len(maximum_clique(g, max_vertices))


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return not any(g.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def split_partition(g: IntersectionGraph) -> tuple[frozenset[int], frozenset[int]]:
    """``(dihedral + rotation vertices, reflection vertices)``, verified.

    Raises ``AssertionError`` if the first part is not a clique or the second
    is not independent.
    """
    g.require_prime_square()
    clique_part = frozenset(
        g.class_members(VertexClass.DIHEDRAL) + g.class_members(VertexClass.ROTATION)
    )
    independent_part = frozenset(g.class_members(VertexClass.REFLECTION))
    if len(clique_part) + len(independent_part) != g.order:
        raise AssertionError("split parts do not cover the vertex set")
    if not is_clique(g, sorted(clique_part)):
        raise AssertionError("clique part is not complete")
    if not is_independent(g, sorted(independent_part)):
        raise AssertionError("independent part has an internal edge")
    return clique_part, independent_part


def star_check(g: IntersectionGraph, i: int) -> bool:
    """Does ``H_i`` plus ``<r^p, s r^i>`` induce a star centred on the latter with p leaves?"""
    p = g.require_prime_square()
    if not isinstance(i, int) or not 1 <= i <= p:
        raise InvalidParameterError(f"class index must lie in [1, {p}], got {i!r}")
    leaves = g.class_members(VertexClass.REFLECTION, i)
    (center,) = g.class_members(VertexClass.DIHEDRAL, i)
    if len(leaves) != p:
        return False
    return all(g.adjacent(center, u) for u in leaves) and is_independent(g, leaves)


def are_twins(g: Graph, u: int, v: int) -> bool:
    """Equal open neighborhoods or equal closed neighborhoods."""
    if u == v:
        return False
    bu, bv = 1 << u, 1 << v
    return g.nbr[u] & ~bv == g.nbr[v] & ~bu


def twin_classes(g: Graph) -> list[list[int]]:
    """Partition of V into maximal twin sets, blocks ordered by smallest member."""
    blocks: list[list[int]] = []
    for v in range(g.order):
        for block in blocks:
            if are_twins(g, block[0], v):
                block.append(v)
                break
        else:
            blocks.append([v])
    for block in blocks:
        for a in range(len(block)):
            for b in range(a + 1, len(block)):
                if not are_twins(g, block[a], block[b]):
                    raise AssertionError("twin relation is not transitive")
    return blocks
