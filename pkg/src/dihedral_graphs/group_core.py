"""The dihedral group D_2n and its proper nontrivial subgroups.

Elements are pairs ``(i, refl)`` standing for ``r^i`` (``refl`` false) or
``s r^i`` (``refl`` true).  Subgroups carry their element sets explicitly,
both as a frozenset and as an integer bitmask over element indices
``i + n * refl``, so intersection tests are plain set operations.

Two enumeration routes are provided:

* :func:`enumerate_subgroups` walks the classification (rotation subgroups
  ``<r^(n/k)>``, reflection subgroups ``<s r^i>``, dihedral subgroups
  ``<r^(n/k), s r^i>``);
* :func:`closure_subgroups_bruteforce` and :func:`closure_subgroups_scan` find
  subgroups without using that classification and serve as test oracles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Union

import numpy as np

from .errors import InvalidArgumentError, InvalidParameterError

__all__ = [
    "DihedralElement",
    "RotationCyclic",
    "Reflection",
    "DihedralSub",
    "SubgroupKind",
    "Subgroup",
    "divisors",
    "tau",
    "sigma",
    "is_prime",
    "prime_square_root",
    "group_elements",
    "element_index",
    "multiply",
    "inverse",
    "enumerate_subgroups",
    "find_subgroup",
    "intersect_nontrivially",
    "is_closed",
    "closure_subgroups_bruteforce",
    "closure_subgroups_scan",
]


# ---------------------------------------------------------------------------
# number theory helpers


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order."""
    if n < 1:
        raise InvalidParameterError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def tau(n: int) -> int:
    return len(divisors(n))


def sigma(n: int) -> int:
    return sum(divisors(n))


def is_prime(p: int) -> bool:
    """Trial division primality test."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_square_root(n: int) -> int | None:
    """Return ``p`` if ``n == p**2`` with ``p`` prime, else ``None``."""
    if n < 4:
        return None
    p = math.isqrt(n)
    if p * p == n and is_prime(p):
        return p
    return None


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise InvalidParameterError(f"D_2n needs an integer n >= 3, got {n!r}")


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class DihedralElement:
    """``r^rotation_exp`` or, when ``is_reflection``, ``s r^rotation_exp``.

    The group order ``n`` is not stored; callers reduce exponents mod n.
    """

    rotation_exp: int
    is_reflection: bool = False

    def label(self) -> str:
        i = self.rotation_exp
        rot = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        if self.is_reflection:
            return "s" if not rot else f"s {rot}"
        return rot or "e"


IDENTITY = DihedralElement(0, False)


def group_elements(n: int) -> list[DihedralElement]:
    """All ``2n`` elements: rotations by exponent, then reflections by exponent."""
    _check_n(n)
    return [DihedralElement(i, False) for i in range(n)] + [
        DihedralElement(i, True) for i in range(n)
    ]


def element_index(x: DihedralElement, n: int) -> int:
    return x.rotation_exp + (n if x.is_reflection else 0)


def multiply(a: DihedralElement, b: DihedralElement, n: int) -> DihedralElement:
    """Product ``a*b`` using ``r s = s r^-1``."""
    i, j = a.rotation_exp, b.rotation_exp
    if not a.is_reflection:
        if not b.is_reflection:
            return DihedralElement((i + j) % n, False)
        # r^i s r^j = s r^(j-i)
        return DihedralElement((j - i) % n, True)
    if not b.is_reflection:
        return DihedralElement((i + j) % n, True)
    # s r^i s r^j = r^(j-i)
    return DihedralElement((j - i) % n, False)


def inverse(a: DihedralElement, n: int) -> DihedralElement:
    if a.is_reflection:
        return a
    return DihedralElement((-a.rotation_exp) % n, False)


# ---------------------------------------------------------------------------
# subgroup kinds


@dataclass(frozen=True)
class RotationCyclic:
    """``<r^(n/k)>``, cyclic of order ``k``; ``k`` divides n and ``k != 1``."""

    k: int

    def order(self) -> int:
        return self.k

    def elements(self, n: int) -> frozenset[DihedralElement]:
        step = n // self.k
        return frozenset(DihedralElement(step * t, False) for t in range(self.k))

    def label(self, n: int) -> str:
        step = n // self.k
        return "<r>" if step == 1 else f"<r^{step}>"

    def name(self) -> str:
        return "rotation_cyclic"


@dataclass(frozen=True)
class Reflection:
    """``<s r^i>`` of order 2 with ``i`` in ``[1, n]`` (``i = n`` is ``<s>``)."""

    i: int

    def order(self) -> int:
        return 2

    def elements(self, n: int) -> frozenset[DihedralElement]:
        return frozenset({IDENTITY, DihedralElement(self.i % n, True)})

    def label(self, n: int) -> str:
        return "<" + DihedralElement(self.i % n, True).label() + ">"

    def name(self) -> str:
        return "reflection"


@dataclass(frozen=True)
class DihedralSub:
    """``<r^(n/k), s r^i>`` of order ``2k``; ``k`` a divisor not in {1, n}, ``i`` in ``[1, n/k]``."""

    k: int
    i: int

    def order(self) -> int:
        return 2 * self.k

    def elements(self, n: int) -> frozenset[DihedralElement]:
        step = n // self.k
        rots = [DihedralElement(step * t, False) for t in range(self.k)]
        refls = [DihedralElement((self.i + step * t) % n, True) for t in range(self.k)]
        return frozenset(rots + refls)

    def label(self, n: int) -> str:
        step = n // self.k
        rot = "r" if step == 1 else f"r^{step}"
        return f"<{rot}, {DihedralElement(self.i % n, True).label()}>"

    def name(self) -> str:
        return "dihedral"


SubgroupKind = Union[RotationCyclic, Reflection, DihedralSub]


@dataclass(frozen=True)
class Subgroup:
    """A classified proper nontrivial subgroup of D_2n with its elements."""

    n: int
    kind: SubgroupKind
    elements: frozenset[DihedralElement] = field(compare=False)
    order: int = field(compare=False)
    mask: int = field(compare=False, repr=False)

    @classmethod
    def from_kind(cls, n: int, kind: SubgroupKind) -> "Subgroup":
        elements = kind.elements(n)
        mask = 0
        for x in elements:
            mask |= 1 << element_index(x, n)
        sub = cls(n=n, kind=kind, elements=elements, order=len(elements), mask=mask)
        if sub.order != kind.order():
            raise AssertionError(f"{kind} materialized {sub.order} elements")
        if not 1 < sub.order < 2 * n:
            raise AssertionError(f"{kind} is not proper and nontrivial")
        return sub

    @property
    def label(self) -> str:
        return self.kind.label(self.n)


def _validate_kind(n: int, kind: SubgroupKind) -> None:
    if isinstance(kind, RotationCyclic):
        ok = kind.k != 1 and n % kind.k == 0
    elif isinstance(kind, Reflection):
        ok = 1 <= kind.i <= n
    elif isinstance(kind, DihedralSub):
        ok = kind.k not in (1, n) and n % kind.k == 0 and 1 <= kind.i <= n // kind.k
    else:
        ok = False
    if not ok:
        raise InvalidParameterError(f"{kind!r} is not a canonical subgroup parameter for n={n}")


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Subgroup, ...]:
    kinds: list[SubgroupKind] = []
    divs = divisors(n)
    kinds += [RotationCyclic(k) for k in divs if k != 1]
    kinds += [Reflection(i) for i in range(1, n + 1)]
    kinds += [DihedralSub(k, i) for k in divs if k not in (1, n) for i in range(1, n // k + 1)]
    for kind in kinds:
        _validate_kind(n, kind)
    return tuple(Subgroup.from_kind(n, kind) for kind in kinds)


def enumerate_subgroups(n: int) -> list[Subgroup]:
    """Every proper nontrivial subgroup of D_2n exactly once.

    Ordered as rotation subgroups by ``k``, reflections by ``i``, then
    dihedral subgroups by ``(k, i)``.  The count is ``tau(n) + sigma(n) - 2``.
    """
    _check_n(n)
    return list(_enumerate(n))


def find_subgroup(n: int, kind: SubgroupKind) -> Subgroup:
    """Look up the enumerated subgroup with the given canonical kind."""
    _validate_kind(n, kind)
    for sub in enumerate_subgroups(n):
        if sub.kind == kind:
            return sub
    raise InvalidParameterError(f"no subgroup {kind!r} for n={n}")


def intersect_nontrivially(h: Subgroup, k: Subgroup) -> bool:
    """True iff ``h`` and ``k`` share a non-identity element."""
    if h.n != k.n:
        raise InvalidArgumentError("subgroups come from different groups")
    if h == k:
        raise InvalidArgumentError(f"self-comparison of {h.label}")
    return bool(h.mask & k.mask & ~1)


# ---------------------------------------------------------------------------
# oracles that do not use the classification


def is_closed(elements: Iterable[DihedralElement], n: int) -> bool:
    """Closed under products and inverses and contains the identity."""
    s = set(elements)
    if IDENTITY not in s:
        return False
    return all(inverse(a, n) in s for a in s) and all(
        multiply(a, b, n) in s for a in s for b in s
    )


def _mult_table(n: int) -> np.ndarray:
    elems = group_elements(n)
    table = np.empty((2 * n, 2 * n), dtype=np.int64)
    for a in elems:
        for b in elems:
            table[element_index(a, n), element_index(b, n)] = element_index(multiply(a, b, n), n)
    return table


def closure_subgroups_bruteforce(n: int) -> set[int]:
    """Bitmasks of all proper nontrivial subgroups, by testing every subset.

    A nonempty finite subset closed under multiplication is a subgroup, so
    the test is just closure.  Limited to ``2n <= 16``.
    """
    _check_n(n)
    size = 2 * n
    if size > 16:
        raise InvalidParameterError(f"subset brute force limited to 2n <= 16, got 2n={size}")
    table = _mult_table(n)
    masks = np.arange(1 << size, dtype=np.int64)
    member = [(masks >> e) & 1 == 1 for e in range(size)]
    closed = masks != 0
    for a in range(size):
        for b in range(size):
            closed &= ~(member[a] & member[b]) | member[int(table[a, b])]
    full = (1 << size) - 1
    return {int(m) for m in masks[closed] if m not in (1, full)}


def closure_subgroups_scan(n: int) -> set[int]:
    """Bitmasks of all proper nontrivial subgroups, by generator extension.

    Starting from the trivial subgroup, repeatedly adjoin one element and take
    the closure.  Every subgroup is reached, since any subgroup is generated
    by adjoining its elements one at a time.
    """
    _check_n(n)
    size = 2 * n
    table = _mult_table(n).tolist()

    def close(gens: set[int]) -> int:
        found = {0} | gens
        frontier = list(found)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(found):
                    for c in (table[a][b], table[b][a]):
                        if c not in found:
                            found.add(c)
                            nxt.append(c)
            frontier = nxt
        mask = 0
        for e in found:
            mask |= 1 << e
        return mask

    seen = {1}
    stack = [1]
    while stack:
        h = stack.pop()
        members = {e for e in range(size) if h >> e & 1}
        for g in range(size):
            if h >> g & 1:
                continue
            m = close(members | {g})
            if m not in seen:
                seen.add(m)
                stack.append(m)
    full = (1 << size) - 1
    return seen - {1, full}
