"""Exact maximum independent set on small graphs given as neighbor bitmasks."""
from __future__ import annotations

from typing import Sequence


def _popcount(x: int) -> int:
    return bin(x).count("1")


def max_independent_set(nbr: Sequence[int], candidates: int | None = None) -> int:
    """Bitmask of a maximum independent set inside ``candidates``.

    Branch and bound.  Vertices of remaining degree 0 or 1 are taken greedily
    (some maximum independent set always contains them); otherwise branch on a
    maximum-degree vertex.  The bound is ``|chosen| + |remaining|``.
    """
    if candidates is None:
        candidates = (1 << len(nbr)) - 1
    best = [0, 0]  # size, mask

    def reduce(chosen: int, rest: int) -> tuple[int, int]:
        changed = True
        while changed and rest:
            changed = False
            r = rest
            while r:
                low = r & -r
                v = low.bit_length() - 1
                r ^= low
                if not rest >> v & 1:
                    continue
                if _popcount(nbr[v] & rest) <= 1:
                    chosen |= low
                    rest &= ~(low | nbr[v])
                    changed = True
        return chosen, rest

    def branch(chosen: int, rest: int) -> None:
        chosen, rest = reduce(chosen, rest)
        size = _popcount(chosen)
        if size + _popcount(rest) <= best[0]:
            return
        if not rest:
            best[0], best[1] = size, chosen
            return
        v, top = -1, -1
        r = rest
        while r:
            low = r & -r
            u = low.bit_length() - 1
            r ^= low
            d = _popcount(nbr[u] & rest)
            if d > top:
                v, top = u, d
        bit = 1 << v
        branch(chosen | bit, rest & ~(bit | nbr[v]))
        branch(chosen, rest & ~bit)

    branch(0, candidates)
    return best[1]


def complement(nbr: Sequence[int]) -> list[int]:
    full = (1 << len(nbr)) - 1
    return [(full & ~m) & ~(1 << v) for v, m in enumerate(nbr)]


def max_clique(nbr: Sequence[int], candidates: int | None = None) -> int:
    return max_independent_set(complement(nbr), candidates)
