"""Counting k-step walks that start or end at each vertex.

:func:`walk_profile` reads the counts off row and column sums of ``A**k``.
:func:`walk_profile_oracle` is an independent check: it pushes a count
vector along the edge list ``k`` times and never forms a matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import AnyGraph, adjacency_matrix
from .matrices import power


@dataclass(frozen=True)
class WalkProfile:
    k: int
    starting: tuple[int, ...]
    ending: tuple[int, ...]
    total: int

    def __post_init__(self):
        if sum(self.starting) != self.total or sum(self.ending) != self.total:
            raise ValueError("walk totals are inconsistent")


def _profile_from_power(k: int, ak) -> WalkProfile:
    # adjacency powers are integral
    rows = ak.integer_rows()
    starting = tuple(map(sum, rows))
    ending = tuple(map(sum, zip(*rows)))
    return WalkProfile(k, starting, ending, sum(starting))


def walk_profile(g: AnyGraph, k: int) -> WalkProfile:
    if k < 0:
        raise ValueError("walk length must be nonnegative")
    return _profile_from_power(k, power(adjacency_matrix(g), k))


def walk_profiles(g: AnyGraph, kmax: int) -> list[WalkProfile]:
    """Profiles for every length ``0..kmax`` from successive powers of ``A``."""
    if kmax < 0:
        raise ValueError("walk length must be nonnegative")
    a = adjacency_matrix(g)
    ak = power(a, 0)
    out = [_profile_from_power(0, ak)]
    for k in range(1, kmax + 1):
        ak = ak @ a
        out.append(_profile_from_power(k, ak))
    return out


def _directed_pairs(g: AnyGraph) -> list[tuple[int, int]]:
    if g.directed:
        return list(g.arcs)
    return [p for u, v in g.edges for p in ((u, v), (v, u))]


def walk_profile_oracle(g: AnyGraph, k: int) -> WalkProfile:
    return walk_profiles_oracle(g, k)[k]


def walk_profiles_oracle(g: AnyGraph, kmax: int) -> list[WalkProfile]:
    if kmax < 0:
        raise ValueError("walk length must be nonnegative")
    pairs = _directed_pairs(g)
    # start[v]: walks of the current length starting at v; end[v]: ending at v
    start = [1] * g.n
    end = [1] * g.n
    out = [WalkProfile(0, tuple(start), tuple(end), g.n)]
    for k in range(1, kmax + 1):
        nxt_start = [0] * g.n
        nxt_end = [0] * g.n
        for u, v in pairs:
            nxt_start[u] += start[v]
            nxt_end[v] += end[u]
        start, end = nxt_start, nxt_end
        out.append(WalkProfile(k, tuple(start), tuple(end), sum(start)))
    return out

