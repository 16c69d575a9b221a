"""First and second Zagreb indices and their walk-count identities."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, degree_sequence
from .walks import walk_profile


@dataclass(frozen=True)
class ZagrebValues:
    m1: int
    m2: int
    n: int
    m: int


@dataclass(frozen=True)
class WalkIdentityReport:
    m1_eq_w2: bool
    two_m2_eq_w3: bool
    w0_eq_n: bool
    w1_eq_2m: bool

    @property
    def all_hold(self) -> bool:
        return self.m1_eq_w2 and self.two_m2_eq_w3 and self.w0_eq_n and self.w1_eq_2m


def _require_undirected(g) -> None:
    if not isinstance(g, Graph):
        raise TypeError("Zagreb indices are defined for undirected graphs only")


def zagreb(g: Graph) -> ZagrebValues:
    """M1 = sum of squared degrees, M2 = sum over the edge multiset of d_x*d_y."""
    _require_undirected(g)
    deg = degree_sequence(g)
    m1 = sum(d * d for d in deg)
    m2 = sum(deg[u] * deg[v] for u, v in g.edges)
    return ZagrebValues(m1=m1, m2=m2, n=g.n, m=g.m)


def verify_walk_identities(g: Graph) -> WalkIdentityReport:
    _require_undirected(g)
    z = zagreb(g)
    w = [walk_profile(g, k).total for k in range(4)]
    return WalkIdentityReport(
        m1_eq_w2=z.m1 == w[2],
        two_m2_eq_w3=2 * z.m2 == w[3],
        w0_eq_n=w[0] == g.n,
        w1_eq_2m=w[1] == 2 * g.m,
    )
