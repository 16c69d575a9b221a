"""Similarly / conversely ordered vector pairs and discrete Chebyshev sums.

Two tuples ``a`` and ``b`` are similarly ordered when
``(a[i] - a[k]) * (b[i] - b[k]) >= 0`` for every index pair, and conversely
ordered when every such product is ``<= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Number = Fraction | int


@dataclass(frozen=True)
class OrderingVerdict:
    similarly: bool
    conversely: bool
    # first (i, k) in lexicographic order breaking the named relation
    similarly_witness: Optional[tuple[int, int]] = None
    conversely_witness: Optional[tuple[int, int]] = None

    @property
    def witness(self) -> Optional[tuple[int, int]]:
        """Violating pair for the first relation that fails, if any."""
        return self.similarly_witness or self.conversely_witness

    @property
    def direction(self) -> str:
        """``le``, ``ge``, ``both`` or ``none``: which Chebyshev bound applies."""
        if self.similarly and self.conversely:
            return "both"
        if self.similarly:
            return "le"
        if self.conversely:
            return "ge"
        return "none"


@dataclass(frozen=True)
class ChebyshevReport:
    lhs: Fraction
    rhs: Fraction
    direction: str
    holds: bool
    equality: bool


def _check_lengths(*vectors: Sequence) -> None:
    if len({len(v) for v in vectors}) > 1:
        raise ValueError("vectors must have equal length")


def ordering_relation(a: Sequence[Number], b: Sequence[Number]) -> OrderingVerdict:
    """Pairwise O(n^2) decision with deterministic witnesses."""
    _check_lengths(a, b)
    n = len(a)
    sim_w = con_w = None
    for i in range(n):
        for k in range(i + 1, n):
            prod = (a[i] - a[k]) * (b[i] - b[k])
            if prod < 0 and sim_w is None:
                sim_w = (i, k)
            elif prod > 0 and con_w is None:
                con_w = (i, k)
        if sim_w is not None and con_w is not None:
            break
    return OrderingVerdict(sim_w is None, con_w is None, sim_w, con_w)


def similarly_ordered_by_sort(a: Sequence[Number], b: Sequence[Number]) -> bool:
    """Sort-based decision: is there one permutation making both nonincreasing?

    Sorting by ``(-a, -b)`` makes ``a`` nonincreasing and breaks ties in the
    most favorable way for ``b``; the pair is similarly ordered iff ``b`` is
    then nonincreasing too.
    """
    _check_lengths(a, b)
    order = sorted(range(len(a)), key=lambda i: (-a[i], -b[i]))
    bs = [b[i] for i in order]
    return all(x >= y for x, y in zip(bs, bs[1:]))


def _report(lhs: Fraction, rhs: Fraction, direction: str) -> ChebyshevReport:
    if direction == "le":
        holds = lhs <= rhs
    elif direction == "ge":
        holds = lhs >= rhs
    elif direction == "both":
        holds = lhs == rhs
    else:
        holds = True
    return ChebyshevReport(Fraction(lhs), Fraction(rhs), direction, holds, lhs == rhs)


def chebyshev_weighted(
    a: Sequence[Number], b: Sequence[Number], p: Sequence[Number]
) -> ChebyshevReport:
    """Compare ``(sum p a)(sum p b)`` against ``(sum p)(sum p a b)``.

    ``direction`` is ``le`` for similarly ordered pairs, ``ge`` for
    conversely ordered ones, ``both`` when both apply (forcing equality)
    and ``none`` otherwise, in which case ``holds`` is vacuously true.
    """
    _check_lengths(a, b, p)
    if any(w < 0 for w in p):
        raise ValueError("weights must be nonnegative")
    sp = sum(p, Fraction(0))
    spa = sum((w * x for w, x in zip(p, a)), Fraction(0))
    spb = sum((w * y for w, y in zip(p, b)), Fraction(0))
    spab = sum((w * x * y for w, x, y in zip(p, a, b)), Fraction(0))
    return _report(spa * spb, sp * spab, ordering_relation(a, b).direction)


def chebyshev_unweighted(a: Sequence[Number], b: Sequence[Number]) -> ChebyshevReport:
    return chebyshev_weighted(a, b, [1] * len(a))


def chebyshev_power(
    a: Sequence[Number], b: Sequence[Number], p: Sequence[Number], r: int
) -> ChebyshevReport:
    """Weighted inequality for the powered tuples ``a**r`` and ``b**r``.

    The direction comes from the ordering of the powered tuples, and the
    right-hand side uses ``(a_i b_i)**r``, which equals ``a_i**r * b_i**r``.
    """
    _check_lengths(a, b, p)
    if r < 0 and any(x == 0 for x in (*a, *b)):
        raise ZeroDivisionError("zero entry raised to a negative power")
    ar = [Fraction(x) ** r for x in a]
    br = [Fraction(y) ** r for y in b]
    if any(w < 0 for w in p):
        raise ValueError("weights must be nonnegative")
    sp = sum(p, Fraction(0))
    lhs = sum((w * x for w, x in zip(p, ar)), Fraction(0)) * sum(
        (w * y for w, y in zip(p, br)), Fraction(0)
    )
    rhs = sp * sum((w * (Fraction(x) * y) ** r for w, x, y in zip(p, a, b)), Fraction(0))
    return _report(lhs, rhs, ordering_relation(ar, br).direction)


def weighted_means(a: Sequence[Number], b: Sequence[Number], p: Sequence[Number]):
    """``(mean_p(a) * mean_p(b), mean_p(a*b))`` for nonzero weights ``p``."""
    _check_lengths(a, b, p)
    sp = sum(p, Fraction(0))
    if sp == 0:
        raise ZeroDivisionError("weights sum to zero")
    mean = lambda xs: sum((w * x for w, x in zip(p, xs)), Fraction(0)) / sp  # noqa: E731
    return mean(a) * mean(b), mean([x * y for x, y in zip(a, b)])
