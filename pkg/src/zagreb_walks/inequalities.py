"""Exact checkers for the walk-count and entry-sum inequalities.

Every checker returns the two sides as exact rationals together with the
direction licensed by the ordering hypothesis.  ``holds`` is computed, not
assumed: when the hypothesis applies it must come out true, and the test
suite treats anything else as a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .graphs import AnyGraph, Digraph, Graph, classify, degree_sequence, degree_sum_sequence
from .graphs import is_degree_balanced
from .indices import zagreb
from .matrices import RationalMatrix, col_sums, entry_sum, is_sum_symmetric, power, row_sums
from .orderings import ordering_relation
from .walks import walk_profile


class PreconditionError(ValueError):
    """The input does not satisfy the checker's hypothesis."""


@dataclass(frozen=True)
class InequalityReport:
    applicable: str  # le | ge | both | none
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    detail: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class ZagrebReport:
    m1_over_n: Fraction
    m2_over_m: Fraction
    hypothesis_similarly_ordered: bool
    holds: bool
    equality: bool
    equality_class: str  # regular | complete_bipartite | both | other | not_applicable
    detail: dict[str, Any] = field(default_factory=dict)


def _verdict(lhs, rhs, applicable: str) -> bool:
    if applicable == "le":
        return lhs <= rhs
    if applicable == "ge":
        return lhs >= rhs
    if applicable == "both":
        return lhs == rhs
    return True


def _ordered_report(lhs, rhs, a, b, names: tuple[str, str], extra=None) -> InequalityReport:
    verdict = ordering_relation(a, b)
    applicable = verdict.direction
    detail = {
        names[0]: list(a),
        names[1]: list(b),
        "similarly_ordered": verdict.similarly,
        "conversely_ordered": verdict.conversely,
        "ordering_witness": verdict.witness,
    }
    if extra:
        detail.update(extra)
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return InequalityReport(applicable, lhs, rhs, _verdict(lhs, rhs, applicable), lhs == rhs, detail)


def matrix_power_inequality(a: RationalMatrix, k: int, l: int) -> InequalityReport:
    """``S(A^k) S(A^l)`` versus ``n S(A^(k+l))``, ordered by ``c^[k]`` and ``r^[l]``."""
    if k < 0 or l < 0:
        raise ValueError("exponents must be nonnegative")
    ak, al = power(a, k), power(a, l)
    lhs = entry_sum(ak) * entry_sum(al)
    rhs = a.n * entry_sum(ak @ al)
    return _ordered_report(lhs, rhs, col_sums(ak), row_sums(al), ("col_sums_k", "row_sums_l"))


def digraph_walk_inequality(g: AnyGraph, k: int, l: int) -> InequalityReport:
    """``w_k w_l`` versus ``n w_(k+l)``, ordered by ``e_k`` and ``s_l``."""
    if k < 0 or l < 0:
        raise ValueError("walk lengths must be nonnegative")
    pk, pl, pkl = walk_profile(g, k), walk_profile(g, l), walk_profile(g, k + l)
    extra = {"w_k": pk.total, "w_l": pl.total, "w_k_plus_l": pkl.total}
    return _ordered_report(
        pk.total * pl.total, g.n * pkl.total, pk.ending, pl.starting, ("ending_k", "starting_l"), extra
    )


def zagreb_inequality(g: Graph) -> ZagrebReport:
    """Exact comparison of ``M1/n`` and ``M2/m``.

    The verdict is reported whether or not ``(d_i)`` and ``(S_i)`` are
    similarly ordered; only in the ordered case is it guaranteed.
    """
    if not isinstance(g, Graph):
        raise TypeError("Zagreb indices are defined for undirected graphs only")
    if g.m == 0:
        raise PreconditionError("M2/m is undefined for an edgeless graph")
    z = zagreb(g)
    left, right = Fraction(z.m1, z.n), Fraction(z.m2, z.m)
    deg, sums = degree_sequence(g), degree_sum_sequence(g)
    verdict = ordering_relation(deg, sums)
    equality = left == right
    flags = classify(g)
    if not equality or not flags.connected:
        eq_class = "not_applicable"
    elif flags.regular and flags.complete_bipartite:
        eq_class = "both"
    elif flags.regular:
        eq_class = "regular"
    elif flags.complete_bipartite:
        eq_class = "complete_bipartite"
    else:
        eq_class = "other"
    detail = {
        "m1": z.m1,
        "m2": z.m2,
        "n": z.n,
        "m": z.m,
        "degrees": list(deg),
        "degree_sums": list(sums),
        "ordering_witness": verdict.similarly_witness,
        "connected": flags.connected,
    }
    return ZagrebReport(left, right, verdict.similarly, left <= right, equality, eq_class, detail)


def sum_symmetric_inequality(a: RationalMatrix) -> InequalityReport:
    """``S(A)^2 <= n S(A^2)`` for sum-symmetric ``A``, with the Cauchy-route values."""
    if not is_sum_symmetric(a):
        raise PreconditionError("matrix is not sum-symmetric")
    lhs = entry_sum(a) ** 2
    rhs = a.n * entry_sum(a @ a)
    r = row_sums(a)
    cauchy_lhs = sum(r, Fraction(0)) ** 2
    cauchy_rhs = a.n * sum((x * x for x in r), Fraction(0))
    detail = {
        "row_sums": list(r),
        "cauchy_lhs": cauchy_lhs,
        "cauchy_rhs": cauchy_rhs,
        "cauchy_holds": cauchy_lhs <= cauchy_rhs,
    }
    return InequalityReport("le", lhs, rhs, lhs <= rhs, lhs == rhs, detail)


def eulerian_inequality(d: Digraph) -> InequalityReport:
    """``w_1^2 <= n w_2`` on a degree-balanced digraph, plus the ratio form."""
    if not isinstance(d, Digraph):
        raise TypeError("expected a directed graph")
    if not is_degree_balanced(d):
        raise PreconditionError("digraph is not degree-balanced (din != dout somewhere)")
    w0, w1, w2 = (walk_profile(d, k).total for k in range(3))
    lhs, rhs = Fraction(w1 * w1), Fraction(d.n * w2)
    detail: dict[str, Any] = {"w0": w0, "w1": w1, "w2": w2}
    if w0 > 0 and w1 > 0:
        ratio_l, ratio_r = Fraction(w1, w0), Fraction(w2, w1)
        detail.update(ratio_lhs=ratio_l, ratio_rhs=ratio_r, ratio_holds=ratio_l <= ratio_r)
    return InequalityReport("le", lhs, rhs, lhs <= rhs, lhs == rhs, detail)
