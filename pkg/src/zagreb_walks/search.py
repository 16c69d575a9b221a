"""Exhaustive search over labeled simple graphs and digraphs.

Structures are visited by vertex count, then by ascending adjacency code
(see :mod:`zagreb_walks.batch`).  Matching is decided block-wise with the
vectorized engine; every reported witness is re-evaluated with the scalar
exact checkers, and a disagreement between the two routes raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

import numpy as np

from . import batch
from .graphs import AnyGraph, Digraph, Graph, format_graph
from .inequalities import digraph_walk_inequality, zagreb_inequality
from .serialize import to_jsonable

DEFAULT_CAPS = {False: 8, True: 5}

UNDIRECTED_CLASSES = ("connected", "tree", "forest", "bipartite", "chemical")
DIRECTED_CLASSES = ("connected", "degree_balanced")
PREDICATES = ("zagreb_violation", "zagreb_equality", "walk_ineq_violation", "ordering_census")
VIOLATION_PREDICATES = ("zagreb_violation", "walk_ineq_violation")

# flags tallied in SearchResult.summary
_TALLY_UNDIRECTED = (
    "connected", "tree", "forest", "bipartite", "chemical", "regular", "complete_bipartite"
)
_TALLY_DIRECTED = ("connected", "degree_balanced")


class SearchSpecError(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate and what to look for.

    ``class_filter`` is ``"all"`` or one or more class names joined by
    ``"+"`` (a conjunction, e.g. ``"connected+chemical"``).
    """

    directed: bool = False
    min_n: int = 1
    max_n: int = 4
    class_filter: str = "all"
    predicate: str = "zagreb_violation"
    k: int = 1
    l: int = 1
    limit: int = 10
    override_cap: bool = False

    @property
    def classes(self) -> tuple[str, ...]:
        if self.class_filter == "all":
            return ()
        return tuple(self.class_filter.split("+"))

    def validate(self) -> None:
        if not 1 <= self.min_n <= self.max_n:
            raise SearchSpecError(f"need 1 <= min_n <= max_n, got {self.min_n}..{self.max_n}")
        cap = DEFAULT_CAPS[self.directed]
        if self.max_n > cap and not self.override_cap:
            kind = "directed" if self.directed else "undirected"
            raise SearchSpecError(f"max_n={self.max_n} exceeds the {kind} cap {cap}")
        allowed = DIRECTED_CLASSES if self.directed else UNDIRECTED_CLASSES
        for c in self.classes:
            if c not in allowed:
                raise SearchSpecError(f"unknown class {c!r} for this structure type")
        if self.predicate not in PREDICATES:
            raise SearchSpecError(f"unknown predicate {self.predicate!r}")
        if self.directed and self.predicate.startswith("zagreb"):
            raise SearchSpecError("Zagreb predicates need undirected graphs")
        if self.k < 0 or self.l < 0:
            raise SearchSpecError("walk lengths must be nonnegative")
        if self.limit < 0:
            raise SearchSpecError("limit must be nonnegative")


@dataclass
class SearchResult:
    spec: SearchSpec
    examined: int = 0
    matched: int = 0
    witnesses: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return to_jsonable(
            {
                "spec": self.spec,
                "examined": self.examined,
                "matched": self.matched,
                "witnesses": self.witnesses,
                "summary": self.summary,
            }
        )


def structure_from_code(code: int, n: int, directed: bool) -> AnyGraph:
    pairs = tuple(p for e, p in enumerate(batch.vertex_pairs(n, directed)) if code >> e & 1)
    return Digraph(n, pairs) if directed else Graph(n, pairs)


def _acyclic_source(spec: SearchSpec) -> bool:
    return not spec.directed and ("tree" in spec.classes or "forest" in spec.classes)


def _candidate_blocks(n: int, spec: SearchSpec) -> Iterator[np.ndarray]:
    if not _acyclic_source(spec):
        yield from batch.code_blocks(n, spec.directed)
        return
    codes = batch.forest_codes(n)
    if "tree" in spec.classes:
        codes = codes[batch.popcount(codes) == n - 1]
    block = 1 << 16
    for start in range(0, len(codes), block):
        yield codes[start : start + block]


def _filtered_blocks(n: int, spec: SearchSpec):
    """Yield ``(codes, adjacency, flags)`` restricted to ``spec.class_filter``."""
    acyclic = _acyclic_source(spec)
    for codes in _candidate_blocks(n, spec):
        a = batch.adjacency_block(codes, n, spec.directed)
        flags = batch.class_flags(a, spec.directed, acyclic=acyclic)
        keep = np.ones(len(codes), dtype=bool)
        for c in spec.classes:
            keep &= flags[c]
        if not keep.all():
            codes, a = codes[keep], a[keep]
            flags = {name: f[keep] for name, f in flags.items()}
        if len(codes):
            yield codes, a, flags


def enumerate_structures(spec: SearchSpec) -> Iterator[AnyGraph]:
    """Every labeled simple structure in range passing the class filter, in code order."""
    spec.validate()
    for n in range(spec.min_n, spec.max_n + 1):
        for codes, _, _ in _filtered_blocks(n, spec):
            for code in codes.tolist():
                yield structure_from_code(code, n, spec.directed)


def _match_block(a: np.ndarray, spec: SearchSpec, census: dict) -> np.ndarray:
    n = a.shape[1]
    if spec.predicate.startswith("zagreb"):
        z = batch.zagreb_block(a)
        m, m1, m2 = z["m"], z["m1"], z["m2"]
        if spec.predicate == "zagreb_violation":
            return (m >= 1) & (m1 * m > m2 * n)
        return (m >= 1) & (m1 * m == m2 * n)
    k, l = spec.k, spec.l
    kmax = k + l
    dtype = batch.walk_dtype(n, kmax, extra_factor=n)
    starting, ending = batch.walk_vectors(a.astype(dtype), kmax)
    ek, sl = ending[k], starting[l]
    sim, conv = batch.ordering_flags(ek, sl)
    lhs = ek.sum(axis=1) * sl.sum(axis=1)
    rhs = n * starting[kmax].sum(axis=1)
    if spec.predicate == "walk_ineq_violation":
        return (sim & (lhs > rhs)) | (conv & (lhs < rhs))
    for label, mask in (
        ("both", sim & conv),
        ("similarly_only", sim & ~conv),
        ("conversely_only", conv & ~sim),
        ("neither", ~sim & ~conv),
    ):
        census[label] = census.get(label, 0) + int(mask.sum())
    return np.zeros(len(a), dtype=bool)


def _witness(g: AnyGraph, code: int, spec: SearchSpec) -> dict:
    if spec.predicate.startswith("zagreb"):
        report = zagreb_inequality(g)
        scalar_match = (not report.holds) if spec.predicate == "zagreb_violation" else report.equality
    else:
        report = digraph_walk_inequality(g, spec.k, spec.l)
        scalar_match = not report.holds
    if not scalar_match:
        raise RuntimeError(f"batch and scalar evaluation disagree on code {code} (n={g.n})")
    return {"n": g.n, "code": code, "graph": format_graph(g), "report": report}


def run_search(
    spec: SearchSpec, progress: Optional[Callable[[str], None]] = None
) -> SearchResult:
    spec.validate()
    result = SearchResult(spec)
    names = _TALLY_DIRECTED if spec.directed else _TALLY_UNDIRECTED
    classes = {c: {"examined": 0, "matched": 0} for c in names}
    by_n: dict[str, dict] = {}
    census: dict[str, int] = {}
    for n in range(spec.min_n, spec.max_n + 1):
        tally = {"examined": 0, "matched": 0}
        for codes, a, flags in _filtered_blocks(n, spec):
            match = _match_block(a, spec, census)
            tally["examined"] += len(codes)
            tally["matched"] += int(match.sum())
            for c in names:
                classes[c]["examined"] += int(flags[c].sum())
                classes[c]["matched"] += int((flags[c] & match).sum())
            room = spec.limit - len(result.witnesses)
            if room > 0 and match.any():
                for code in codes[match][:room].tolist():
                    g = structure_from_code(code, n, spec.directed)
                    result.witnesses.append(_witness(g, code, spec))
        by_n[str(n)] = tally
        result.examined += tally["examined"]
        result.matched += tally["matched"]
        if progress is not None:
            progress(f"n={n}: examined {tally['examined']}, matched {tally['matched']}")
    result.summary = {"classes": classes, "by_n": by_n}
    if spec.predicate == "ordering_census":
        result.summary["census"] = census
    return result


def smallest_witness(result: SearchResult) -> Optional[dict]:
    """First witness in enumeration order (smallest n, then smallest code)."""
    return result.witnesses[0] if result.witnesses else None
