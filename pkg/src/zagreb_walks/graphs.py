"""Undirected multigraphs, directed multigraphs, and structural predicates.

Vertices are the integers ``0 .. n-1``.  Edges are stored as a sorted tuple
so that two structures with the same edge multiset compare equal.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Union

from .matrices import RationalMatrix


class GraphFormatError(ValueError):
    """Raised when an edge-list document or edge set is malformed."""


@dataclass(frozen=True)
class Graph:
    """Undirected loop-free multigraph; repeated pairs are parallel edges."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u} in undirected graph")
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise GraphFormatError(f"vertex {x} out of range for n={self.n}")
            normalized.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    directed = False

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` listed once per incident edge."""
        out = []
        for x, y in self.edges:
            if x == v:
                out.append(y)
            elif y == v:
                out.append(x)
        return out

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)


@dataclass(frozen=True)
class Digraph:
    """Directed multigraph; loops ``(v, v)`` are allowed."""

    n: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        for u, v in self.arcs:
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise GraphFormatError(f"vertex {x} out of range for n={self.n}")
        object.__setattr__(self, "arcs", tuple(sorted((int(u), int(v)) for u, v in self.arcs)))

    directed = True

    @property
    def m(self) -> int:
        return len(self.arcs)


AnyGraph = Union[Graph, Digraph]


@dataclass(frozen=True)
class GraphClassFlags:
    connected: bool
    tree: bool
    forest: bool
    bipartite: bool
    complete_bipartite: bool
    regular: bool
    chemical: bool


# --- text format -----------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: {what} {token!r} is not an integer") from None
    if value < 0:
        raise GraphFormatError(f"line {lineno}: negative {what} {value}")
    return value


def parse_graph(text: str) -> AnyGraph:
    """Parse the edge-list format.

    The first content line is ``undirected <n> <m>`` or ``directed <n> <m>``,
    followed by exactly ``m`` lines ``<u> <v>``.  ``#`` comments and blank
    lines are skipped.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty document")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] not in ("undirected", "directed"):
        raise GraphFormatError(f"line {lineno}: bad header {header!r}")
    n = _parse_int(parts[1], lineno, "vertex count")
    m = _parse_int(parts[2], lineno, "edge count")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}")
    pairs = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected '<u> <v>', got {line!r}")
        u, v = (_parse_int(t, lineno, "vertex") for t in tokens)
        if u >= n or v >= n:
            raise GraphFormatError(f"line {lineno}: vertex index out of range for n={n}")
        pairs.append((u, v))
    if parts[0] == "directed":
        return Digraph(n, tuple(pairs))
    return Graph(n, tuple(pairs))


def format_graph(g: AnyGraph) -> str:
    """Render ``g`` in the edge-list format (inverse of :func:`parse_graph`)."""
    kind = "directed" if g.directed else "undirected"
    pairs = g.arcs if g.directed else g.edges
    lines = [f"{kind} {g.n} {len(pairs)}"]
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"


# --- degree data -----------------------------------------------------------


def degree_sequence(g: Graph) -> tuple[int, ...]:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return tuple(deg)


def degree_sum_sequence(g: Graph) -> tuple[int, ...]:
    """S_i: sum of neighbor degrees, one term per incident edge."""
    deg = degree_sequence(g)
    sums = [0] * g.n
    for u, v in g.edges:
        sums[u] += deg[v]
        sums[v] += deg[u]
    return tuple(sums)


def in_out_degrees(d: Digraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(din, dout)``; a loop adds one to each."""
    din = [0] * d.n
    dout = [0] * d.n
    for u, v in d.arcs:
        dout[u] += 1
        din[v] += 1
    return tuple(din), tuple(dout)


def is_degree_balanced(d: Digraph) -> bool:
    din, dout = in_out_degrees(d)
    return din == dout


# --- structure ---------------------------------------------------------------


def _components(n: int, edges) -> list[int]:
    """Component label (smallest vertex of the component) for each vertex."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    label = [-1] * n
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = s
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if label[y] < 0:
                    label[y] = s
                    queue.append(y)
    return label


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring by BFS, or None if ``g`` has an odd cycle."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_connected(g: AnyGraph) -> bool:
    """Connectivity of the underlying undirected structure; n=0 counts as connected."""
    pairs = g.arcs if g.directed else g.edges
    return len(set(_components(g.n, pairs))) <= 1


def _is_complete_bipartite(g: Graph, simple: bool) -> bool:
    if not simple or g.n < 2:
        return False
    # K_{a,b} with a, b >= 1 is connected, so a single BFS coloring decides the sides
    color = two_coloring(g)
    if color is None or len(set(_components(g.n, g.edges))) != 1:
        return False
    left = color.count(0)
    return g.m == left * (g.n - left)


def classify(g: Graph) -> GraphClassFlags:
    simple = g.is_simple()
    comps = _components(g.n, g.edges)
    n_comp = len(set(comps))
    connected = n_comp <= 1
    forest = simple and g.m == g.n - n_comp
    deg = degree_sequence(g)
    return GraphClassFlags(
        connected=connected,
        tree=forest and connected and g.n >= 1,
        forest=forest,
        bipartite=two_coloring(g) is not None,
        complete_bipartite=_is_complete_bipartite(g, simple),
        regular=len(set(deg)) <= 1,
        chemical=simple and max(deg, default=0) <= 4,
    )


def subdivision(g: Graph) -> Graph:
    """Replace every edge ``{u, v}`` by a path ``u - x - v`` through a new vertex."""
    edges = []
    for i, (u, v) in enumerate(g.edges):
        x = g.n + i
        edges.append((u, x))
        edges.append((x, v))
    return Graph(g.n + g.m, tuple(edges))


def adjacency_matrix(g: AnyGraph) -> RationalMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    if g.directed:
        for u, v in g.arcs:
            rows[u][v] += 1
    else:
        for u, v in g.edges:
            rows[u][v] += 1
            rows[v][u] += 1
    return RationalMatrix.from_integers(rows)


# --- common structures used throughout tests and scripts ---------------------


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def edge_multiset(g: AnyGraph) -> Counter:
    return Counter(g.arcs if g.directed else g.edges)
