"""Vectorized evaluation over blocks of labeled simple graphs or digraphs.

A structure on ``n`` vertices is encoded as an integer whose bit ``e`` marks
the presence of the ``e``-th vertex pair from :func:`vertex_pairs`.  Blocks
of codes are decoded into stacked adjacency matrices and every statistic is
computed with integer numpy arithmetic.  ``int64`` is used only when an a
priori bound shows the values cannot overflow; otherwise the block falls back
to Python-integer object arrays, so results are always exact.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

_INT64_SAFE = 2**62


def vertex_pairs(n: int, directed: bool) -> list[tuple[int, int]]:
    """Pair order defining the code bits: row-major, ``i < j`` when undirected."""
    if directed:
        return [(i, j) for i in range(n) for j in range(n) if i != j]
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def pair_count(n: int, directed: bool) -> int:
    return n * (n - 1) if directed else n * (n - 1) // 2


def code_blocks(n: int, directed: bool, block: int = 1 << 16) -> Iterator[np.ndarray]:
    total = 1 << pair_count(n, directed)
    for start in range(0, total, block):
        yield np.arange(start, min(start + block, total), dtype=np.int64)


def forest_codes(n: int) -> np.ndarray:
    """Sorted codes of every labeled forest on ``n`` vertices.

    Edges are added in code-bit order while a per-vertex component label
    (union-find flattened into an array) rejects any edge closing a cycle.
    """
    codes = np.zeros(1, dtype=np.int64)
    labels = np.arange(n, dtype=np.int8)[None, :]
    for bit, (u, v) in enumerate(vertex_pairs(n, False)):
        ok = labels[:, u] != labels[:, v]
        new_codes = codes[ok] | np.int64(1 << bit)
        new_labels = labels[ok]
        lu = new_labels[:, u][:, None]
        lv = new_labels[:, v][:, None]
        new_labels = np.where(new_labels == lv, lu, new_labels).astype(np.int8)
        codes = np.concatenate([codes, new_codes])
        labels = np.concatenate([labels, new_labels])
    return np.sort(codes)


def popcount(codes: np.ndarray) -> np.ndarray:
    counts = np.zeros(len(codes), dtype=np.int64)
    rest = codes.copy()
    while rest.any():
        counts += rest & 1
        rest >>= 1
    return counts


def decode_bits(codes: np.ndarray, n: int, directed: bool) -> np.ndarray:
    e = pair_count(n, directed)
    shifts = np.arange(e, dtype=np.int64)
    return ((codes[:, None] >> shifts) & 1).astype(np.int64)


def adjacency_block(codes: np.ndarray, n: int, directed: bool, dtype=np.int64) -> np.ndarray:
    bits = decode_bits(codes, n, directed)
    a = np.zeros((len(codes), n, n), dtype=dtype)
    pairs = vertex_pairs(n, directed)
    if pairs:
        us = np.array([p[0] for p in pairs])
        vs = np.array([p[1] for p in pairs])
        a[:, us, vs] = bits
        if not directed:
            a[:, vs, us] = bits
    return a


def _safe_dtype(bound: int):
    return np.int64 if bound < _INT64_SAFE else object


def walk_vectors(a: np.ndarray, kmax: int) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Per-vertex starting and ending walk counts for ``k = 0..kmax`` via ``A^k``.

    Returns ``(starting, ending)``; entry ``k`` has shape ``(batch, n)`` and
    holds the row (resp. column) sums of the ``k``-th matrix power.
    """
    b, n, _ = a.shape
    p = np.broadcast_to(np.eye(n, dtype=a.dtype), a.shape).copy()
    starting, ending = [p.sum(axis=2)], [p.sum(axis=1)]
    for _ in range(kmax):
        p = p @ a
        starting.append(p.sum(axis=2))
        ending.append(p.sum(axis=1))
    return starting, ending


def walk_vectors_by_edges(codes: np.ndarray, n: int, directed: bool, kmax: int, dtype=np.int64):
    """Same counts as :func:`walk_vectors`, by pushing vectors along each edge bit.

    Shares no code with the matrix route: each step adds, for every possible
    pair ``(u, v)`` present in the structure, the count at ``v`` into ``u``.
    """
    bits = decode_bits(codes, n, directed).astype(dtype)
    arcs = []
    for e, (u, v) in enumerate(vertex_pairs(n, directed)):
        arcs.append((e, u, v))
        if not directed:
            arcs.append((e, v, u))
    start = np.ones((len(codes), n), dtype=dtype)
    end = np.ones((len(codes), n), dtype=dtype)
    starting, ending = [start], [end]
    for _ in range(kmax):
        nxt_s = np.zeros_like(start)
        nxt_e = np.zeros_like(end)
        for e, u, v in arcs:
            nxt_s[:, u] += bits[:, e] * start[:, v]
            nxt_e[:, v] += bits[:, e] * end[:, u]
        start, end = nxt_s, nxt_e
        starting.append(start)
        ending.append(end)
    return starting, ending


def walk_dtype(n: int, kmax: int, extra_factor: int = 1):
    """Exact-enough dtype for walk counts of length ``<= kmax`` on ``n`` vertices."""
    return _safe_dtype(extra_factor * n * max(n - 1, 1) ** kmax)


def ordering_flags(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Batched similarly/conversely ordered test over all index pairs."""
    prod = (x[:, :, None] - x[:, None, :]) * (y[:, :, None] - y[:, None, :])
    return (prod >= 0).all(axis=(1, 2)), (prod <= 0).all(axis=(1, 2))


def _pattern_product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """0/1 pattern of ``x @ y`` for 0/1 float matrices (float sums <= n are exact)."""
    return (x @ y > 0.5).astype(np.float64)


def _closure(r: np.ndarray) -> np.ndarray:
    n = r.shape[1]
    steps = max(1, int(np.ceil(np.log2(max(n, 2)))))
    for _ in range(steps):
        r = _pattern_product(r, r)
    return r


def _class_count(rel: np.ndarray) -> np.ndarray:
    """Number of classes of an equivalence relation: vertices with no smaller partner."""
    n = rel.shape[1]
    lower = np.tril(np.ones((n, n), dtype=bool), k=-1)
    return (~((rel > 0.5) & lower).any(axis=2)).sum(axis=1)


def class_flags(a: np.ndarray, directed: bool, acyclic: bool = False) -> dict[str, np.ndarray]:
    """Structural flags for a block of simple structures.

    Undirected: connected, forest, tree, bipartite, chemical, regular,
    complete_bipartite.  Directed: connected (weakly), degree_balanced.
    ``acyclic=True`` promises the block holds forests only, which makes the
    component count ``n - m`` and skips the closure and odd-cycle products.
    """
    b, n, _ = a.shape
    pattern = (a > 0).astype(np.float64)
    if directed:
        sym = np.maximum(pattern, pattern.transpose(0, 2, 1))
        n_comp = _class_count(_closure(np.maximum(sym, np.eye(n))))
        return {
            "connected": n_comp <= 1,
            "degree_balanced": (a.sum(axis=1) == a.sum(axis=2)).all(axis=1),
        }
    deg = a.sum(axis=2)
    m = deg.sum(axis=1) // 2
    if acyclic:
        n_comp = n - m
    else:
        n_comp = _class_count(_closure(np.maximum(pattern, np.eye(n))))
    flags = {"connected": n_comp <= 1}
    flags["forest"] = m == n - n_comp
    flags["tree"] = flags["forest"] & flags["connected"]
    # an odd cycle exists iff some closed walk of odd length <= n exists
    bip = np.ones(b, dtype=bool)
    p = pattern
    for k in range(1, 1 if acyclic else n + 1):
        if k % 2 == 1:
            bip &= np.trace(p, axis1=1, axis2=2) < 0.5
        if k < n:
            p = _pattern_product(p, pattern)
    flags["bipartite"] = bip
    flags["chemical"] = deg.max(axis=1) <= 4
    flags["regular"] = deg.min(axis=1) == deg.max(axis=1)
    # K_{a,b} (a, b >= 1) iff "equal or non-adjacent" is an equivalence with two classes
    rel = 1.0 - pattern
    transitive = (_pattern_product(rel, rel) == rel).all(axis=(1, 2))
    flags["complete_bipartite"] = transitive & (_class_count(rel) == 2)
    return flags


def zagreb_block(a: np.ndarray) -> dict[str, np.ndarray]:
    """M1, M2, n, m and the (d, S) ordering flags for an undirected block."""
    n = a.shape[1]
    deg = a.sum(axis=2)
    s = (a @ deg[:, :, None])[:, :, 0]
    m1 = (deg * deg).sum(axis=1)
    m2 = np.zeros(len(a), dtype=deg.dtype)
    for u, v in vertex_pairs(n, False):
        m2 += a[:, u, v] * deg[:, u] * deg[:, v]
    m = np.triu(a).sum(axis=(1, 2))
    sim, conv = ordering_flags(deg, s)
    return {"m1": m1, "m2": m2, "m": m, "n": np.full(len(a), n), "similarly": sim, "conversely": conv}
