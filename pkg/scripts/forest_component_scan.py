"""Construct forests that violate M1/n <= M2/m by mixing copies of two trees.

n, m, M1 and M2 are additive over components.  Take s copies of tree A and t
copies of tree B and put q(T) = M1(T) m(T) - M2(T) n(T), which is <= 0 for
every tree.  The forest violates the inequality iff

    q(A) s^2 + b s t + q(B) t^2 > 0,   b = M1(A) m(B) + M1(B) m(A) - M2(A) n(B) - M2(B) n(A),

so a violating ratio s/t exists iff b > 0 and b^2 > 4 q(A) q(B).  The scan
runs over all pairs of unlabeled trees up to ``--max-tree`` vertices, finds the
smallest multiplicities for each feasible pair and re-checks the best forest
with the exact scalar checker.  Needs networkx for the unlabeled trees.

    python3 scripts/forest_component_scan.py --max-tree 14
"""

import argparse

import networkx as nx

from zagreb_walks.graphs import Graph, classify
from zagreb_walks.inequalities import zagreb_inequality


def tree_summaries(max_tree):
    """(n, m, M1, M2) -> one edge list realizing it."""
    out = {}
    for n in range(2, max_tree + 1):
        for t in nx.nonisomorphic_trees(n):
            d = dict(t.degree())
            key = (n, n - 1, sum(x * x for x in d.values()), sum(d[u] * d[v] for u, v in t.edges()))
            out.setdefault(key, sorted(t.edges()))
    return out


def smallest_mix(a, b, max_mult):
    qa = a[2] * a[1] - a[3] * a[0]
    qb = b[2] * b[1] - b[3] * b[0]
    mid = a[2] * b[1] + b[2] * a[1] - a[3] * b[0] - b[3] * a[0]
    if mid <= 0 or mid * mid <= 4 * qa * qb:
        return None
    best = None
    for s in range(1, max_mult + 1):
        for t in range(1, max_mult + 1):
            n = s * a[0] + t * b[0]
            if (best is None or n < best[0]) and qa * s * s + mid * s * t + qb * t * t > 0:
                best = (n, s, t)
    return best


def build_forest(parts):
    edges, base = [], 0
    for tree_edges, size, copies in parts:
        for _ in range(copies):
            edges += [(base + u, base + v) for u, v in tree_edges]
            base += size
    return Graph(base, tuple(edges))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-tree", type=int, default=14)
    ap.add_argument("--max-mult", type=int, default=60)
    ap.add_argument("--show", type=int, default=5, help="how many mixes to list")
    args = ap.parse_args(argv)

    trees = tree_summaries(args.max_tree)
    keys = sorted(trees)
    print(f"distinct tree summaries (n, m, M1, M2) up to {args.max_tree} vertices: {len(keys)}")
    mixes = []
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            found = smallest_mix(a, b, args.max_mult)
            if found:
                mixes.append((found[0], a, found[1], b, found[2]))
    mixes.sort()
    print(f"feasible tree pairs: {len(mixes)}")
    for n, a, s, b, t in mixes[: args.show]:
        print(f"  n={n}: {s} x tree{a} + {t} x tree{b}")
    if not mixes:
        return
    n, a, s, b, t = mixes[0]
    g = build_forest([(trees[a], a[0], s), (trees[b], b[0], t)])
    r = zagreb_inequality(g)
    assert classify(g).forest and not r.holds
    print(f"smallest mix re-checked: n={g.n} m={g.m} M1/n={r.m1_over_n} M2/m={r.m2_over_m}")


if __name__ == "__main__":
    main()
