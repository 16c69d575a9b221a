"""How often are e_k and s_l similarly or conversely ordered?

Prints one row per (k, l) and n with the census tallies, for undirected graphs
or (with --directed) loop-free digraphs.

    python3 scripts/ordering_census.py --max-n 6 --pairs 1,1 1,2 2,2
    python3 scripts/ordering_census.py --directed --max-n 4
"""

import argparse

from zagreb_walks.search import SearchSpec, run_search

LABELS = ("both", "similarly_only", "conversely_only", "neither")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--directed", action="store_true")
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--pairs", nargs="*", default=["1,1", "1,2", "2,2"])
    ap.add_argument("--class", dest="class_filter", default="all")
    args = ap.parse_args(argv)

    print(f"{'k,l':>5} {'n':>3} " + " ".join(f"{s:>16}" for s in LABELS))
    for pair in args.pairs:
        k, l = map(int, pair.split(","))
        for n in range(1, args.max_n + 1):
            spec = SearchSpec(directed=args.directed, min_n=n, max_n=n,
                              class_filter=args.class_filter, predicate="ordering_census",
                              k=k, l=l)
            census = run_search(spec).summary["census"]
            print(f"{pair:>5} {n:>3} " + " ".join(f"{census.get(s, 0):>16}" for s in LABELS))


if __name__ == "__main__":
    main()
