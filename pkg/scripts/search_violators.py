"""Exhaustive Zagreb-violator searches over the standard graph classes.

Writes one JSON file per search into ``--out`` and prints a short table.
With the default sizes this takes a few minutes on one core.

    python3 scripts/search_violators.py --out results/violators
"""

import argparse
import sys
import time
from pathlib import Path

from zagreb_walks.search import SearchSpec, run_search, smallest_witness
from zagreb_walks.serialize import dumps

SEARCHES = {
    "trees": SearchSpec(max_n=9, class_filter="tree", override_cap=True),
    "forests": SearchSpec(max_n=9, class_filter="forest", override_cap=True),
    "connected_chemical": SearchSpec(max_n=7, class_filter="connected+chemical"),
    "connected": SearchSpec(max_n=7, class_filter="connected"),
    "all": SearchSpec(max_n=7),
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results/violators"))
    ap.add_argument("--only", choices=sorted(SEARCHES), nargs="*")
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)

    for name in args.only or SEARCHES:
        spec = SEARCHES[name]
        t0 = time.perf_counter()
        result = run_search(spec, progress=lambda msg: print(f"  {name} {msg}", file=sys.stderr))
        elapsed = time.perf_counter() - t0
        (args.out / f"{name}.json").write_text(dumps(result.to_json()))
        w = smallest_witness(result)
        first = f"smallest n={w['n']} code={w['code']}" if w else "none"
        print(f"{name:20s} n<={spec.max_n}  examined {result.examined:>10d}  "
              f"violators {result.matched:>6d}  {first}  ({elapsed:.1f}s)")


if __name__ == "__main__":
    main()
