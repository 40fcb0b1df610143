"""List, for each bound, the graphs on which it holds with equality.

Runs the full catalogue over every graph with at most --max-n vertices and
prints the tight graphs (graph6 plus chi, omega, Delta, iota) per bound.

    python scripts/tight_witnesses.py --max-n 7 --bounds KEY,MAIN_RESULT
"""

import argparse

from stingy.bounds import BOUNDS
from stingy.harness import SweepConfig, run_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--bounds", default="all")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--limit", type=int, default=15, help="graphs shown per bound")
    args = ap.parse_args()

    bounds = tuple(BOUNDS) if args.bounds == "all" else tuple(args.bounds.split(","))
    results = []
    report = run_sweep(SweepConfig(exhaustive=args.max_n, bounds=bounds, jobs=args.jobs, tight_cap=None),
                       keep=results)
    records = {res.graph6: res.record for res in results if res.record is not None}
    for pb in report.to_dict()["per_bound"]:
        print(f"{pb['id']}: {pb['tight_count']} tight of {pb['hypothesis_hits']} hits, "
              f"min slack {pb['min_slack']}")
        for g6 in pb["tight"][: args.limit]:
            r = records[g6]
            print(f"  {g6:<12} n={r.n} chi={r.chi} omega={r.omega} Delta={r.delta} iota={r.iota}")
        if pb["tight_count"] > args.limit:
            print(f"  ... {pb['tight_count'] - args.limit} more")


if __name__ == "__main__":
    main()
