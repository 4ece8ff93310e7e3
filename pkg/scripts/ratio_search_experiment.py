#!/usr/bin/env python3
"""Hunt for instances where greedy does badly relative to the exact optimum.

Runs the ratio search at several instance sizes and prints one table row per
size: the worst greedy/optimal ratio seen, the witness instance, and how many
random instances beat the nine-job fixture's 21/20.  The known worst case is
21/20, so a FINDING line is interesting by definition.

Example:
    python3 scripts/ratio_search_experiment.py --sizes 4 6 8 10 --iterations 200
"""

import argparse
import json
import time

from trisched import bench


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[4, 6, 8, 9, 10])
    parser.add_argument("--iterations", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-size", type=int, default=50)
    parser.add_argument("--report", help="write the per-size reports to this JSON file")
    args = parser.parse_args()

    print(f"{'n':>3}  {'ratio':>8}  {'decimal':>8}  {'time':>7}  witness")
    reports = []
    for n in args.sizes:
        t0 = time.perf_counter()
        report = bench.ratio_search(
            n=n, iterations=args.iterations, seed=args.seed, max_size=args.max_size
        )
        dt = time.perf_counter() - t0
        print(
            f"{n:>3}  {str(report.ratio):>8}  {float(report.ratio):>8.4f}"
            f"  {dt:>6.2f}s  {list(report.witness)}"
        )
        for sizes, ratio in report.findings:
            print(f"     FINDING {list(sizes)} at {ratio} beats the fixture")
        reports.append(bench.report_to_obj(report))

    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump({"reports": reports}, fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.report}")


if __name__ == "__main__":
    main()
