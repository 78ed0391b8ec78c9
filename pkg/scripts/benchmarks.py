"""Solve every benchmark family over a range of sizes and print a summary table.

    python3 scripts/benchmarks.py                 # default sizes
    python3 scripts/benchmarks.py --csv out.csv   # also keep raw rows

Outcomes (SAT/UNSAT and answer-set counts) are the reproducible part;
times depend on the machine.
"""

import argparse
import csv
import math
import time

from dcasp.bench import gen_coloring, gen_nqueens, gen_pigeonhole, gen_schur, petersen_graph, complete_graph
from dcasp.ground import ground
from dcasp.solve import SolverConfig, search

JOBS = (
    [("schur", f"3/{n}", lambda n=n: gen_schur(3, n), 1) for n in (12, 13, 14)]
    + [("pigeonhole", f"{h + 1}/{h}", lambda h=h: gen_pigeonhole(h + 1, h), 1) for h in range(2, 9)]
    + [("pigeonhole", f"{h}/{h}", lambda h=h: gen_pigeonhole(h, h), None) for h in range(2, 6)]
    + [("nqueens", str(n), lambda n=n: gen_nqueens(n), None) for n in (4, 5, 6, 7, 8)]
    + [("nqueens", str(n), lambda n=n: gen_nqueens(n), 1) for n in (12, 16, 20, 24)]
    + [("coloring", "K4", lambda: gen_coloring(complete_graph(4), 3), 1),
       ("coloring", "petersen", lambda: gen_coloring(petersen_graph(), 3), None)]
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lookahead", type=int, default=16)
    ap.add_argument("--csv")
    a = ap.parse_args()
    config = SolverConfig(lookahead_count=a.lookahead)
    rows = []
    print(f"{'family':<11} {'instance':<9} {'status':<6} {'models':>6} {'decisions':>9} {'seconds':>8}")
    for family, label, make, limit in JOBS:
        t = ground(make())
        t0 = time.perf_counter()
        out = search(t, config, limit=limit)
        secs = time.perf_counter() - t0
        models = len(out.models) if limit is None else ""
        rows.append([family, label, out.status, models, out.stats.decisions, f"{secs:.3f}"])
        print(f"{family:<11} {label:<9} {out.status:<6} {models!s:>6} {out.stats.decisions:>9} {secs:>8.2f}",
              flush=True)
        if family == "pigeonhole" and limit is None:
            h = int(label.split("/")[0])
            assert len(out.models) == math.factorial(h)
    if a.csv:
        with open(a.csv, "w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["family", "instance", "status", "models", "decisions", "seconds"])
            w.writerows(rows)


if __name__ == "__main__":
    main()
