"""Schur number search: largest N whose 1..N splits into B sum-free bins.

    python3 scripts/schur.py --bins 3            # S(3): SAT at 13, UNSAT at 14
    python3 scripts/schur.py --bins 4 --from 44  # long-running
"""

import argparse
import time

from dcasp.bench import gen_schur
from dcasp.ground import ground
from dcasp.solve import SolverConfig, solve


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bins", type=int, default=3)
    ap.add_argument("--from", dest="start", type=int, default=1)
    ap.add_argument("--to", type=int, default=None, help="stop after this N")
    ap.add_argument("--lookahead", type=int, default=16)
    a = ap.parse_args()
    config = SolverConfig(lookahead_count=a.lookahead)
    n = a.start
    while a.to is None or n <= a.to:
        t0 = time.perf_counter()
        out = solve(ground(gen_schur(a.bins, n)), config)
        print(f"{a.bins}/{n} {out.status} decisions={out.stats.decisions} "
              f"{time.perf_counter() - t0:.2f}s", flush=True)
        if out.status != "SAT":
            print(f"S({a.bins}) = {n - 1}")
            break
        n += 1


if __name__ == "__main__":
    main()
