"""Locate the random-instance crossover (about half SAT) by bisection on edge count.

    python3 scripts/crossover.py hamilton --n 30 --lo 60 --hi 200 --count 10
    python3 scripts/crossover.py coloring --n 30 --lo 30 --hi 120 --count 10

Prints one line per probed edge count and the final estimate.  With
--time-limit, unfinished instances print LIMIT; a digraph with a vertex of
in- or out-degree 0 is then counted as UNSAT ("cert"), any other unfinished
instance as not SAT.
"""

import argparse
import json
import time

from dcasp.bench import gen_coloring, gen_hamilton, random_digraph, random_graph
from dcasp.ground import ground
from dcasp.solve import SolverConfig, solve


def instance(family, n, m, seed):
    if family == "hamilton":
        return ground(gen_hamilton(random_digraph(n, m, seed)))
    return ground(gen_coloring(random_graph(n, m, seed), 3))


def degree_certificate(n, m, seed):
    g = random_digraph(n, m, seed)
    outs = {u for u, _ in g.edges}
    ins = {v for _, v in g.edges}
    return len(outs) < n or len(ins) < n


def sat_fraction(family, n, m, seeds, config, log):
    sat = 0
    for s in seeds:
        t0 = time.perf_counter()
        out = solve(instance(family, n, m, s), config)
        secs = time.perf_counter() - t0
        sat += out.status == "SAT"
        cert = out.status == "LIMIT" and family == "hamilton" and degree_certificate(n, m, s)
        log.append({"m": m, "seed": s, "status": out.status, "cert": cert,
                    "decisions": out.stats.decisions, "seconds": round(secs, 2)})
        print(f"  m={m} seed={s} {out.status}{' cert' if cert else ''} "
              f"decisions={out.stats.decisions} {secs:.2f}s", flush=True)
    return sat / len(seeds)


def bisect(family, n, lo, hi, count, seed, config, log):
    # more edges help a Hamilton cycle and hurt a coloring
    rising = family == "hamilton"
    seeds = range(seed, seed + count)
    frac = {}
    while hi - lo > 1:
        mid = (lo + hi) // 2
        frac[mid] = sat_fraction(family, n, mid, seeds, config, log)
        print(f"m={mid} sat={frac[mid]:.2f}", flush=True)
        if (frac[mid] < 0.5) == rising:
            lo = mid
        else:
            hi = mid
    return (hi if rising else lo), frac


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("family", choices=["hamilton", "coloring"])
    ap.add_argument("--n", type=int, default=30)
    ap.add_argument("--lo", type=int, required=True)
    ap.add_argument("--hi", type=int, required=True)
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--lookahead", type=int, default=16)
    ap.add_argument("--time-limit", type=float, help="seconds per instance")
    ap.add_argument("--log", help="write per-instance results as JSON")
    a = ap.parse_args()
    log = []
    m, frac = bisect(a.family, a.n, a.lo, a.hi, a.count, a.seed,
                     SolverConfig(lookahead_count=a.lookahead, time_limit=a.time_limit), log)
    print(f"crossover {a.family} n={a.n}: m={m} (ratio {m / a.n:.2f})")
    limited = [r for r in log if r["status"] == "LIMIT"]
    print(f"unfinished: {len(limited)} ({sum(r['cert'] for r in limited)} with a degree certificate)")
    print(f"slowest instance: {max(r['seconds'] for r in log):.2f}s")
    if a.log:
        with open(a.log, "w") as f:
            json.dump({"crossover": m, "fractions": frac, "instances": log}, f, indent=1)


if __name__ == "__main__":
    main()
