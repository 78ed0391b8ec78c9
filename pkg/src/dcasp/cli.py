"""Command-line driver: ``dcasp <command> ...``.

Exit codes follow SAT-solver convention: 10 when an answer set exists,
20 when none does, 0 for plain success or an exhausted decision budget,
1 for usage errors and 2 for parse, ground or model-file errors.

``solve`` and ``enumerate`` print::

    s SAT                 (or UNSAT / UNKNOWN)
    v 1 3                 model index and size, then one atom name per line
    a
    b
    c
    c decisions 4         run report, one ``c`` line per field

With ``--stats-json`` the ``c`` lines are replaced by one JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .bench import (
    gen_coloring,
    gen_hamilton,
    gen_nqueens,
    gen_pigeonhole,
    gen_schur,
    random_digraph,
    random_graph,
    read_graph,
)
from .core import InvalidAtom, is_answer_set
from .fmt import ParseError, parse_model, parse_theory, serialize_theory
from .ground import GroundError, format_program, ground, parse_program
from .solve import SolverConfig, search

SAT, UNSAT, OK, USAGE, INPUT = 10, 20, 0, 1, 2

# default edges-per-vertex for random bench instances; see scripts/crossover.py
HAMILTON_RATIO = 4.4
COLORING_RATIO = 2.17

_COUNT = {"type": "integer", "minimum": 0}
REPORT_SCHEMA = {
    "type": "object",
    "required": ["status", "models", "decisions", "propagations", "lookahead_tests",
                 "backtracks", "elapsed_ms", "sizes"],
    "additionalProperties": False,
    "properties": {
        "status": {"enum": ["SAT", "UNSAT", "UNKNOWN"]},
        "models": _COUNT,
        "decisions": _COUNT,
        "propagations": _COUNT,
        "lookahead_tests": _COUNT,
        "backtracks": _COUNT,
        "elapsed_ms": {"type": "number", "minimum": 0},
        "sizes": {
            "type": "object",
            "required": ["atoms", "clauses", "rules", "selects", "posts"],
            "additionalProperties": False,
            "properties": {k: _COUNT for k in ("atoms", "clauses", "rules", "selects", "posts")},
        },
    },
}

CSV_HEADER = "size,seed,status,decisions,millis"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _config(a):
    return SolverConfig(lookahead_count=a.lookahead, max_decisions=a.max_decisions,
                        time_limit=a.time_limit)


def make_report(theory, outcome, timing=True):
    st = outcome.stats
    status = "UNKNOWN" if outcome.status == "LIMIT" else outcome.status
    return {
        "status": status,
        "models": len(outcome.models),
        "decisions": st.decisions,
        "propagations": st.propagations,
        "lookahead_tests": st.lookahead_tests,
        "backtracks": st.backtracks,
        "elapsed_ms": round(st.elapsed_ms, 3) if timing else 0,
        "sizes": theory.sizes(),
    }


def _emit(theory, outcome, a):
    out = sys.stdout
    report = make_report(theory, outcome, timing=not a.no_timing)
    out.write(f"s {report['status']}\n")
    if not a.quiet:
        names = theory.atoms.names
        for i, m in enumerate(outcome.models, 1):
            out.write(f"v {i} {len(m)}\n")
            for name in sorted(names[x] for x in m):
                out.write(name + "\n")
    if a.stats_json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
    elif not a.quiet:
        for key, val in report.items():
            if key == "sizes":
                val = " ".join(f"{k}={v}" for k, v in val.items())
            out.write(f"c {key} {val}\n")
    if outcome.status == "LIMIT":
        return OK
    return SAT if outcome.models else UNSAT


def cmd_solve(a):
    theory = parse_theory(_read(a.theory))
    return _emit(theory, search(theory, _config(a), limit=1), a)


def cmd_enumerate(a):
    if a.k < 0:
        raise UsageError("-k must be nonnegative")
    theory = parse_theory(_read(a.theory))
    return _emit(theory, search(theory, _config(a), limit=a.k or None), a)


def cmd_ground(a):
    theory = ground(parse_program(_read(a.program)))
    _write(a.output, serialize_theory(theory))
    return OK


def cmd_verify(a):
    if a.theory == "-" and a.model == "-":
        raise UsageError("theory and model cannot both come from standard input")
    theory = parse_theory(_read(a.theory))
    verdict = is_answer_set(theory, theory.candidate(parse_model(_read(a.model))))
    if verdict:
        if not a.quiet:
            sys.stdout.write("s ANSWER-SET\n")
        return SAT
    if not a.quiet:
        sys.stdout.write(f"s NOT-ANSWER-SET\nc {verdict.reason}\n")
    return UNSAT


def _graph(a, directed):
    if a.graph:
        return read_graph(_read(a.graph), directed)
    if len(a.params) != 2:
        raise UsageError(f"{a.family} needs <vertices> <edges> or --graph")
    n, m = a.params
    return (random_digraph if directed else random_graph)(n, m, a.seed)


def cmd_gen(a):
    f, p = a.family, a.params
    want = {"nqueens": 1, "schur": 2, "pigeonhole": 2}
    if f in want and len(p) != want[f]:
        raise UsageError(f"{f} takes {want[f]} integer parameter(s)")
    if f == "hamilton":
        prog = gen_hamilton(_graph(a, True), a.start)
    elif f == "coloring":
        prog = gen_coloring(_graph(a, False), a.colors)
    elif f == "nqueens":
        prog = gen_nqueens(*p)
    elif f == "schur":
        prog = gen_schur(*p)
    else:
        prog = gen_pigeonhole(*p)
    _write(a.output, format_program(prog))
    return OK


def bench_instance(family, size, seed, opts):
    """Program for one bench row; ``opts`` carries ratio, bins, colors, extra."""
    if family == "hamilton":
        return gen_hamilton(random_digraph(size, round(opts["ratio"] * size), seed))
    if family == "coloring":
        return gen_coloring(random_graph(size, round(opts["ratio"] * size), seed), opts["colors"])
    if family == "nqueens":
        return gen_nqueens(size)
    if family == "schur":
        return gen_schur(opts["bins"], size)
    return gen_pigeonhole(size + opts["extra"], size)


def _bench_row(job):
    family, size, seed, opts, config, timing = job
    out = search(ground(bench_instance(family, size, seed, opts)), config, limit=1)
    status = "UNKNOWN" if out.status == "LIMIT" else out.status
    millis = f"{out.stats.elapsed_ms:.1f}" if timing else "0"
    return f"{size},{seed},{status},{out.stats.decisions},{millis}\n"


def _sizes(text):
    lo, sep, hi = text.partition("..")
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise UsageError(f"--sizes expects a..b, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"--sizes range {text!r} is empty or nonpositive")
    return range(lo, hi + 1)


def cmd_bench(a):
    if a.count < 1 or a.jobs < 1:
        raise UsageError("--count and --jobs must be positive")
    ratio = a.ratio
    if ratio is None:
        ratio = HAMILTON_RATIO if a.family == "hamilton" else COLORING_RATIO
    opts = {"ratio": ratio, "bins": a.bins, "colors": a.colors, "extra": a.extra}
    config = _config(a)
    jobs = [(a.family, size, a.seed + i, opts, config, not a.no_timing)
            for size in _sizes(a.sizes) for i in range(a.count)]
    out = sys.stdout
    out.write(CSV_HEADER + "\n")
    if a.jobs == 1:
        rows = map(_bench_row, jobs)
        for row in rows:
            out.write(row)
            out.flush()
    else:
        with ProcessPoolExecutor(a.jobs) as pool:
            for row in pool.map(_bench_row, jobs):
                out.write(row)
    return OK


FAMILIES = ["hamilton", "coloring", "nqueens", "schur", "pigeonhole"]


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--lookahead", type=int, default=SolverConfig.lookahead_count,
                        help="literals tested per lookahead round")
    common.add_argument("--max-decisions", type=int, default=None)
    common.add_argument("--time-limit", type=float, default=None, help="seconds of search")
    common.add_argument("--quiet", action="store_true")
    common.add_argument("--stats-json", action="store_true", help="print the run report as JSON")
    common.add_argument("--no-timing", action="store_true",
                        help="report zero elapsed time so output is reproducible byte for byte")

    p = _Parser(prog="dcasp", description="Answer sets of DATALOG-with-constraints theories.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("solve", parents=[common], help="find one answer set")
    s.add_argument("theory", nargs="?", default="-")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("enumerate", parents=[common], help="list answer sets")
    s.add_argument("theory", nargs="?", default="-")
    s.add_argument("-k", type=int, default=0, help="stop after k answer sets (0: all)")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("ground", help="ground a predicate program")
    s.add_argument("program", nargs="?", default="-")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_ground)

    s = sub.add_parser("verify", help="check a model file against a theory")
    s.add_argument("theory")
    s.add_argument("model")
    s.add_argument("--quiet", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="emit a benchmark program")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("params", type=int, nargs="*")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--graph", help="read the graph from a file instead of sampling one")
    s.add_argument("--start", type=int, default=1, help="Hamilton start vertex")
    s.add_argument("--colors", type=int, default=3)
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", parents=[common], help="solve a batch, one CSV row each")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("--sizes", required=True, help="size range a..b")
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--ratio", type=float, default=None, help="edges per vertex for random graphs")
    s.add_argument("--bins", type=int, default=3)
    s.add_argument("--colors", type=int, default=3)
    s.add_argument("--extra", type=int, default=1, help="pigeons minus holes")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_bench)
    return p


def run(args):
    try:
        a = build_parser().parse_args(args)
        if getattr(a, "lookahead", 1) < 1:
            raise UsageError("--lookahead must be at least 1")
        return a.func(a)
    except UsageError as e:
        print(f"dcasp: usage error: {e}", file=sys.stderr)
        return USAGE
    except ParseError as e:
        for d in e.diagnostics:
            print(d, file=sys.stderr)
        return INPUT
    except (GroundError, InvalidAtom, ValueError, OSError) as e:
        print(f"dcasp: error: {e}", file=sys.stderr)
        return INPUT


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
