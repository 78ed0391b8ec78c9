"""Benchmark families as predicate DC programs, plus random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Kind, TheoryBuilder
from .ground import parse_program


class TooManyEdges(ValueError):
    pass


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: tuple

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u},{v}) outside 1..{self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u},{v}) outside 1..{self.n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)


def _domain(name, lo, hi):
    return f"#domain {name} = {{{','.join(str(i) for i in range(lo, hi + 1))}}}."


HAMILTON_RULES = """\
c: -hc(Y,X) | -hc(Z,X) :- edge(Y,X), edge(Z,X), Y < Z.
c: -hc(X,Y) | -hc(X,Z) :- edge(X,Y), edge(X,Z), Y < Z.
h: hc(X,Y) -> vstd(Y) :- start(X), edge(X,Y).
h: vstd(X), hc(X,Y) -> vstd(Y) :- edge(X,Y), not start(X).
p: vstd(X).
"""


def hamilton_text(g, start=1):
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if not 1 <= start <= g.n:
        raise ValueError(f"start vertex {start} outside 1..{g.n}")
    lines = [f"% hamilton cycle, {g.n} vertices, {len(g.edges)} edges",
             _domain("vertex", 1, g.n),
             "#var X, Y, Z : vertex.",
             f"start({start})."]
    lines += [f"edge({u},{v})." for u, v in g.edges]
    return "\n".join(lines) + "\n" + HAMILTON_RULES


def gen_hamilton(g, start=1):
    return parse_program(hamilton_text(g, start))


def hamilton_theory(g, start=1):
    """The propositional Hamilton-cycle theory built directly from the graph."""
    b = TheoryBuilder()
    edges = list(g.edges)
    for u, v in edges:
        b.atom(f"hc({u},{v})", Kind.CONSTRAINT)
    for a in range(1, g.n + 1):
        ins = [u for u, v in edges if v == a]
        outs = [v for u, v in edges if u == a]
        for i, x in enumerate(ins):
            for y in ins[i + 1:]:
                b.add_clause([f"-hc({x},{a})", f"-hc({y},{a})"])
        for i, x in enumerate(outs):
            for y in outs[i + 1:]:
                b.add_clause([f"-hc({a},{x})", f"-hc({a},{y})"])
    for u, v in edges:
        b.atom(f"vstd({v})", Kind.HORN)
        if u == start:
            b.add_rule([f"hc({u},{v})"], f"vstd({v})")
        else:
            b.atom(f"vstd({u})", Kind.HORN)
            b.add_rule([f"vstd({u})", f"hc({u},{v})"], f"vstd({v})")
    for t in range(1, g.n + 1):
        b.atom(f"vstd({t})", Kind.HORN)
        b.add_post([f"vstd({t})"])
    return b.build()


def coloring_text(g, k):
    if k < 1:
        raise ValueError("need at least one color")
    lines = [f"% {k}-coloring, {g.n} vertices, {len(g.edges)} edges",
             _domain("vertex", 1, g.n),
             _domain("color", 1, k),
             "#var X, Y : vertex.",
             "#var C : color."]
    lines += [f"edge({u},{v})." for u, v in g.edges]
    lines += ["s: 1 1 C : color(X,C).",
              "c: -color(X,C) | -color(Y,C) :- edge(X,Y)."]
    return "\n".join(lines) + "\n"


def gen_coloring(g, k):
    return parse_program(coloring_text(g, k))


def nqueens_text(n):
    if n < 1:
        raise ValueError("board size must be positive")
    lines = [f"% {n}-queens",
             _domain("idx", 1, n),
             "#var R, C : idx."]
    body = ["s: 1 1 C : q(R,C).",
            "s: 0 1 R : q(R,C)."]
    if n >= 2:
        # diagonals of length >= 2 are indexed by R-C+n in 2..2n-2 and R+C in 3..2n-1
        lines += [_domain("diag", 2, 2 * n - 2), _domain("anti", 3, 2 * n - 1),
                  "#var D : diag.", "#var A : anti."]
        body += ["s: 0 1 R,C : q(R,C) :- R - C + %d = D." % n,
                 "s: 0 1 R,C : q(R,C) :- R + C = A."]
    return "\n".join(lines + body) + "\n"


def gen_nqueens(n):
    return parse_program(nqueens_text(n))


def schur_text(b, n):
    if b < 1 or n < 1:
        raise ValueError("bins and numbers must be positive")
    return "\n".join([
        f"% Schur problem: 1..{n} in {b} bins, no bin closed under sums",
        _domain("num", 1, n),
        _domain("bin", 1, b),
        "#var X, Y : num.",
        "#var K : bin.",
        "s: 1 1 K : inbin(X,K).",
        f"c: -inbin(X,K) | -inbin(Y,K) | -inbin(X+Y,K) :- X <= Y, X + Y <= {n}.",
    ]) + "\n"


def gen_schur(b, n):
    return parse_program(schur_text(b, n))


def pigeonhole_text(p, h):
    if p < 1 or h < 1:
        raise ValueError("pigeons and holes must be positive")
    return "\n".join([
        f"% {p} pigeons, {h} holes",
        _domain("pigeon", 1, p),
        _domain("hole", 1, h),
        "#var P : pigeon.",
        "#var H : hole.",
        "s: 1 1 H : at(P,H).",
        "s: 0 1 P : at(P,H).",
    ]) + "\n"


def gen_pigeonhole(p, h):
    return parse_program(pigeonhole_text(p, h))


def random_digraph(n, m, seed):
    """``m`` distinct non-loop directed edges on 1..n, sampled uniformly."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    if m > len(pairs):
        raise TooManyEdges(f"{m} edges requested, at most {len(pairs)} possible")
    rng = random.Random(seed)
    return Digraph(n, tuple(sorted(rng.sample(pairs, m))))


def random_graph(n, m, seed):
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if m > len(pairs):
        raise TooManyEdges(f"{m} edges requested, at most {len(pairs)} possible")
    rng = random.Random(seed)
    return Graph(n, tuple(sorted(rng.sample(pairs, m))))


def petersen_graph():
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return Graph(10, tuple(outer + spokes + inner))


def complete_graph(n):
    return Graph(n, tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def complete_digraph(n):
    return Digraph(n, tuple((u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v))


def read_graph(text, directed=True):
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``%`` comments allowed."""
    nums = []
    for raw in text.splitlines():
        line = raw.split("%", 1)[0].split()
        nums.extend(int(x) for x in line)
    if len(nums) < 2:
        raise ValueError("graph input must start with 'n m'")
    n, m = nums[0], nums[1]
    rest = nums[2:]
    if len(rest) != 2 * m:
        raise ValueError(f"expected {m} edges, found {len(rest) / 2:g}")
    edges = tuple((rest[2 * i], rest[2 * i + 1]) for i in range(m))
    return Digraph(n, edges) if directed else Graph(n, edges)


def write_graph(g):
    return f"{g.n} {len(g.edges)}\n" + "".join(f"{u} {v}\n" for u, v in g.edges)


def random_theory(rng, max_atoms=12, max_horn=4, max_clauses=20, max_rules=8,
                  max_posts=4, max_selects=3):
    """A random small propositional theory for oracle comparisons."""
    nc = rng.randint(1, max_atoms)
    nh = rng.randint(0, max_horn)
    b = TheoryBuilder()
    cs = [b.declare(f"a{i}", Kind.CONSTRAINT) for i in range(nc)]
    hs = [b.declare(f"h{i}", Kind.HORN) for i in range(nh)]

    def lits(pool, lo, hi):
        k = rng.randint(lo, min(hi, len(pool)))
        return [(a, rng.random() < 0.5) for a in rng.sample(pool, k)]

    for _ in range(rng.randint(0, max_clauses)):
        b.add_clause(lits(cs, 1, 4))
    for _ in range(rng.randint(0, max_selects)):
        scope = rng.sample(cs, rng.randint(1, min(5, nc)))
        lo = rng.randint(0, len(scope))
        hi = rng.randint(lo, len(scope))
        b.add_select(lo, hi, scope)
    if hs:
        for _ in range(rng.randint(0, max_rules)):
            body = rng.sample(cs + hs, rng.randint(0, min(3, nc + nh)))
            b.add_rule(body, rng.choice(hs))
        for _ in range(rng.randint(0, max_posts)):
            b.add_post(lits(cs + hs, 1, 3))
    return b.build()
