"""Davis-Putnam style answer-set search with propagation and lookahead.

Literals are encoded internally as nonzero ints over solver variables
``1..n`` (one per constraint atom that occurs in the theory, in atom-id
order).  Horn atoms never become decision variables; their status is
bracketed by two closures:

* ``lower``: least model of the rules over the atoms currently true,
* ``upper``: least model of the rules over the atoms not yet false.

A post clause is false once every literal is false under these bounds.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Kind, Literal, is_answer_set, least_model


class LimitReached(RuntimeError):
    def __init__(self, message, found=()):
        super().__init__(message)
        self.found = list(found)


@dataclass(frozen=True)
class SolverConfig:
    lookahead_count: int = 16
    max_decisions: int | None = None
    time_limit: float | None = None  # seconds of search before giving up
    enumerate_limit: int | None = None
    deterministic_seed: int = 0
    clause_factor: int = 1
    select_factor: int = 2
    post_factor: int = 1
    check_invariants: bool = False

    def __post_init__(self):
        if self.lookahead_count < 1:
            raise ValueError("lookahead_count must be at least 1")
        if min(self.clause_factor, self.select_factor, self.post_factor) <= 0:
            raise ValueError("type factors must be positive")
        if self.time_limit is not None and self.time_limit < 0:
            raise ValueError("time_limit must be non-negative")


@dataclass
class SolveStats:
    decisions: int = 0
    propagations: int = 0
    lookahead_tests: int = 0
    backtracks: int = 0
    elapsed_ms: float = 0.0


@dataclass
class SolveOutcome:
    status: str  # "SAT", "UNSAT" or "LIMIT"
    witness: frozenset | None = None
    closure: object = None
    stats: SolveStats = field(default_factory=SolveStats)
    models: list = field(default_factory=list)


@dataclass
class LookaheadResult:
    conflict: bool
    forced: list
    stats: dict  # var -> {True: (forced, satisfied), False: (...)}


def choose_branch(stats):
    """Pick the branching literal from lookahead statistics.

    ``stats`` maps an atom to ``{True: (forced, satisfied), False: (...)}``.
    The atom maximizing its worse polarity score (then its better one) wins;
    ties go to the lower atom.  The better-scoring polarity is tried first.
    """
    best = None
    best_key = None
    for atom in sorted(stats):
        st = stats[atom]
        t = sum(st[True])
        f = sum(st[False])
        key = (min(t, f), max(t, f))
        if best_key is None or key > best_key:
            best, best_key = Literal(atom, t >= f), key
    return best


class SolverState:
    def __init__(self, theory, config=None):
        self.theory = theory
        self.config = config or SolverConfig()
        kinds = theory.atoms.kinds
        self.atom_of = [None] + list(theory.constraint_atoms)
        self.var_of = {a: i for i, a in enumerate(self.atom_of) if i}
        n = self.n = len(self.atom_of) - 1
        horn_atoms = theory.horn_atoms
        self.hatom_of = list(horn_atoms)
        self.h_of = {a: i for i, a in enumerate(horn_atoms)}
        k = self.k = len(horn_atoms)

        def enc(l):
            if kinds[l.atom] is Kind.CONSTRAINT:
                v = self.var_of[l.atom]
            else:
                v = n + 1 + self.h_of[l.atom]
            return v if l.positive else -v

        # constraint clauses; tautologies are dropped
        self.cl_lits = []
        for c in theory.constraints:
            if c.tautological:
                continue
            self.cl_lits.append(tuple(enc(l) for l in c.sorted_literals()))
        m = len(self.cl_lits)
        self.cl_true = [0] * m
        self.cl_false = [0] * m
        self.pos_cl = [[] for _ in range(n + 1)]
        self.neg_cl = [[] for _ in range(n + 1)]
        for i, lits in enumerate(self.cl_lits):
            for l in lits:
                (self.pos_cl if l > 0 else self.neg_cl)[abs(l)].append(i)
        self.nsat = 0

        self.sel_scope = [tuple(sorted(self.var_of[a] for a in s.scope)) for s in theory.selects]
        self.sel_lo = [s.lower for s in theory.selects]
        self.sel_hi = [s.upper for s in theory.selects]
        self.sel_true = [0] * len(self.sel_scope)
        self.sel_false = [0] * len(self.sel_scope)
        self.var_sel = [[] for _ in range(n + 1)]
        for i, sc in enumerate(self.sel_scope):
            for v in sc:
                self.var_sel[v].append(i)

        self.r_head = []
        self.r_cbody = []
        self.r_hbody = []
        self.var_rules = [[] for _ in range(n + 1)]
        self.h_rules = [[] for _ in range(k)]
        for i, r in enumerate(theory.horn):
            self.r_head.append(self.h_of[r.head])
            cb = [self.var_of[a] for a in r.body if kinds[a] is Kind.CONSTRAINT]
            hb = [self.h_of[a] for a in r.body if kinds[a] is Kind.HORN]
            self.r_cbody.append(cb)
            self.r_hbody.append(hb)
            for v in cb:
                self.var_rules[v].append(i)
            for h in hb:
                self.h_rules[h].append(i)
        nr = len(self.r_head)
        self.lcount = [len(self.r_cbody[i]) + len(self.r_hbody[i]) for i in range(nr)]
        self.ndead = [0] * nr
        self.r_hlen = [len(hb) for hb in self.r_hbody]
        self.h_roots = [i for i in range(nr) if not self.r_hbody[i]]
        self.head_rules = [[] for _ in range(k)]
        for i, h in enumerate(self.r_head):
            self.head_rules[h].append(i)

        self.po_lits = [tuple(enc(l) for l in c.sorted_literals()) for c in theory.post]
        # posts that can come to depend on one positive Horn literal
        self.h_need_posts = [i for i, lits in enumerate(self.po_lits) if any(l > n for l in lits)]
        self.var_posts = [[] for _ in range(n + 1)]
        self.h_posts = [[] for _ in range(k)]
        for i, lits in enumerate(self.po_lits):
            for l in lits:
                a = abs(l)
                if a <= n:
                    self.var_posts[a].append(i)
                else:
                    self.h_posts[a - n - 1].append(i)

        longest = max([len(c) for c in self.cl_lits] + [len(s) for s in self.sel_scope]
                      + [len(p) for p in self.po_lits] + [1])
        scale = math.lcm(*range(1, longest + 1))
        self.inv = [0] + [scale // f for f in range(1, longest + 1)]

        self.val = [0] * (n + 1)
        self.trail = []
        self.qhead = 0
        self.lower = bytearray(k)
        self.htrail = []
        self.upper = bytearray(k)
        # source[h]: a live rule deriving h from atoms with acyclic sources
        self.source = [-1] * k
        self.utrail = []
        self.killed = []
        self.stats = SolveStats()
        self._root_done = False

    # -- literal helpers ---------------------------------------------------

    def literal(self, lit):
        """Public Literal for an internal constraint literal."""
        return Literal(self.atom_of[abs(lit)], lit > 0)

    def internal(self, literal):
        v = self.var_of[literal.atom]
        return v if literal.positive else -v

    def value(self, atom):
        """True, False or None for a constraint atom."""
        x = self.val[self.var_of[atom]]
        return None if x == 0 else x > 0

    def assigned_true(self):
        return frozenset(self.atom_of[v] for v in range(1, self.n + 1) if self.val[v] > 0)

    def mark(self):
        return (len(self.trail), len(self.htrail), len(self.utrail))

    def enqueue(self, lit):
        """Assign ``lit``; returns False if it is already false."""
        v = lit if lit > 0 else -lit
        x = self.val[v]
        if x:
            return (x > 0) == (lit > 0)
        self.val[v] = 1 if lit > 0 else -1
        self.trail.append(lit)
        return True

    def assign(self, literal):
        """Assert a public Literal at the current level (no propagation)."""
        return self.enqueue(self.internal(literal))

    # -- propagation -------------------------------------------------------

    def _lit_value(self, l):
        n = self.n
        a = l if l > 0 else -l
        if a <= n:
            x = self.val[a]
        else:
            h = a - n - 1
            x = 1 if self.lower[h] else (-1 if not self.upper[h] else 0)
        return x if l > 0 else -x

    def _post_check(self, p):
        unknown = 0
        nunk = 0
        for l in self.po_lits[p]:
            x = self._lit_value(l)
            if x > 0:
                return True
            if x == 0:
                nunk += 1
                unknown = l
        if nunk == 0:
            return False
        if nunk == 1 and abs(unknown) <= self.n:
            self.enqueue(unknown)
        return True

    def _add_lower(self, h, new):
        lower = self.lower
        lower[h] = 1
        self.htrail.append(h)
        new.append(h)
        stack = [h]
        lcount = self.lcount
        while stack:
            x = stack.pop()
            for r in self.h_rules[x]:
                lcount[r] -= 1
                if lcount[r] == 0:
                    y = self.r_head[r]
                    if not lower[y]:
                        lower[y] = 1
                        self.htrail.append(y)
                        new.append(y)
                        stack.append(y)

    def _upper_closure(self):
        """Least model over the rules whose constraint body atoms are not false."""
        new = bytearray(self.k)
        source = [-1] * self.k
        cnt = self.r_hlen[:]
        ndead = self.ndead
        head = self.r_head
        stack = []
        for r in self.h_roots:
            if ndead[r] == 0:
                h = head[r]
                if not new[h]:
                    new[h] = 1
                    source[h] = r
                    stack.append(h)
        while stack:
            x = stack.pop()
            for r in self.h_rules[x]:
                cnt[r] -= 1
                if cnt[r] == 0 and ndead[r] == 0:
                    h = head[r]
                    if not new[h]:
                        new[h] = 1
                        source[h] = r
                        stack.append(h)
        return new, source

    def _shrink_upper(self):
        """Drop Horn atoms that lost every derivation after rules were killed.

        Only atoms whose source chain runs through a killed rule are
        examined; each either finds a new well-founded source or is removed.
        """
        killed = self.killed
        self.killed = []
        upper = self.upper
        source = self.source
        head = self.r_head
        lost = bytearray(self.k)
        stack = []
        for r in killed:
            h = head[r]
            if upper[h] and source[h] == r and not lost[h]:
                lost[h] = 1
                stack.append(h)
        if not stack:
            return []
        self.utrail.append((upper, source))
        self.upper = upper = bytearray(upper)
        self.source = source = source[:]
        h_rules = self.h_rules
        work = stack[:]
        while stack:
            x = stack.pop()
            for r in h_rules[x]:
                y = head[r]
                if source[y] == r and upper[y] and not lost[y]:
                    lost[y] = 1
                    stack.append(y)
                    work.append(y)
        ndead = self.ndead
        hbody = self.r_hbody
        head_rules = self.head_rules
        while work:
            y = work.pop()
            if not lost[y]:
                continue
            for r in head_rules[y]:
                if ndead[r]:
                    continue
                for b in hbody[r]:
                    if lost[b] or not upper[b]:
                        break
                else:
                    source[y] = r
                    lost[y] = 0
                    for r2 in h_rules[y]:
                        z = head[r2]
                        if lost[z]:
                            work.append(z)
                    break
        removed = [y for y in range(self.k) if lost[y]]
        for y in removed:
            upper[y] = 0
        return removed

    def _process(self, lit):
        """Update counters for a newly assigned literal, then run its checks."""
        v = lit if lit > 0 else -lit
        if lit > 0:
            sat_cl, fal_cl = self.pos_cl[v], self.neg_cl[v]
        else:
            sat_cl, fal_cl = self.neg_cl[v], self.pos_cl[v]
        cl_true = self.cl_true
        cl_false = self.cl_false
        for c in sat_cl:
            cl_true[c] += 1
            if cl_true[c] == 1:
                self.nsat += 1
        for c in fal_cl:
            cl_false[c] += 1
        sels = self.var_sel[v]
        if lit > 0:
            for s in sels:
                self.sel_true[s] += 1
        else:
            for s in sels:
                self.sel_false[s] += 1
        new_lower = []
        rules = self.var_rules[v]
        if rules:
            if lit > 0:
                lcount = self.lcount
                for r in rules:
                    lcount[r] -= 1
                    if lcount[r] == 0:
                        h = self.r_head[r]
                        if not self.lower[h]:
                            self._add_lower(h, new_lower)
            else:
                ndead = self.ndead
                source = self.source
                for r in rules:
                    ndead[r] += 1
                    if ndead[r] == 1 and source[self.r_head[r]] == r:
                        self.killed.append(r)
        self.qhead += 1
        self.stats.propagations += 1

        val = self.val
        for c in fal_cl:
            if cl_true[c]:
                continue
            lits = self.cl_lits[c]
            free = len(lits) - cl_false[c]
            if free == 0:
                return False
            if free == 1:
                for l in lits:
                    x = val[l if l > 0 else -l]
                    if x == 0:
                        self.enqueue(l)
                        break
        for s in sels:
            if not self._select_check(s):
                return False
        for p in self.var_posts[v]:
            if not self._post_check(p):
                return False
        for h in new_lower:
            for p in self.h_posts[h]:
                if not self._post_check(p):
                    return False
        return True

    def _support(self):
        """Backward rule: a Horn atom some post clause cannot do without, with a
        single rule left that could derive it, needs that rule's whole body.

        Returns True if it assigned anything.
        """
        n = self.n
        lower, upper = self.lower, self.upper
        need = []
        for p in self.h_need_posts:
            only = 0
            for l in self.po_lits[p]:
                x = self._lit_value(l)
                if x > 0:
                    only = 0
                    break
                if x == 0:
                    if only:
                        only = 0
                        break
                    only = l
            if only > n:
                need.append(only - n - 1)
        if not need:
            return False
        seen = set(need)
        ndead, hbody, cbody = self.ndead, self.r_hbody, self.r_cbody
        val = self.val
        before = len(self.trail)
        while need:
            h = need.pop()
            if lower[h] or not upper[h]:
                continue
            only = -1
            for r in self.head_rules[h]:
                if ndead[r]:
                    continue
                for b in hbody[r]:
                    if not upper[b]:
                        break
                else:
                    if only >= 0:
                        only = -2
                        break
                    only = r
            if only < 0:
                continue
            for v in cbody[only]:
                if val[v] == 0:
                    self.enqueue(v)
            for b in hbody[only]:
                if b not in seen:
                    seen.add(b)
                    need.append(b)
        return len(self.trail) > before

    def _select_check(self, s):
        t = self.sel_true[s]
        scope = self.sel_scope[s]
        unfalsified = len(scope) - self.sel_false[s]
        hi = self.sel_hi[s]
        lo = self.sel_lo[s]
        if t > hi or unfalsified < lo:
            return False
        if t == hi and unfalsified > t:
            val = self.val
            for u in scope:
                if val[u] == 0:
                    self.enqueue(-u)
        elif unfalsified == lo and unfalsified > t:
            val = self.val
            for u in scope:
                if val[u] == 0:
                    self.enqueue(u)
        return True

    def _root(self):
        """One-time initial checks of every constraint."""
        self._root_done = True
        for lits in self.cl_lits:
            if not lits:
                return False
            if len(lits) == 1 and not self.enqueue(lits[0]):
                return False
        for s in range(len(self.sel_scope)):
            if not self._select_check(s):
                return False
        new = []
        for r, c in enumerate(self.lcount):
            if c == 0 and not self.lower[self.r_head[r]]:
                self._add_lower(self.r_head[r], new)
        self.upper, self.source = self._upper_closure()
        for p in range(len(self.po_lits)):
            if not self._post_check(p):
                return False
        return True

    def propagate(self):
        """Run all propagation rules to fixpoint; False on conflict."""
        if not self._root_done and not self._root():
            return False
        trail = self.trail
        while True:
            while self.qhead < len(trail):
                if not self._process(trail[self.qhead]):
                    return False
            if self.killed:
                for h in self._shrink_upper():
                    for p in self.h_posts[h]:
                        if not self._post_check(p):
                            return False
                continue
            if self.h_need_posts and self._support():
                continue
            if self.config.check_invariants:
                self.check_invariants()
            return True

    def undo(self, mark):
        tlen, hlen, ulen = mark
        lower = self.lower
        lcount = self.lcount
        htrail = self.htrail
        while len(htrail) > hlen:
            h = htrail.pop()
            lower[h] = 0
            for r in self.h_rules[h]:
                lcount[r] += 1
        trail = self.trail
        val = self.val
        while len(trail) > tlen:
            lit = trail.pop()
            v = lit if lit > 0 else -lit
            if len(trail) < self.qhead:
                if lit > 0:
                    sat_cl, fal_cl = self.pos_cl[v], self.neg_cl[v]
                else:
                    sat_cl, fal_cl = self.neg_cl[v], self.pos_cl[v]
                for c in sat_cl:
                    self.cl_true[c] -= 1
                    if self.cl_true[c] == 0:
                        self.nsat -= 1
                for c in fal_cl:
                    self.cl_false[c] -= 1
                if lit > 0:
                    for s in self.var_sel[v]:
                        self.sel_true[s] -= 1
                    for r in self.var_rules[v]:
                        lcount[r] += 1
                else:
                    for s in self.var_sel[v]:
                        self.sel_false[s] -= 1
                    for r in self.var_rules[v]:
                        self.ndead[r] -= 1
            val[v] = 0
        self.qhead = min(self.qhead, tlen)
        if len(self.utrail) > ulen:
            self.upper, self.source = self.utrail[ulen]
            del self.utrail[ulen:]
        self.killed.clear()

    def check_invariants(self):
        """Compare incremental bookkeeping against from-scratch recomputation."""
        theory = self.theory
        trues = self.assigned_true()
        lower = {self.hatom_of[h] for h in range(self.k) if self.lower[h]}
        upper = {self.hatom_of[h] for h in range(self.k) if self.upper[h]}
        hset = set(self.hatom_of)
        want_lower = least_model(theory.horn, trues) & hset
        open_ = trues | {self.atom_of[v] for v in range(1, self.n + 1) if self.val[v] == 0}
        want_upper = least_model(theory.horn, open_) & hset
        assert lower == want_lower, "lower closure out of sync"
        assert upper == want_upper, "upper closure out of sync"
        assert lower <= upper
        for h in range(self.k):
            if self.upper[h]:
                r = self.source[h]
                assert r >= 0 and self.r_head[r] == h and self.ndead[r] == 0
                assert all(self.upper[b] for b in self.r_hbody[r])
        for s, scope in enumerate(self.sel_scope):
            assert self.sel_true[s] == sum(1 for u in scope if self.val[u] > 0)
            assert self.sel_false[s] == sum(1 for u in scope if self.val[u] < 0)
        for c, lits in enumerate(self.cl_lits):
            assert self.cl_true[c] == sum(1 for l in lits if self._lit_value(l) > 0)
            assert self.cl_false[c] == sum(1 for l in lits if self._lit_value(l) < 0)

    # -- weights and lookahead -------------------------------------------

    def _constraints(self, clauses=True):
        """Yield (kind, index, free literals) for every unsatisfied constraint."""
        val = self.val
        if clauses:
            for c, lits in enumerate(self.cl_lits):
                if self.cl_true[c]:
                    continue
                yield "clause", c, [l for l in lits if val[abs(l)] == 0]
        for s, scope in enumerate(self.sel_scope):
            t = self.sel_true[s]
            free = [u for u in scope if val[u] == 0]
            if t >= self.sel_lo[s] and t + len(free) <= self.sel_hi[s]:
                continue
            yield "select", s, free
        for p, lits in enumerate(self.po_lits):
            free = []
            for l in lits:
                x = self._lit_value(l)
                if x > 0:
                    break
                if x == 0:
                    free.append(l)
            else:
                yield "post", p, free

    def _factor(self, kind):
        cfg = self.config
        return {"clause": cfg.clause_factor, "select": cfg.select_factor, "post": cfg.post_factor}[kind]

    def constraint_weight(self, kind, index):
        """Exact weight of an unsatisfied constraint: type factor / free size."""
        for k, i, free in self._constraints():
            if k == kind and i == index:
                return Fraction(self._factor(kind), len(free)) if free else Fraction(0)
        raise ValueError(f"{kind} {index} is satisfied")

    def _weights(self):
        n = self.n
        inv = self.inv
        val = self.val
        w = [0] * (2 * n + 1)  # index lit, negative lits wrap to the tail
        cf = self.config.clause_factor
        cl_true = self.cl_true
        for c, lits in enumerate(self.cl_lits):
            if cl_true[c]:
                continue
            free = [l for l in lits if not val[l if l > 0 else -l]]
            if free:
                wt = cf * inv[len(free)]
                for l in free:
                    w[l] += wt
        factors = {"select": self.config.select_factor, "post": self.config.post_factor}
        for kind, _, free in self._constraints(clauses=False):
            if not free:
                continue
            wt = factors[kind] * inv[len(free)]
            for l in free:
                if abs(l) <= n:
                    w[l] += wt
        return w

    def _ranked(self, count):
        """Internal variables to test, from the top-weighted literals."""
        w = self._weights()
        val = self.val
        lits = []
        for v in range(1, self.n + 1):
            if val[v] == 0:
                lits.append(v)
                lits.append(-v)
        lits.sort(key=lambda l: (-w[l], abs(l), l < 0))
        out = []
        seen = set()
        for l in lits:
            v = abs(l)
            if v not in seen:
                seen.add(v)
                out.append(v)
                if len(out) == count:
                    break
        return out, lits

    def rank_literals(self, count):
        """Top ``count`` unassigned literals by weight, as public Literals."""
        _, lits = self._ranked(count)
        return [self.literal(l) for l in lits[:count]]

    def _test(self, lit):
        mark = self.mark()
        nsat0 = self.nsat
        t0 = len(self.trail)
        self.stats.lookahead_tests += 1
        self.enqueue(lit)
        ok = self.propagate()
        res = (len(self.trail) - t0 - 1, self.nsat - nsat0) if ok else None
        self.undo(mark)
        return res

    def lookahead(self):
        """Literal testing on the most constrained atoms.

        Returns a :class:`LookaheadResult`; literals forced because one value
        failed are asserted in place, after which ranking restarts.
        """
        forced = []
        count = self.config.lookahead_count
        while True:
            atoms, _ = self._ranked(count)
            stats = {}
            restart = False
            for v in atoms:
                pos = self._test(v)
                neg = self._test(-v)
                if pos is None and neg is None:
                    return LookaheadResult(True, forced, {})
                if pos is None or neg is None:
                    lit = -v if pos is None else v
                    self.enqueue(lit)
                    forced.append(self.literal(lit))
                    if not self.propagate():
                        return LookaheadResult(True, forced, {})
                    restart = True
                    break
                stats[v] = {True: pos, False: neg}
            if not restart:
                return LookaheadResult(False, forced, stats)

    def public_stats(self, stats):
        return {self.atom_of[v]: st for v, st in stats.items()}


def search(theory, config=None, limit=1):
    """Complete chronological search, collecting up to ``limit`` answer sets."""
    config = config or SolverConfig()
    t0 = time.perf_counter()
    st = SolverState(theory, config)
    stats = st.stats
    models = []
    closures = []
    status = None
    conflict = not st.propagate()
    stack = []  # [decision literal, flipped, mark]
    while True:
        if conflict:
            while stack and stack[-1][1]:
                st.undo(stack.pop()[2])
            if not stack:
                break
            top = stack[-1]
            st.undo(top[2])
            top[1] = True
            stats.backtracks += 1
            st.enqueue(-top[0])
            conflict = not st.propagate()
            continue
        la = st.lookahead()
        if la.conflict:
            conflict = True
            continue
        if not la.stats:
            m = st.assigned_true()
            verdict = is_answer_set(theory, m)
            if verdict:
                models.append(m)
                closures.append(verdict.closure)
                if limit is not None and len(models) >= limit:
                    break
            conflict = True
            continue
        if config.max_decisions is not None and stats.decisions >= config.max_decisions:
            status = "LIMIT"
            break
        if config.time_limit is not None and time.perf_counter() - t0 > config.time_limit:
            status = "LIMIT"
            break
        br = choose_branch(la.stats)
        lit = br.atom if br.positive else -br.atom
        stats.decisions += 1
        mark = st.mark()
        stack.append([lit, False, mark])
        st.enqueue(lit)
        conflict = not st.propagate()
    stats.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    for m in models:
        if not is_answer_set(theory, m):
            raise RuntimeError("solver produced a candidate that is not an answer set")
    if status is None:
        status = "SAT" if models else "UNSAT"
    out = SolveOutcome(status, stats=stats, models=models)
    if models:
        out.witness = models[0]
        out.closure = closures[0]
    return out


def solve(theory, config=None):
    """Find one answer set; status is SAT, UNSAT or LIMIT."""
    return search(theory, config, limit=1)


def enumerate_answer_sets(theory, k=None, config=None):
    """Up to ``k`` answer sets (all when ``k`` is None), in search order."""
    if k is not None and k < 1:
        raise ValueError("k must be at least 1")
    out = search(theory, config, limit=k)
    if out.status == "LIMIT":
        raise LimitReached("decision limit reached", out.models)
    return out.models
