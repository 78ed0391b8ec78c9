"""DC theory data model, least models and answer-set checking.

A theory is built through :class:`TheoryBuilder`, which interns atom names,
checks kind restrictions and removes duplicate clauses and rules.  Once built,
a :class:`Theory` is immutable.
"""

from __future__ import annotations

import enum
from functools import cached_property
from dataclasses import dataclass, field
from typing import NamedTuple


class Kind(enum.Enum):
    CONSTRAINT = "c"
    HORN = "h"


class Role(enum.Enum):
    CONSTRAINT = "c"
    POST = "p"


class TheoryError(ValueError):
    pass


class KindError(TheoryError):
    pass


class InvalidAtom(TheoryError):
    pass


class TooLarge(TheoryError):
    pass


class Literal(NamedTuple):
    atom: int
    positive: bool = True

    def __neg__(self):
        return Literal(self.atom, not self.positive)


@dataclass(frozen=True)
class Clause:
    literals: frozenset
    role: Role = Role.CONSTRAINT

    @property
    def tautological(self):
        return any(Literal(l.atom, not l.positive) in self.literals for l in self.literals)

    def sorted_literals(self):
        return sorted(self.literals, key=lambda l: (l.atom, not l.positive))

    def satisfied_by(self, trues):
        return any((l.atom in trues) == l.positive for l in self.literals)


@dataclass(frozen=True)
class HornRule:
    body: tuple
    head: int


@dataclass(frozen=True)
class SelectConstraint:
    lower: int
    upper: int
    scope: frozenset

    def holds(self, trues):
        k = len(self.scope & trues) if isinstance(trues, (set, frozenset)) else sum(
            1 for a in self.scope if a in trues)
        return self.lower <= k <= self.upper


@dataclass(frozen=True)
class AtomTable:
    names: tuple
    kinds: tuple
    index: dict = field(compare=False, repr=False)

    def __len__(self):
        return len(self.names)

    def id(self, name):
        return self.index[name]

    def name(self, atom):
        return self.names[atom]

    def kind(self, atom):
        return self.kinds[atom]


@dataclass(frozen=True)
class Theory:
    atoms: AtomTable
    constraints: tuple = ()
    selects: tuple = ()
    horn: tuple = ()
    post: tuple = ()

    @cached_property
    def appearing(self):
        """Atoms that occur in some clause, select, rule or post clause."""
        seen = set()
        for c in self.constraints:
            seen.update(l.atom for l in c.literals)
        for s in self.selects:
            seen.update(s.scope)
        for r in self.horn:
            seen.update(r.body)
            seen.add(r.head)
        for c in self.post:
            seen.update(l.atom for l in c.literals)
        return frozenset(seen)

    @cached_property
    def constraint_atoms(self):
        """At_C(T), in atom-id order."""
        app = self.appearing
        return tuple(a for a in range(len(self.atoms))
                     if a in app and self.atoms.kinds[a] is Kind.CONSTRAINT)

    @cached_property
    def horn_atoms(self):
        app = self.appearing
        return tuple(a for a in range(len(self.atoms))
                     if a in app and self.atoms.kinds[a] is Kind.HORN)

    def names(self, atoms):
        return sorted(self.atoms.names[a] for a in atoms)

    def candidate(self, names):
        """Build a candidate set from atom names."""
        out = set()
        for n in names:
            if n not in self.atoms.index:
                raise InvalidAtom(f"unknown atom {n!r}")
            out.add(self.atoms.index[n])
        return frozenset(out)

    def signature(self):
        """Name-based canonical form; equal signatures mean isomorphic theories."""
        nm = self.atoms.names

        def lits(c):
            return frozenset((nm[l.atom], l.positive) for l in c.literals)

        return (
            frozenset((nm[a], self.atoms.kinds[a]) for a in range(len(nm))),
            frozenset(lits(c) for c in self.constraints),
            frozenset((s.lower, s.upper, frozenset(nm[a] for a in s.scope)) for s in self.selects),
            frozenset((frozenset(nm[a] for a in r.body), nm[r.head]) for r in self.horn),
            frozenset(lits(c) for c in self.post),
        )

    def sizes(self):
        return {
            "atoms": len(self.atoms),
            "clauses": len(self.constraints),
            "rules": len(self.horn),
            "selects": len(self.selects),
            "posts": len(self.post),
        }


class TheoryBuilder:
    """Incremental construction of a :class:`Theory`.

    Atoms are declared with a kind before they are used.  Duplicate clauses,
    rules and selects are dropped; select upper bounds are clamped to the
    scope size.
    """

    def __init__(self):
        self._names = []
        self._kinds = []
        self._index = {}
        self._constraints = {}
        self._selects = {}
        self._horn = {}
        self._post = {}

    def declare(self, name, kind):
        if name in self._index:
            raise TheoryError(f"atom {name!r} declared twice")
        self._index[name] = len(self._names)
        self._names.append(name)
        self._kinds.append(kind)
        return self._index[name]

    def atom(self, name, kind):
        """Return the id of ``name``, declaring it if needed; kinds must agree."""
        a = self._index.get(name)
        if a is None:
            return self.declare(name, kind)
        if self._kinds[a] is not kind:
            raise KindError(f"atom {name!r} has kind {self._kinds[a].name}, expected {kind.name}")
        return a

    def kind(self, name):
        a = self._index.get(name)
        return None if a is None else self._kinds[a]

    def _resolve(self, x):
        if isinstance(x, str):
            if x not in self._index:
                raise InvalidAtom(f"undeclared atom {x!r}")
            return self._index[x]
        if not 0 <= x < len(self._names):
            raise InvalidAtom(f"atom id {x} out of range")
        return x

    def _literals(self, lits):
        out = []
        for l in lits:
            if isinstance(l, Literal):
                out.append(Literal(self._resolve(l.atom), l.positive))
            elif isinstance(l, str) and l.startswith("-"):
                out.append(Literal(self._resolve(l[1:]), False))
            elif isinstance(l, tuple):
                out.append(Literal(self._resolve(l[0]), bool(l[1])))
            else:
                out.append(Literal(self._resolve(l), True))
        return frozenset(out)

    def add_clause(self, lits):
        c = Clause(self._literals(lits), Role.CONSTRAINT)
        for l in c.literals:
            if self._kinds[l.atom] is not Kind.CONSTRAINT:
                raise KindError(f"constraint clause uses Horn atom {self._names[l.atom]!r}")
        self._constraints.setdefault(c, None)
        return c

    def add_post(self, lits):
        c = Clause(self._literals(lits), Role.POST)
        self._post.setdefault(c, None)
        return c

    def add_rule(self, body, head):
        h = self._resolve(head)
        if self._kinds[h] is not Kind.HORN:
            raise KindError(f"rule head {self._names[h]!r} is not a Horn atom")
        body = tuple(sorted({self._resolve(b) for b in body}))
        r = HornRule(body, h)
        self._horn.setdefault(r, None)
        return r

    def add_select(self, lower, upper, scope):
        scope = frozenset(self._resolve(a) for a in scope)
        if lower < 0 or upper < 0:
            raise TheoryError("select bounds must be nonnegative")
        if lower > upper:
            raise TheoryError(f"select lower bound {lower} exceeds upper bound {upper}")
        for a in scope:
            if self._kinds[a] is not Kind.CONSTRAINT:
                raise KindError(f"select scope uses Horn atom {self._names[a]!r}")
        if lower > len(scope):
            # cannot be met; an empty clause says the same and keeps lower <= upper
            c = Clause(frozenset(), Role.CONSTRAINT)
            self._constraints.setdefault(c, None)
            return c
        s = SelectConstraint(lower, min(upper, len(scope)), scope)
        self._selects.setdefault(s, None)
        return s

    def build(self):
        table = AtomTable(tuple(self._names), tuple(self._kinds), dict(self._index))
        return Theory(table, tuple(self._constraints), tuple(self._selects),
                      tuple(self._horn), tuple(self._post))


def least_model(rules, seed):
    """Least set containing ``seed`` and closed under ``rules``.

    Counter-based forward chaining: each rule tracks how many of its body
    atoms are still missing, so total work is linear in the rule sizes.
    """
    model = set(seed)
    missing = []
    watch = {}
    queue = []
    for i, r in enumerate(rules):
        body = set(r.body)
        n = 0
        for a in body:
            if a not in model:
                n += 1
                watch.setdefault(a, []).append(i)
        missing.append(n)
        if n == 0 and r.head not in model:
            model.add(r.head)
            queue.append(r.head)
    while queue:
        a = queue.pop()
        for i in watch.get(a, ()):
            missing[i] -= 1
            if missing[i] == 0:
                h = rules[i].head
                if h not in model:
                    model.add(h)
                    queue.append(h)
    return model


def check_pre_constraints(trues, theory):
    """True iff ``trues`` satisfies every constraint clause and select."""
    trues = trues if isinstance(trues, (set, frozenset)) else set(trues)
    return (all(c.satisfied_by(trues) for c in theory.constraints)
            and all(s.holds(trues) for s in theory.selects))


@dataclass(frozen=True)
class ClosureResult:
    closure: frozenset
    derived: frozenset


@dataclass(frozen=True)
class Verdict:
    ok: bool
    closure: ClosureResult | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


def _show_clause(theory, c):
    nm = theory.atoms.names
    return " | ".join(("" if l.positive else "-") + nm[l.atom] for l in c.sorted_literals()) or "<empty>"


def is_answer_set(theory, trues):
    """Decide whether ``trues`` (a set of At_C atom ids) is an answer set.

    Raises :class:`InvalidAtom` if a Horn atom is included.
    """
    trues = frozenset(trues)
    kinds = theory.atoms.kinds
    for a in trues:
        if not 0 <= a < len(kinds):
            raise InvalidAtom(f"atom id {a} out of range")
        if kinds[a] is not Kind.CONSTRAINT:
            raise InvalidAtom(f"{theory.atoms.names[a]!r} is a Horn atom")
    app = theory.appearing
    for a in sorted(trues):
        if a not in app:
            return Verdict(False, reason=f"atom {theory.atoms.names[a]} does not occur in the theory")
    for i, c in enumerate(theory.constraints):
        if not c.satisfied_by(trues):
            return Verdict(False, reason=f"constraint clause {i} violated: {_show_clause(theory, c)}")
    for i, s in enumerate(theory.selects):
        if not s.holds(trues):
            k = len(s.scope & trues)
            return Verdict(False, reason=f"select {i} violated: {k} true, bounds [{s.lower}, {s.upper}]")
    closure = frozenset(least_model(theory.horn, trues))
    for i, c in enumerate(theory.post):
        if not c.satisfied_by(closure):
            return Verdict(False, reason=f"post clause {i} violated: {_show_clause(theory, c)}")
    return Verdict(True, ClosureResult(closure, closure - trues))


MAX_BRUTE_FORCE_ATOMS = 25


def brute_force_answer_sets(theory, cap=None):
    """All answer sets by exhaustive enumeration of subsets of At_C(T).

    Subsets are visited in binary counting order with the lowest atom id as
    the least significant bit.
    """
    atoms = theory.constraint_atoms
    if len(atoms) > MAX_BRUTE_FORCE_ATOMS:
        raise TooLarge(f"{len(atoms)} constraint atoms exceeds the limit of {MAX_BRUTE_FORCE_ATOMS}")
    found = []
    for mask in range(1 << len(atoms)):
        m = frozenset(a for i, a in enumerate(atoms) if mask >> i & 1)
        if is_answer_set(theory, m):
            found.append(m)
            if cap is not None and len(found) >= cap:
                break
    return found
