"""Predicate-level DC programs and their grounding into propositional theories.

Surface syntax (statements end with ``.``, ``%`` starts a comment)::

    #domain vertex = {1,2,3}.          % explicit domain (a..b ranges allowed)
    #domain vertex = edge[1].          % column 1 of the EDB relation edge
    #var X, Y : vertex.
    edge(1,2).                         % EDB fact
    c: -hc(X,Y) | -hc(X,Z) :- edge(X,Y), edge(X,Z), Y < Z.
    h: vstd(X), hc(X,Y) -> vstd(Y) :- edge(X,Y), not start(X).
    p: vstd(X).
    s: 1 1 C : color(X,C).

Atoms after ``:-`` are EDB lookups; atoms before it are IDB atoms.  IDB
predicates that head some Horn schema are Horn atoms, all others are
constraint atoms.  Variables start with an upper-case letter; constants are
integers or lower-case symbols.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product

from .core import Kind, TheoryBuilder
from .fmt import ParseDiagnostic, ParseError

INT_LIMIT = 2**63 - 1


class GroundError(ValueError):
    pass


class GroundTypeError(GroundError, TypeError):
    pass


class EmptyDomainWarning(UserWarning):
    pass


# -- terms and atoms ---------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    value: int | str

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object

    def __str__(self):
        return f"({self.left}{self.op}{self.right})"


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple = ()

    def __str__(self):
        if not self.args:
            return self.pred
        return f"{self.pred}({','.join(_term_text(a) for a in self.args)})"


@dataclass(frozen=True)
class Comparison:
    op: str
    left: object
    right: object

    def __str__(self):
        return f"{_term_text(self.left)} {self.op} {_term_text(self.right)}"


@dataclass(frozen=True)
class GuardAtom:
    atom: Atom
    negated: bool = False

    def __str__(self):
        return ("not " if self.negated else "") + str(self.atom)


def _term_text(t):
    s = str(t)
    if isinstance(t, BinOp) and s.startswith("(") and s.endswith(")"):
        return s[1:-1]
    return s


def term_vars(t, out):
    if isinstance(t, Var):
        if t.name not in out:
            out.append(t.name)
    elif isinstance(t, BinOp):
        term_vars(t.left, out)
        term_vars(t.right, out)
    elif isinstance(t, Atom):
        for a in t.args:
            term_vars(a, out)
    elif isinstance(t, GuardAtom):
        term_vars(t.atom, out)
    elif isinstance(t, Comparison):
        term_vars(t.left, out)
        term_vars(t.right, out)
    return out


@dataclass(frozen=True)
class Schema:
    kind: str  # "clause", "horn", "post" or "select"
    literals: tuple = ()  # (Atom, positive) pairs, clause and post schemas
    body: tuple = ()  # horn schemas
    head: Atom | None = None  # horn head, or select target
    lower: int = 0
    upper: int = 0
    bound: tuple = ()  # select variables that range within one scope
    guard: tuple = ()
    line: int = 0

    @property
    def variables(self):
        out = []
        for a, _ in self.literals:
            term_vars(a, out)
        for a in self.body:
            term_vars(a, out)
        if self.head is not None:
            term_vars(self.head, out)
        for v in self.bound:
            if v not in out:
                out.append(v)
        for g in self.guard:
            term_vars(g, out)
        return out

    def __str__(self):
        if self.kind in ("clause", "post"):
            core = " | ".join(("" if pos else "-") + str(a) for a, pos in self.literals)
            text = ("c: " if self.kind == "clause" else "p: ") + core
        elif self.kind == "horn":
            body = ", ".join(str(a) for a in self.body)
            text = f"h: {body} -> {self.head}" if body else f"h: -> {self.head}"
        else:
            text = f"s: {self.lower} {self.upper} {','.join(self.bound)} : {self.head}"
        if self.guard:
            text += " :- " + ", ".join(str(g) for g in self.guard)
        return text + "."


@dataclass(frozen=True)
class _Projection:
    pred: str
    column: int


@dataclass
class PredicateProgram:
    edb: dict = field(default_factory=dict)  # pred -> {tuple: None}, insertion ordered
    domains: dict = field(default_factory=dict)  # name -> tuple of constants | (pred, column)
    var_decls: dict = field(default_factory=dict)  # variable -> domain name
    idb: list = field(default_factory=list)
    kinds: dict = field(default_factory=dict)  # IDB pred -> Kind
    arities: dict = field(default_factory=dict)

    def facts(self, pred):
        return self.edb.get(pred, {})

    def schemas(self, kind):
        return [s for s in self.idb if s.kind == kind]


def format_program(program):
    """Render a program back into the surface syntax."""
    lines = []
    for name, dom in program.domains.items():
        if isinstance(dom, _Projection):
            lines.append(f"#domain {name} = {dom.pred}[{dom.column}].")
        else:
            lines.append(f"#domain {name} = {{{','.join(str(c) for c in dom)}}}.")
    by_domain = {}
    for v, d in program.var_decls.items():
        by_domain.setdefault(d, []).append(v)
    for d, vs in by_domain.items():
        lines.append(f"#var {', '.join(vs)} : {d}.")
    for pred, facts in program.edb.items():
        for t in facts:
            lines.append(str(Atom(pred, tuple(Const(c) for c in t))) + ".")
    for s in program.idb:
        lines.append(str(s))
    return "\n".join(lines) + "\n"


# -- tokenizer and parser ----------------------------------------------------

_TOKEN_SPEC = [
    ("ws", r"[ \t\r]+"),
    ("nl", r"\n"),
    ("comment", r"%[^\n]*"),
    ("directive", r"#[a-z]+"),
    ("int", r"\d+"),
    ("name", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("op", r":-|->|\.\.|!=|<=|>=|==|[=<>(){}\[\],|:.+\-*]"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{n}>{p})" for n, p in _TOKEN_SPEC))
_CMP = {"=", "==", "!=", "<", "<=", ">", ">="}


class _Err(Exception):
    def __init__(self, tok, message, code="syntax"):
        self.line, self.column = (tok[2], tok[3]) if tok else (1, 1)
        self.message = message
        self.code = code


def _tokenize(text):
    toks = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise _Err(("?", "?", line, pos - start + 1), f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            toks.append((kind, m.group(), line, pos - start + 1))
        pos = m.end()
    return toks


def _is_var(name):
    return name[0].isupper() or name[0] == "_"


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def next(self):
        t = self.peek()
        if t is None:
            last = self.toks[-1] if self.toks else None
            raise _Err(last, "unexpected end of input")
        self.i += 1
        return t

    def at(self, value, k=0):
        t = self.peek(k)
        return t is not None and t[1] == value and t[0] in ("op", "name", "directive")

    def expect(self, value):
        t = self.next()
        if t[1] != value:
            raise _Err(t, f"expected {value!r}, got {t[1]!r}")
        return t

    def skip_statement(self):
        while self.peek() is not None and not self.at("."):
            self.i += 1
        if self.peek() is not None:
            self.i += 1

    # expressions
    def expr(self):
        left = self.mul()
        while self.at("+") or self.at("-"):
            op = self.next()[1]
            left = BinOp(op, left, self.mul())
        return left

    def mul(self):
        left = self.factor()
        while self.at("*"):
            self.next()
            left = BinOp("*", left, self.factor())
        return left

    def factor(self):
        t = self.next()
        if t[0] == "int":
            return Const(int(t[1]))
        if t[1] == "-" and t[0] == "op":
            f = self.factor()
            if isinstance(f, Const) and isinstance(f.value, int):
                return Const(-f.value)
            return BinOp("-", Const(0), f)
        if t[1] == "(" and t[0] == "op":
            e = self.expr()
            self.expect(")")
            return e
        if t[0] == "name":
            return Var(t[1]) if _is_var(t[1]) else Const(t[1])
        raise _Err(t, f"unexpected token {t[1]!r} in expression")

    def atom(self):
        t = self.next()
        if t[0] != "name" or _is_var(t[1]):
            raise _Err(t, f"expected a predicate name, got {t[1]!r}")
        args = []
        if self.at("("):
            self.next()
            args.append(self.expr())
            while self.at(","):
                self.next()
                args.append(self.expr())
            self.expect(")")
        return Atom(t[1], tuple(args)), t

    def guard(self):
        items = []
        if self.at("."):
            return items
        while True:
            items.append(self.guard_item())
            if not self.at(","):
                return items
            self.next()

    def guard_item(self):
        t = self.peek()
        if t is None:
            raise _Err(None, "unexpected end of input")
        if t[0] == "name" and t[1] == "not" and self.peek(1) and self.peek(1)[0] == "name":
            self.next()
            a, at = self.atom()
            return GuardAtom(a, True), at
        if t[0] == "name" and not _is_var(t[1]):
            nxt = self.peek(1)
            if nxt is not None and (nxt[1] == "(" or nxt[1] in (",", ".")):
                a, at = self.atom()
                return GuardAtom(a), at
        left = self.expr()
        op = self.next()
        if op[1] not in _CMP:
            raise _Err(op, f"expected a comparison operator, got {op[1]!r}")
        right = self.expr()
        return Comparison("==" if op[1] == "=" else op[1], left, right), t


def parse_program(text):
    """Parse a predicate program; raises :class:`ParseError` on any error."""
    prog = PredicateProgram()
    diags = []
    try:
        toks = _tokenize(text)
    except _Err as e:
        raise ParseError([ParseDiagnostic(e.line, e.column, "error", e.message, e.code)])
    p = _Parser(toks)
    schema_atoms = []  # (Atom, token, role) for IDB uses
    guard_atoms = []  # (Atom, token)
    while p.peek() is not None:
        start = p.i
        try:
            _statement(p, prog, schema_atoms, guard_atoms)
        except _Err as e:
            diags.append(ParseDiagnostic(e.line, e.column, "error", e.message, e.code))
            if p.i == start:
                p.i += 1
            if p.toks[p.i - 1][1] != ".":
                p.skip_statement()
    diags.extend(_check(prog, schema_atoms, guard_atoms))
    if any(d.severity == "error" for d in diags):
        raise ParseError(diags)
    return prog


def _statement(p, prog, schema_atoms, guard_atoms):
    t = p.peek()
    if t[0] == "directive":
        p.next()
        if t[1] == "#domain":
            name = p.next()
            if name[0] != "name":
                raise _Err(name, "expected a domain name")
            if name[1] in prog.domains:
                raise _Err(name, f"domain {name[1]!r} declared twice", "duplicate")
            p.expect("=")
            if p.at("{"):
                p.next()
                values = []
                while not p.at("}"):
                    lo = p.factor()
                    if not isinstance(lo, Const):
                        raise _Err(p.toks[p.i - 1], "domain elements must be constants")
                    if p.at(".."):
                        p.next()
                        hi = p.factor()
                        if not (isinstance(lo.value, int) and isinstance(hi, Const) and isinstance(hi.value, int)):
                            raise _Err(p.toks[p.i - 1], "range bounds must be integers")
                        values.extend(range(lo.value, hi.value + 1))
                    else:
                        values.append(lo.value)
                    if not p.at("}"):
                        p.expect(",")
                p.expect("}")
                prog.domains[name[1]] = tuple(dict.fromkeys(values))
            else:
                pred = p.next()
                if pred[0] != "name" or _is_var(pred[1]):
                    raise _Err(pred, "expected '{' or an EDB predicate")
                p.expect("[")
                col = p.next()
                if col[0] != "int" or int(col[1]) < 1:
                    raise _Err(col, "column index must be a positive integer")
                p.expect("]")
                prog.domains[name[1]] = _Projection(pred[1], int(col[1]))
                guard_atoms.append((Atom(pred[1], ()), pred, int(col[1])))
            p.expect(".")
        elif t[1] == "#var":
            names = []
            while True:
                v = p.next()
                if v[0] != "name" or not _is_var(v[1]):
                    raise _Err(v, f"expected a variable name, got {v[1]!r}")
                names.append(v)
                if not p.at(","):
                    break
                p.next()
            p.expect(":")
            dom = p.next()
            if dom[1] not in prog.domains:
                raise _Err(dom, f"unknown domain {dom[1]!r}", "undeclared")
            p.expect(".")
            for v in names:
                if v[1] in prog.var_decls:
                    raise _Err(v, f"variable {v[1]!r} declared twice", "duplicate")
                prog.var_decls[v[1]] = dom[1]
        else:
            raise _Err(t, f"unknown directive {t[1]!r}")
        return
    if t[0] == "name" and t[1] in ("c", "h", "p", "s") and p.at(":", 1):
        p.next()
        p.next()
        schema = _schema(p, t, prog, schema_atoms, guard_atoms)
        prog.idb.append(schema)
        return
    a, at = p.atom()
    p.expect(".")
    values = []
    for arg in a.args:
        if not isinstance(arg, Const):
            raise _Err(at, f"EDB fact {a} must be ground")
        values.append(arg.value)
    guard_atoms.append((a, at, None))
    prog.edb.setdefault(a.pred, {})[tuple(values)] = None


def _schema(p, t, prog, schema_atoms, guard_atoms):
    tag = t[1]
    kw = {"line": t[2]}
    if tag in ("c", "p"):
        lits = []
        while True:
            pos = True
            if p.at("-"):
                p.next()
                pos = False
            a, at = p.atom()
            schema_atoms.append((a, at, tag))
            lits.append((a, pos))
            if not p.at("|"):
                break
            p.next()
        kw.update(kind="clause" if tag == "c" else "post", literals=tuple(lits))
    elif tag == "h":
        body = []
        if not p.at("->"):
            while True:
                a, at = p.atom()
                schema_atoms.append((a, at, "body"))
                body.append(a)
                if not p.at(","):
                    break
                p.next()
        p.expect("->")
        head, ht = p.atom()
        schema_atoms.append((head, ht, "head"))
        kw.update(kind="horn", body=tuple(body), head=head)
    else:
        lo, hi = p.next(), p.next()
        if lo[0] != "int" or hi[0] != "int":
            raise _Err(lo, "select bounds must be nonnegative integers")
        if int(lo[1]) > int(hi[1]):
            raise _Err(lo, f"select lower bound {lo[1]} exceeds upper bound {hi[1]}", "kind")
        bound = []
        while not p.at(":"):
            v = p.next()
            if v[0] != "name" or not _is_var(v[1]):
                raise _Err(v, f"expected a bound variable, got {v[1]!r}")
            bound.append(v[1])
            if not p.at(":"):
                p.expect(",")
        p.expect(":")
        target, tt = p.atom()
        schema_atoms.append((target, tt, "select"))
        kw.update(kind="select", head=target, lower=int(lo[1]), upper=int(hi[1]), bound=tuple(bound))
    guard = []
    if p.at(":-"):
        p.next()
        for item, it in p.guard():
            guard.append(item)
            if isinstance(item, GuardAtom):
                guard_atoms.append((item.atom, it, None))
    p.expect(".")
    schema = Schema(guard=tuple(guard), **kw)
    for v in schema.variables:
        if v not in prog.var_decls:
            raise _Err(t, f"variable {v!r} is not declared", "undeclared")
    for v in schema.bound:
        if schema.head is None or v not in term_vars(schema.head, []):
            raise _Err(t, f"bound variable {v!r} does not occur in the select target", "syntax")
    return schema


def _check(prog, schema_atoms, guard_atoms):
    diags = []
    arity = {}

    def note(a, tok, n):
        if a.pred in arity and arity[a.pred] != n:
            diags.append(ParseDiagnostic(tok[2], tok[3], "error",
                                         f"predicate {a.pred!r} used with arity {n} and {arity[a.pred]}",
                                         "arity"))
        arity.setdefault(a.pred, n)

    edb_preds = set()
    for a, tok, col in guard_atoms:
        edb_preds.add(a.pred)
        if col is None:
            note(a, tok, len(a.args))
    idb_preds = {}
    for a, tok, role in schema_atoms:
        note(a, tok, len(a.args))
        if a.pred in edb_preds:
            diags.append(ParseDiagnostic(tok[2], tok[3], "error",
                                         f"predicate {a.pred!r} is used both as EDB and IDB", "kind"))
        idb_preds.setdefault(a.pred, []).append((tok, role))
    for a, tok, col in guard_atoms:
        if col is not None and a.pred in arity and col > arity[a.pred]:
            diags.append(ParseDiagnostic(tok[2], tok[3], "error",
                                         f"column {col} out of range for {a.pred!r}/{arity[a.pred]}", "arity"))
    heads = {a.pred for a, _, role in schema_atoms if role == "head"}
    for pred, uses in idb_preds.items():
        prog.kinds[pred] = Kind.HORN if pred in heads else Kind.CONSTRAINT
        if pred in heads:
            for tok, role in uses:
                if role == "c":
                    diags.append(ParseDiagnostic(tok[2], tok[3], "error",
                                                 f"clause schema uses Horn predicate {pred!r}", "kind"))
                elif role == "select":
                    diags.append(ParseDiagnostic(tok[2], tok[3], "error",
                                                 f"select targets Horn predicate {pred!r}", "kind"))
    prog.arities = arity
    return diags


# -- evaluation --------------------------------------------------------------

def compute_ranges(program, warn=True):
    """Map every declared variable to the ordered constants of its domain."""
    import warnings

    doms = {}
    for name, d in program.domains.items():
        if isinstance(d, _Projection):
            seen = {}
            for t in program.facts(d.pred):
                seen[t[d.column - 1]] = None
            doms[name] = tuple(seen)
        else:
            doms[name] = tuple(d)
        if not doms[name] and warn:
            warnings.warn(f"domain {name!r} is empty", EmptyDomainWarning, stacklevel=2)
    return {v: doms[d] for v, d in program.var_decls.items()}


def _check_int(v):
    if not -INT_LIMIT - 1 <= v <= INT_LIMIT:
        raise GroundError(f"integer overflow: {v}")
    return v


def eval_term(t, sub):
    if isinstance(t, Const):
        return t.value
    if isinstance(t, Var):
        return sub[t.name]
    left = eval_term(t.left, sub)
    right = eval_term(t.right, sub)
    if not (isinstance(left, int) and isinstance(right, int)):
        raise GroundTypeError(f"arithmetic on a symbol in {t} under {_show_sub(sub)}")
    if t.op == "+":
        return _check_int(left + right)
    if t.op == "-":
        return _check_int(left - right)
    return _check_int(left * right)


def _order_key(v):
    return (1, v) if isinstance(v, str) else (0, v)


def _compare(op, a, b):
    if op == "==":
        return a == b
    if op == "!=":
        return a != b
    ka, kb = _order_key(a), _order_key(b)
    if op == "<":
        return ka < kb
    if op == "<=":
        return ka <= kb
    if op == ">":
        return ka > kb
    return ka >= kb


def _show_sub(sub):
    return "{" + ", ".join(f"{k}->{v}" for k, v in sub.items()) + "}"


def _eval_item(g, sub, edb):
    if isinstance(g, GuardAtom):
        key = tuple(eval_term(a, sub) for a in g.atom.args)
        return (key in edb.get(g.atom.pred, ())) != g.negated
    return _compare(g.op, eval_term(g.left, sub), eval_term(g.right, sub))


def eval_guard(guard, sub, edb):
    """True iff every conjunct of ``guard`` holds under ``sub``.

    ``edb`` maps predicate names to collections of argument tuples; negated
    atoms are evaluated by closed-world lookup.
    """
    return all(_eval_item(g, sub, edb) for g in guard)


def substitutions(variables, ranges, guard, edb, base=None):
    """Yield substitutions over ``variables`` whose guard holds.

    Order is lexicographic over the variables' ranges.  Each conjunct is
    tested as soon as its variables are bound, which yields exactly the
    product-then-filter sequence.
    """
    base = dict(base or {})
    bound = set(base)
    stages = [[] for _ in range(len(variables) + 1)]
    for g in guard:
        vs = term_vars(g, [])
        depth = 0
        for v in vs:
            if v not in bound:
                if v not in variables:
                    raise GroundError(f"guard variable {v!r} is unbound")
                depth = max(depth, variables.index(v) + 1)
        stages[depth].append(g)
    sub = base

    def rec(i):
        for g in stages[i]:
            if not _eval_item(g, sub, edb):
                return
        if i == len(variables):
            yield dict(sub)
            return
        v = variables[i]
        for c in ranges[v]:
            sub[v] = c
            yield from rec(i + 1)
        sub.pop(v, None)

    yield from rec(0)


def naive_substitutions(variables, ranges, guard, edb):
    """Reference enumeration: full cross product, then filter."""
    for values in product(*(ranges[v] for v in variables)):
        sub = dict(zip(variables, values))
        if eval_guard(guard, sub, edb):
            yield sub


def ground_atom_name(atom, sub):
    if not atom.args:
        return atom.pred
    vals = []
    for a in atom.args:
        v = eval_term(a, sub)
        if isinstance(v, int) and v < 0:
            raise GroundError(f"negative constant {v} in ground atom {atom.pred} under {_show_sub(sub)}")
        vals.append(str(v))
    return f"{atom.pred}({','.join(vals)})"


def ground(program, enumerate_substitutions=substitutions):
    """Instantiate every schema over its variables' ranges into a Theory."""
    ranges = compute_ranges(program)
    edb = program.edb
    kinds = program.kinds
    b = TheoryBuilder()

    def atom_id(a, sub):
        return b.atom(ground_atom_name(a, sub), kinds[a.pred])

    for s in program.idb:
        vs = s.variables
        if s.kind == "select":
            xs = [v for v in vs if v not in s.bound]
            ys = list(s.bound)
            x_only = [g for g in s.guard if set(term_vars(g, [])) <= set(xs)]
            rest = [g for g in s.guard if g not in x_only]
            for xsub in enumerate_substitutions(xs, ranges, x_only, edb):
                scope = []
                for full in _extend(ys, ranges, rest, edb, xsub, enumerate_substitutions):
                    scope.append(atom_id(s.head, full))
                b.add_select(s.lower, s.upper, scope)
            continue
        for sub in enumerate_substitutions(vs, ranges, s.guard, edb):
            if s.kind == "clause":
                b.add_clause([(atom_id(a, sub), pos) for a, pos in s.literals])
            elif s.kind == "post":
                b.add_post([(atom_id(a, sub), pos) for a, pos in s.literals])
            else:
                body = [atom_id(a, sub) for a in s.body]
                b.add_rule(body, atom_id(s.head, sub))
    return b.build()


def _extend(ys, ranges, guard, edb, xsub, enumerate_substitutions):
    if enumerate_substitutions is substitutions:
        yield from substitutions(ys, ranges, guard, edb, base=xsub)
        return
    for ysub in enumerate_substitutions(ys, ranges, [], edb):
        full = {**xsub, **ysub}
        if eval_guard(guard, full, edb):
            yield full
