"""Line-oriented text format for propositional DC theories.

::

    dc 1.0
    #atoms c: a b          % guessable atoms
    #atoms h: d            % Horn-derived atoms
    c: -a b                % constraint clause
    s: 1 2 : a b           % select: between 1 and 2 of {a, b}
    h: a -> d              % Horn rule
    p: -d                  % post-constraint clause

Atoms must be declared before use.  ``%`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Kind, KindError, TheoryBuilder, TheoryError

VERSION = "1.0"
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_()'\",.]*\Z")
_TOKEN_RE = re.compile(r"\S+")


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    severity: str  # "error" or "warning"
    message: str
    code: str = ""

    def __str__(self):
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class ParseError(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


class _LineError(Exception):
    def __init__(self, column, message, code="syntax"):
        self.column = column
        self.message = message
        self.code = code


def _tokens(line):
    return [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(line)]


def _name(tok, col):
    if not NAME_RE.match(tok):
        raise _LineError(col, f"syntax error: invalid atom name {tok!r}")
    return tok


def _int(tok, col):
    if not re.fullmatch(r"\d+", tok):
        raise _LineError(col, f"syntax error: expected a nonnegative integer, got {tok!r}")
    return int(tok)


def parse_theory(text):
    """Parse a theory; raises :class:`ParseError` listing every error found."""
    b = TheoryBuilder()
    diags = []
    seen_header = False

    def use(tok, col, kind=None):
        name = _name(tok, col)
        k = b.kind(name)
        if k is None:
            raise _LineError(col, f"undeclared atom {name!r}", "undeclared")
        if kind is not None and k is not kind:
            raise _LineError(col, f"kind error: {name!r} is a {k.name.lower()} atom, "
                                  f"expected {kind.name.lower()}", "kind")
        return name

    def lits(toks, kind=None):
        out = []
        for tok, col in toks:
            if tok.startswith("-"):
                out.append("-" + use(tok[1:], col + 1, kind))
            else:
                out.append(use(tok, col, kind))
        return out

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        tag, col0 = toks[0]
        try:
            if not seen_header:
                if tag != "dc" or len(toks) != 2:
                    raise _LineError(col0, "syntax error: expected header 'dc 1.0'")
                seen_header = True
                if toks[1][0] != VERSION:
                    raise _LineError(toks[1][1], f"unsupported format version {toks[1][0]!r}", "version")
            elif tag == "#atoms":
                if len(toks) < 2 or toks[1][0] not in ("c:", "h:"):
                    raise _LineError(col0, "syntax error: expected '#atoms c:' or '#atoms h:'")
                kind = Kind.CONSTRAINT if toks[1][0] == "c:" else Kind.HORN
                for tok, col in toks[2:]:
                    if b.kind(_name(tok, col)) is not None:
                        diags.append(ParseDiagnostic(lineno, col, "error", f"duplicate declaration of {tok!r}",
                                                     "duplicate"))
                    else:
                        b.declare(tok, kind)
            elif tag == "c:":
                b.add_clause(lits(toks[1:], Kind.CONSTRAINT))
            elif tag == "p:":
                b.add_post(lits(toks[1:]))
            elif tag == "h:":
                arrows = [i for i, (t, _) in enumerate(toks) if t == "->"]
                if len(arrows) != 1 or arrows[0] != len(toks) - 2:
                    raise _LineError(col0, "syntax error: Horn rule must read 'h: body... -> head'")
                body = [use(t, c) for t, c in toks[1:-2]]
                head = use(toks[-1][0], toks[-1][1], Kind.HORN)
                b.add_rule(body, head)
            elif tag == "s:":
                if len(toks) < 4 or toks[3][0] != ":":
                    raise _LineError(col0, "syntax error: select must read 's: <n> <m> : atoms...'")
                lo = _int(*toks[1])
                hi = _int(*toks[2])
                if lo > hi:
                    raise _LineError(toks[1][1], f"select lower bound {lo} exceeds upper bound {hi}")
                b.add_select(lo, hi, [use(t, c, Kind.CONSTRAINT) for t, c in toks[4:]])
            else:
                raise _LineError(col0, f"syntax error: unknown line tag {tag!r}")
        except _LineError as e:
            diags.append(ParseDiagnostic(lineno, e.column, "error", e.message, e.code))
        except KindError as e:
            diags.append(ParseDiagnostic(lineno, col0, "error", str(e), "kind"))
        except TheoryError as e:
            diags.append(ParseDiagnostic(lineno, col0, "error", str(e), "syntax"))
    if not seen_header:
        diags.append(ParseDiagnostic(1, 1, "error", "missing header 'dc 1.0'", "syntax"))
    if diags:
        raise ParseError(diags)
    return b.build()


def _lit_text(theory, l):
    return ("" if l.positive else "-") + theory.atoms.names[l.atom]


def _layout(theory):
    """Yield (line text, item) pairs in serialization order."""
    nm = theory.atoms.names
    kinds = theory.atoms.kinds
    yield f"dc {VERSION}", None
    yield " ".join(["#atoms c:"] + [n for n, k in zip(nm, kinds) if k is Kind.CONSTRAINT]), None
    yield " ".join(["#atoms h:"] + [n for n, k in zip(nm, kinds) if k is Kind.HORN]), None
    for c in theory.constraints:
        yield " ".join(["c:"] + [_lit_text(theory, l) for l in c.sorted_literals()]), c
    for s in theory.selects:
        yield " ".join(["s:", str(s.lower), str(s.upper), ":"] + [nm[a] for a in sorted(s.scope)]), s
    for r in theory.horn:
        yield " ".join(["h:"] + [nm[a] for a in r.body] + ["->", nm[r.head]]), r
    for c in theory.post:
        yield " ".join(["p:"] + [_lit_text(theory, l) for l in c.sorted_literals()]), c


def serialize_theory(theory):
    return "".join(line + "\n" for line, _ in _layout(theory))


def validate_theory(theory):
    """Diagnostics for a built theory; line numbers refer to its serialized form."""
    out = []
    kinds = theory.atoms.kinds
    n = len(kinds)
    app = theory.appearing
    for a in range(n):
        if a not in app:
            line = 2 if kinds[a] is Kind.CONSTRAINT else 3
            out.append(ParseDiagnostic(line, 1, "warning", f"atom {theory.atoms.names[a]!r} is declared but unused"))
    for lineno, (_, item) in enumerate(_layout(theory), 1):
        if item is None:
            continue
        atoms = set()
        if hasattr(item, "literals"):
            atoms = {l.atom for l in item.literals}
        elif hasattr(item, "scope"):
            atoms = set(item.scope)
        else:
            atoms = set(item.body) | {item.head}
        if any(not 0 <= a < n for a in atoms):
            out.append(ParseDiagnostic(lineno, 1, "error", "reference to an undefined atom id"))
            continue
        if hasattr(item, "literals"):
            if item in theory.constraints and any(kinds[a] is not Kind.CONSTRAINT for a in atoms):
                out.append(ParseDiagnostic(lineno, 1, "error", "constraint clause uses a Horn atom"))
            if item.tautological:
                out.append(ParseDiagnostic(lineno, 1, "warning", "tautological clause"))
        elif hasattr(item, "scope"):
            if item.lower > item.upper:
                out.append(ParseDiagnostic(lineno, 1, "error", "select lower bound exceeds upper bound"))
            if item.upper > len(item.scope):
                out.append(ParseDiagnostic(lineno, 1, "error", "select upper bound exceeds scope size"))
            if any(kinds[a] is not Kind.CONSTRAINT for a in atoms):
                out.append(ParseDiagnostic(lineno, 1, "error", "select scope uses a Horn atom"))
            if not item.scope:
                out.append(ParseDiagnostic(lineno, 1, "warning", "select with empty scope"))
        elif kinds[item.head] is not Kind.HORN:
            out.append(ParseDiagnostic(lineno, 1, "error", "rule head is not a Horn atom"))
    return out


def parse_model(text):
    """Atom names from a model listing; lines starting with 's ', 'v ' or 'c ' are skipped."""
    names = []
    for raw in text.splitlines():
        line = raw.split("%", 1)[0].strip()
        if not line or line[:2] in ("s ", "v ", "c "):
            continue
        names.extend(line.split())
    return names


