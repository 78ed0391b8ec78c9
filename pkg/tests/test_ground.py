import warnings

import pytest
from hypothesis import given, strategies as st

from dcasp.bench import Digraph, gen_hamilton, gen_schur, hamilton_theory, hamilton_text, random_digraph
from dcasp.fmt import ParseError, serialize_theory, validate_theory
from dcasp.ground import (
    EmptyDomainWarning,
    GroundError,
    GroundTypeError,
    compute_ranges,
    eval_guard,
    format_program,
    ground,
    naive_substitutions,
    parse_program,
    substitutions,
)

from oracles import schur_pairs

TRIANGLE = Digraph(3, ((1, 2), (2, 3), (3, 1)))


def guard_of(text):
    """Guard of the single clause schema in a tiny program."""
    return parse_program(text).idb[0].guard


def codes(text):
    with pytest.raises(ParseError) as e:
        parse_program(text)
    return [d.code for d in e.value.diagnostics]


class TestParse:
    def test_hamilton_schema_counts(self):
        kinds = [s.kind for s in gen_hamilton(TRIANGLE).idb]
        assert (kinds.count("clause"), kinds.count("horn"), kinds.count("post")) == (2, 2, 1)

    def test_arity_mismatch(self):
        assert codes("edge(1,2).\nedge(1).\n") == ["arity"]

    def test_undeclared_variable(self):
        assert codes("#domain d = {1}.\n#var X : d.\nc: p(X) | p(Z).\n") == ["undeclared"]

    def test_kinds_inferred(self):
        prog = gen_hamilton(TRIANGLE)
        assert prog.kinds["hc"].name == "CONSTRAINT"
        assert prog.kinds["vstd"].name == "HORN"

    def test_select_on_horn_rejected(self):
        text = "#domain d = {1}.\n#var X : d.\nh: -> q(X).\ns: 0 1 X : q(X).\n"
        assert "kind" in codes(text)

    def test_clause_on_horn_rejected(self):
        text = "#domain d = {1}.\n#var X : d.\nh: -> q(X).\nc: q(X).\n"
        assert "kind" in codes(text)

    def test_edb_and_idb_clash(self):
        text = "edge(1,2).\n#domain d = {1}.\n#var X : d.\nc: edge(X,X).\n"
        assert codes(text) == ["kind"]

    def test_format_round_trip(self):
        prog = gen_hamilton(TRIANGLE)
        text = format_program(prog)
        assert format_program(parse_program(text)) == text
        assert serialize_theory(ground(parse_program(text))) == serialize_theory(ground(prog))


class TestRanges:
    def test_explicit(self):
        prog = parse_program("#domain vertex = {3,1,2}.\n#var X : vertex.\n")
        assert compute_ranges(prog) == {"X": (3, 1, 2)}

    def test_interval(self):
        prog = parse_program("#domain n = {1..4}.\n#var X : n.\n")
        assert compute_ranges(prog)["X"] == (1, 2, 3, 4)

    def test_projection(self):
        prog = parse_program("edge(1,2). edge(2,3). edge(3,1).\n#domain vertex = edge[1].\n#var X : vertex.\n")
        assert compute_ranges(prog)["X"] == (1, 2, 3)

    def test_projection_first_occurrence(self):
        prog = parse_program("edge(3,1). edge(1,2). edge(3,2).\n#domain d = edge[2].\n#var X : d.\n")
        assert compute_ranges(prog)["X"] == (1, 2)

    def test_empty_domain_warns(self):
        prog = parse_program("#domain d = {}.\n#var X : d.\nc: p(X).\n")
        with pytest.warns(EmptyDomainWarning):
            ranges = compute_ranges(prog)
        assert ranges["X"] == ()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", EmptyDomainWarning)
            assert ground(prog).sizes()["clauses"] == 0


class TestGuards:
    def test_edge_and_inequality(self):
        g = guard_of("edge(1,2).\n#domain d = {1,2}.\n#var X, Y : d.\nc: p(X) :- edge(X,Y), X != Y.\n")
        assert eval_guard(g, {"X": 1, "Y": 2}, {"edge": {(1, 2): None}})

    def test_sum_bound(self):
        g = guard_of("#domain d = {1..13}.\n#var X, Y : d.\nc: p(X) :- X + Y <= 13.\n")
        assert not eval_guard(g, {"X": 6, "Y": 8}, {})
        assert eval_guard(g, {"X": 6, "Y": 7}, {})

    def test_missing_fact(self):
        g = guard_of("#domain d = {red}.\n#var X : d.\nc: p(X) :- color(X).\ncolor(blue).\n")
        assert not eval_guard(g, {"X": "red"}, {"color": {("blue",): None}})

    def test_negated_fact(self):
        g = guard_of("e(1).\n#domain d = {1,2}.\n#var X : d.\nc: p(X) :- not e(X).\n")
        assert not eval_guard(g, {"X": 1}, {"e": {(1,): None}})
        assert eval_guard(g, {"X": 2}, {"e": {(1,): None}})

    def test_arithmetic_on_symbol(self):
        prog = parse_program("#domain d = {a,b}.\n#var X : d.\nc: p(X) :- X + 1 > 2.\n")
        with pytest.raises(GroundTypeError, match="X->a"):
            ground(prog)

    def test_overflow(self):
        prog = parse_program("#domain d = {4611686018427387904}.\n#var X : d.\nc: p(X) :- X * 4 > 0.\n")
        with pytest.raises(GroundError, match="overflow"):
            ground(prog)

    def test_symbol_order(self):
        g = guard_of("#domain d = {a,b,1}.\n#var X, Y : d.\nc: p(X) :- X < Y.\n")
        assert eval_guard(g, {"X": "a", "Y": "b"}, {})
        assert eval_guard(g, {"X": 1, "Y": "a"}, {})
        assert not eval_guard(g, {"X": "b", "Y": "a"}, {})


class TestGround:
    def test_triangle(self):
        t = ground(gen_hamilton(TRIANGLE))
        assert (len(t.constraints), len(t.horn), len(t.post)) == (0, 3, 3)
        posts = sorted(t.atoms.names[next(iter(c.literals)).atom] for c in t.post)
        assert posts == ["vstd(1)", "vstd(2)", "vstd(3)"]

    def test_coloring_selects(self):
        prog = parse_program("#domain v = {1,2}.\n#domain col = {r,g,b}.\n#var X : v.\n#var C : col.\n"
                             "s: 1 1 C : color(X,C).\n")
        t = ground(prog)
        assert [len(s.scope) for s in t.selects] == [3, 3]

    @pytest.mark.parametrize("b,n", [(3, 13), (2, 5), (4, 20), (1, 2)])
    def test_schur_counts(self, b, n):
        t = ground(gen_schur(b, n))
        assert len(t.constraints) == b * schur_pairs(n)
        assert len(t.selects) == n
        assert len(t.constraint_atoms) == b * n
        assert validate_theory(t) == []

    def test_schur_degenerate_clause_is_binary(self):
        t = ground(gen_schur(1, 2))
        assert [len(c.literals) for c in t.constraints] == [2]

    def test_select_x_only_guard_drops_instances(self):
        prog = parse_program("ok(1).\n#domain d = {1,2}.\n#var X, Y : d.\n"
                             "s: 1 1 Y : q(X,Y) :- ok(X), X != Y.\n")
        t = ground(prog)
        (s,) = t.selects
        assert t.names(s.scope) == ["q(1,2)"]

    def test_negative_atom_argument(self):
        prog = parse_program("#domain d = {1}.\n#var X : d.\nc: p(X - 2).\n")
        with pytest.raises(GroundError, match="negative"):
            ground(prog)

    def test_deterministic(self):
        text = hamilton_text(random_digraph(6, 14, 3))
        assert serialize_theory(ground(parse_program(text))) == serialize_theory(ground(parse_program(text)))


@given(st.integers(1, 8), st.data())
def test_hamilton_grounding_isomorphic_to_direct(n, data):
    m = data.draw(st.integers(0, n * (n - 1)))
    g = random_digraph(n, m, data.draw(st.integers(0, 10**6)))
    start = data.draw(st.integers(1, n))
    assert ground(gen_hamilton(g, start)).signature() == hamilton_theory(g, start).signature()


GUARD_PROGRAM = """\
e(1,2). e(2,3). e(3,3). e(2,1). f(a). f(b).
#domain d = {1..4}.
#domain s = {a,b,c}.
#var X, Y, Z : d.
#var S : s.
"""

guard_items = st.sampled_from([
    "e(X,Y)", "not e(Y,Z)", "X < Y", "X + Y <= 5", "Y != Z", "X * 2 = Z", "f(S)", "not f(S)",
    "S != a", "e(Z,X)", "X - Y >= 0",
])


@given(st.lists(guard_items, max_size=4, unique=True), st.sampled_from(["X", "X,Y", "X,Y,Z", "X,S"]))
def test_guard_soundness_against_reference(items, args):
    guard = " :- " + ", ".join(items) if items else ""
    text = GUARD_PROGRAM + f"c: p({args}, X, Y, Z, S){guard}.\n"
    prog = parse_program(text)
    schema = prog.idb[0]
    ranges = compute_ranges(prog)
    fast = list(substitutions(schema.variables, ranges, schema.guard, prog.edb))
    slow = list(naive_substitutions(schema.variables, ranges, schema.guard, prog.edb))
    assert fast == slow
    for sub in fast:
        assert eval_guard(schema.guard, sub, prog.edb)
    assert serialize_theory(ground(prog)) == serialize_theory(ground(prog, naive_substitutions))


@given(st.lists(guard_items, max_size=3, unique=True), st.integers(0, 2))
def test_select_grounding_against_reference(items, lo):
    guard = " :- " + ", ".join(items) if items else ""
    text = GUARD_PROGRAM + f"s: {lo} 2 Y,Z : q(X,Y,Z,S){guard}.\n"
    prog = parse_program(text)
    assert serialize_theory(ground(prog)) == serialize_theory(ground(prog, naive_substitutions))
