# tests/test_digraph.py — container, arc-list codec, contraction, canonical forms
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromapath.corpus import directed_cycle, enumerate_tournaments, transitive_tournament
from chromapath.digraph import (Digraph, canonical_form, contract, dump_arclists, induced, is_isomorphic,
                                is_tournament, parse_arclist, parse_arclists, remove_vertices, to_arclist,
                                to_dot)
from chromapath.errors import InputError, ParseError
from tests.strategies import digraphs, in_degree_bounded, relabelings


# ---- parsing ----

def test_parse_circuit(c3):
    D = parse_arclist("3 3\n0 1\n1 2\n2 0\n")
    assert D == c3
    assert D.n == 3 and D.m == 3 and D.oriented


def test_parse_skips_comments_and_blank_lines():
    D = parse_arclist("# a triangle\n\n3 2\n0 1\n# second arc\n1 2\n")
    assert D.sorted_arcs() == [(0, 1), (1, 2)]


def test_parse_single_vertex():
    D = parse_arclist("1 0")
    assert D.n == 1 and D.m == 0


@pytest.mark.parametrize("text, kind, line", [
    ("3 2\n0 1\n1 0\n", "digon", 3),
    ("3 1\n0 3\n", "out_of_range", 2),
    ("3 1\n-1 2\n", "out_of_range", 2),
    ("-3 1\n", "malformed", 1),
    ("3 2\n0 1\n0 1\n", "duplicate", 3),
    ("3 1\n2 2\n", "loop", 2),
    ("3 3\n0 1\n1 2\n", "count", 3),
    ("3 x\n", "malformed", 1),
    ("3 1\n0 1 2\n", "malformed", 2),
    ("", "malformed", 1),
])
def test_parse_errors_name_kind_and_line(text, kind, line):
    with pytest.raises(ParseError) as err:
        parse_arclist(text)
    assert err.value.kind == kind
    assert err.value.line == line
    assert f"line {line}" in str(err.value)


def test_multi_header_allows_digons():
    D = parse_arclist("2 2 multi\n0 1\n1 0\n")
    assert not D.oriented
    assert D.arcs == {(0, 1), (1, 0)}
    assert to_arclist(D).startswith("2 2 multi\n")


def test_constructor_rejects_digons_in_oriented_mode():
    with pytest.raises(InputError):
        Digraph(2, frozenset({(0, 1), (1, 0)}))


def test_arclist_text_is_stable(c3):
    assert to_arclist(c3) == "3 3\n0 1\n1 2\n2 0\n"
    assert parse_arclist(to_arclist(c3)) == c3


def test_many_arclists(c3, c5):
    assert parse_arclists(dump_arclists([c3, c5])) == [c3, c5]


def test_dot_marks_styles_and_isolated_vertices():
    D = Digraph(3, frozenset({(0, 1)}))
    dot = to_dot(D, styles={(0, 1): "dashed"})
    assert dot.startswith("digraph G {")
    assert "  0 -> 1 [style=dashed];" in dot
    assert "  2;" in dot


# ---- degrees and views ----

def test_degrees(t5):
    assert [t5.out_degree(v) for v in t5.vertices()] == [2] * 5
    assert t5.in_neighbors(0) == (3, 4)
    assert t5.out_neighbors(0) == (1, 2)
    assert t5.max_degree() == t5.min_degree() == 4
    assert t5.max_in_degree() == t5.min_in_degree() == 2


@given(digraphs(max_n=7))
def test_degree_sums_match_arc_count(D):
    assert sum(D.out_degree(v) for v in D.vertices()) == D.m
    assert sum(D.in_degree(v) for v in D.vertices()) == D.m
    assert D.adjacency_matrix().sum() == D.m


# ---- subdigraphs and contraction ----

def test_induced_keeps_origin(c3):
    sub = induced(c3, [1, 0])
    assert sub.origin == (0, 1)
    assert sub.digraph.sorted_arcs() == [(0, 1)]


def test_induced_rejects_unknown_vertex(c3):
    with pytest.raises(InputError):
        induced(c3, [0, 5])


def test_induced_tournament_stays_tournament(t5):
    assert is_tournament(induced(t5, [0, 1, 3, 4]).digraph)


def test_remove_vertices(c5):
    sub = remove_vertices(c5, [2])
    assert sub.origin == (0, 1, 3, 4)
    assert sub.digraph.m == 3


def test_contract_two_circuit_vertices(c4):
    Q, image, hub = contract(c4, [1, 2])
    assert hub == 1
    assert image == (0, 1, 1, 2)
    assert is_isomorphic(Q, directed_cycle(3))


def test_contract_single_vertex_is_a_copy(c5):
    Q, image, hub = contract(c5, [3])
    assert Q == c5
    assert image == tuple(range(5)) and hub == 3


def test_contract_everything(c5):
    Q, _, hub = contract(c5, range(5))
    assert Q.n == 1 and Q.m == 0 and hub == 0


def test_contract_rejects_two_way_vertex(c3):
    with pytest.raises(InputError, match="vertex 2"):
        contract(c3, [0, 1])


def test_contract_multigraph_mode_keeps_digon(c3):
    Q, image, hub = contract(c3, [0, 1], multigraph=True)
    assert not Q.oriented
    assert hub == 0 and image == (0, 0, 1)
    assert Q.arcs == {(0, 1), (1, 0)}


def test_contract_empty_set(c3):
    with pytest.raises(InputError):
        contract(c3, [])


# ---- tournaments and isomorphism ----

def test_is_tournament(t5, c4):
    assert is_tournament(t5)
    assert is_tournament(Digraph(1))
    assert not is_tournament(c4)


def test_canonical_form_separates_three_vertex_tournaments(c3):
    assert canonical_form(c3) != canonical_form(transitive_tournament(3))
    relabeled = Digraph(3, frozenset({(1, 0), (0, 2), (2, 1)}))
    assert canonical_form(c3) == canonical_form(relabeled)


def test_t5_is_the_only_regular_5_tournament(t5):
    regular = [T for T in enumerate_tournaments(5) if T.max_out_degree() == 2 and T.min_out_degree() == 2]
    assert len(regular) == 1
    assert is_isomorphic(regular[0], t5)


@settings(max_examples=80, deadline=None)
@given(st.data(), digraphs(max_n=7))
def test_canonical_form_ignores_labels(data, D):
    E = data.draw(relabelings(D))
    assert canonical_form(D) == canonical_form(E)


@settings(max_examples=80, deadline=None)
@given(digraphs(max_n=6), digraphs(max_n=6))
def test_canonical_form_agrees_with_networkx(D, E):
    same = nx.is_isomorphic(D.to_networkx(), E.to_networkx())
    assert is_isomorphic(D, E) == same


@settings(max_examples=80, deadline=None)
@given(in_degree_bounded(1))
def test_in_degree_one_components_carry_at_most_one_circuit(D):
    assert D.max_in_degree() <= 1
    G = D.to_networkx()
    for comp in nx.weakly_connected_components(G):
        H = G.subgraph(comp)
        cyclomatic = H.number_of_edges() - H.number_of_nodes() + 1
        assert cyclomatic <= 1
        if cyclomatic == 1:
            assert len(list(nx.simple_cycles(H))) == 1
