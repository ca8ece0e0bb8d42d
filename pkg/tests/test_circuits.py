# tests/test_circuits.py — strong components, circuit search, good circuits, handles, contraction
import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromapath.circuits import (Circuit, check_handle_decomposition, contract_circuit, handle_decomposition,
                                 is_strongly_connected, k_good_circuit, longest_circuit,
                                 shortest_circuit_at_least, strong_components, verify_bondy)
from chromapath.coloring import chromatic_number, chromatic_number_of
from chromapath.corpus import directed_cycle, directed_path, random_strong_digraph
from chromapath.digraph import Digraph
from chromapath.errors import InputError, PreconditionError, ScopeError
from tests.strategies import digraphs


@st.composite
def strong_digraphs(draw, min_n=3, max_n=7):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.floats(0.2, 0.9))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    return random_strong_digraph(n, p, rng)


def circuit_lengths(D):
    return [len(c) for c in nx.simple_cycles(D.to_networkx())]


# ---- the circuit object ----

def test_circuit_walks():
    C = Circuit((4, 0, 2, 1))
    assert C.arcs() == [(4, 0), (0, 2), (2, 1), (1, 4)]
    assert C.path_to(2, 2) == [4, 0, 2]
    assert C.path_to(4, 0) == [4]
    assert C.segment(2, 0) == [2, 1, 4, 0]
    assert C.offset(2, 0) == 3
    assert 1 in C and 3 not in C


def test_circuit_rejects_repeats_and_long_paths():
    with pytest.raises(InputError):
        Circuit((0, 1, 0))
    with pytest.raises(InputError):
        Circuit((0, 1, 2)).path_to(0, 3)


def test_validate(c3):
    Circuit((1, 2, 0)).validate(c3)
    with pytest.raises(InputError):
        Circuit((0, 2, 1)).validate(c3)


# ---- connectivity ----

def test_strong_components(c4, tt):
    assert strong_components(c4) == [[0, 1, 2, 3]]
    assert strong_components(directed_path(3)) == [[0], [1], [2]]
    assert len(strong_components(tt(5))) == 5
    assert strong_components(Digraph(0)) == []


@given(digraphs(max_n=7))
def test_strong_components_agree_with_networkx(D):
    ours = sorted(tuple(c) for c in strong_components(D))
    theirs = sorted(tuple(sorted(c)) for c in nx.strongly_connected_components(D.to_networkx()))
    assert ours == theirs


# ---- circuit search ----

def test_shortest_circuit_at_least(c5):
    assert len(shortest_circuit_at_least(c5, 3)) == 5
    assert shortest_circuit_at_least(c5, 6) is None


def test_shortest_circuit_skips_short_components():
    arcs = set(directed_cycle(3).arcs) | {(3 + i, 3 + (i + 1) % 7) for i in range(7)}
    D = Digraph(10, frozenset(arcs))
    C = shortest_circuit_at_least(D, 4)
    assert len(C) == 7
    assert set(C.vertices) == set(range(3, 10))


def test_length_bound_below_two(c3):
    with pytest.raises(PreconditionError):
        shortest_circuit_at_least(c3, 1)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=7), st.integers(2, 6))
def test_shortest_circuit_is_shortest(D, k):
    lengths = [n for n in circuit_lengths(D) if n >= k]
    C = shortest_circuit_at_least(D, k)
    if not lengths:
        assert C is None
    else:
        C.validate(D)
        assert len(C) == min(lengths)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=7))
def test_longest_circuit(D):
    lengths = circuit_lengths(D)
    C = longest_circuit(D)
    assert (0 if C is None else len(C)) == max(lengths, default=0)


# ---- good circuits ----

def test_good_circuit_of_odd_circuit(c5):
    assert len(k_good_circuit(c5, 3)) == 5


def test_good_circuits_in_t5(t5):
    C = k_good_circuit(t5, 3)
    assert C.vertices == (0, 1, 3)
    for k in (3, 4, 5):
        C = k_good_circuit(t5, k)
        assert len(C) >= k
        assert chromatic_number_of(t5, C.vertices) <= k


def test_good_circuit_preconditions(c5, tt):
    with pytest.raises(PreconditionError):
        k_good_circuit(tt(4), 3)
    with pytest.raises(PreconditionError):
        k_good_circuit(c5, 2)
    with pytest.raises(PreconditionError):
        k_good_circuit(c5, 4)


@settings(max_examples=40, deadline=None)
@given(strong_digraphs())
def test_good_circuits_exist_for_every_k(D):
    chi = chromatic_number(D)[0]
    for k in range(3, chi + 1):
        C = k_good_circuit(D, k)
        C.validate(D)
        assert len(C) >= k
        assert chromatic_number_of(D, C.vertices) <= k


# ---- handles ----

def test_handles_of_a_circuit(c3):
    H = handle_decomposition(c3)
    assert H.r == 1 and H.trivial_count == 0
    assert check_handle_decomposition(c3, H)


def test_handles_with_a_chord(c4):
    D = Digraph(4, c4.arcs | {(0, 2)})
    H = handle_decomposition(D)
    assert H.handles[0] == (0, 1, 2, 3)
    assert H.r == 2 and H.trivial_count == 1
    assert check_handle_decomposition(D, H)


def test_handles_of_t5(t5):
    H = handle_decomposition(t5)
    assert len(H.handles[0]) == 5
    assert H.r == t5.m - t5.n + 1 == 6
    assert check_handle_decomposition(t5, H)


def test_single_vertex_has_no_handles():
    H = handle_decomposition(Digraph(1))
    assert H.r == 0
    assert check_handle_decomposition(Digraph(1), H)


def test_handles_need_strong_connectivity(tt):
    with pytest.raises(PreconditionError):
        handle_decomposition(tt(3))


def test_checker_rejects_a_broken_decomposition(c4):
    D = Digraph(4, c4.arcs | {(0, 2)})
    H = handle_decomposition(D)
    H.handles.pop()
    assert not check_handle_decomposition(D, H)


@settings(max_examples=40, deadline=None)
@given(strong_digraphs())
def test_handle_count_is_cyclomatic(D):
    H = handle_decomposition(D)
    assert H.r == D.m - D.n + 1
    assert check_handle_decomposition(D, H)


# ---- contraction ----

def test_contract_circuit_makes_a_digon():
    D = Digraph(6, directed_cycle(5).arcs | {(5, 0), (2, 5)})
    Q, image, hub = contract_circuit(D, Circuit((0, 1, 2, 3, 4)))
    assert Q.n == 2 and hub == 0
    assert not Q.oriented
    assert Q.arcs == {(0, 1), (1, 0)}
    assert image == (0, 0, 0, 0, 0, 1)


def test_contract_whole_circuit(c5):
    Q, _, _ = contract_circuit(c5, Circuit((0, 1, 2, 3, 4)))
    assert Q.n == 1 and Q.m == 0


def test_contract_needs_a_real_circuit(c3):
    with pytest.raises(InputError):
        contract_circuit(c3, Circuit((0, 2, 1)))


@settings(max_examples=40, deadline=None)
@given(strong_digraphs(min_n=4))
def test_contraction_keeps_strong_connectivity(D):
    C = shortest_circuit_at_least(D, 2)
    Q, _, _ = contract_circuit(D, C)
    assert is_strongly_connected(Q)


# ---- longest-circuit check ----

@pytest.mark.parametrize("name, chi, longest", [("c3", 3, 3), ("c5", 3, 5), ("t5", 5, 5)])
def test_verify_bondy(request, name, chi, longest):
    res = verify_bondy(request.getfixturevalue(name))
    assert (res.chi, res.longest) == (chi, longest)
    assert res.passed
    assert res.to_json()["passed"] is True


def test_verify_bondy_scope(tt):
    with pytest.raises(PreconditionError):
        verify_bondy(Digraph(1))
    with pytest.raises(PreconditionError):
        verify_bondy(tt(4))
    with pytest.raises(ScopeError):
        verify_bondy(directed_cycle(13))


@settings(max_examples=40, deadline=None)
@given(strong_digraphs())
def test_longest_circuit_bounds_chi(D):
    assert verify_bondy(D).passed
