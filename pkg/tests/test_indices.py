"""Index oracles, class-count forms and stated closed forms.

Frozen values were computed independently with networkx shortest paths on a
separately coded construction of the graph.
"""
from fractions import Fraction

import pytest

from dihedral_graphs import indices as ix
from dihedral_graphs.errors import BudgetExceededError, DisconnectedGraphError, InvalidParameterError
from dihedral_graphs.graph_core import Graph, build_graph
from dihedral_graphs.indices import IndexName as I

K2 = Graph.from_edges(2, [(0, 1)])
EMPTY3 = Graph.from_edges(3, [])

ORACLE_VALUES = {
    2: {I.WIENER: 50, I.HYPER_WIENER: 76, I.ZAGREB1: 72, I.ZAGREB2: 114, I.SCHULTZ: 216, I.GUTMAN: 218, I.ECCENTRIC_CONNECTIVITY: 44, I.EDGE_COUNT: 10},
    3: {I.WIENER: 190, I.HYPER_WIENER: 316, I.ZAGREB1: 188, I.ZAGREB2: 394, I.SCHULTZ: 854, I.GUTMAN: 889, I.ECCENTRIC_CONNECTIVITY: 85, I.EDGE_COUNT: 19},
    5: {I.WIENER: 1196, I.HYPER_WIENER: 2146, I.ZAGREB1: 702, I.ZAGREB2: 2181, I.SCHULTZ: 5502, I.GUTMAN: 5831, I.ECCENTRIC_CONNECTIVITY: 209, I.EDGE_COUNT: 46},
    7: {I.WIENER: 4250, I.HYPER_WIENER: 7876, I.ZAGREB1: 1752, I.ZAGREB2: 7204, I.SCHULTZ: 19686, I.GUTMAN: 20973, I.ECCENTRIC_CONNECTIVITY: 389, I.EDGE_COUNT: 85},
}


def test_k2_fixture():
    assert ix.wiener(K2) == 1
    assert ix.hyper_wiener(K2) == 1
    assert ix.schultz(K2) == 2
    assert ix.gutman(K2) == 1
    assert ix.eccentric_connectivity(K2) == 2


def test_edgeless_graph():
    assert ix.zagreb1(EMPTY3) == 0
    assert ix.zagreb2(EMPTY3) == 0
    with pytest.raises(DisconnectedGraphError):
        ix.wiener(EMPTY3)
    with pytest.raises(DisconnectedGraphError):
        ix.eccentric_connectivity(EMPTY3)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_oracles_match_frozen_values(graphs, p):
    for name, want in ORACLE_VALUES[p].items():
        assert ix.oracle(name, graphs[p]) == want, name


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_class_count_form_matches_oracle(graphs, p):
    for name in I:
        assert ix.class_count_form(name, p) == ix.oracle(name, graphs[p]), name


@pytest.mark.parametrize(
    "name, p, value",
    [
        (I.EDGE_COUNT, 5, 46),
        (I.WIENER, 2, 50),
        (I.WIENER, 3, 190),
        (I.WIENER, 5, 1196),
        (I.HYPER_WIENER, 2, 76),
        (I.HYPER_WIENER, 3, 316),
        (I.ZAGREB1, 2, 72),
        (I.ZAGREB2, 2, 114),
        (I.SCHULTZ, 2, 192),
        (I.GUTMAN, 2, 210),
        (I.ECCENTRIC_CONNECTIVITY, 2, 44),
        (I.ECCENTRIC_CONNECTIVITY, 3, 85),
    ],
)
def test_closed_form_values(name, p, value):
    assert ix.closed_form(name, p) == value


def test_zagreb2_closed_form_is_integral_despite_halves():
    for p in (2, 3, 5, 7, 11, 13):
        assert ix.closed_form(I.ZAGREB2, p).denominator == 1


def test_closed_form_rejects_non_primes():
    for bad in (1, 4, 9, 0):
        with pytest.raises(InvalidParameterError):
            ix.closed_form(I.WIENER, bad)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_stated_closed_forms_agree_except_schultz_and_gutman(graphs, p):
    for r in ix.verify_indices(p, graph=graphs[p]):
        assert r.matches == (r.index_name not in (I.SCHULTZ, I.GUTMAN)), r


def test_schultz_gutman_gaps():
    for p in (2, 3, 5, 7, 11):
        gap_mti = ix.class_count_form(I.SCHULTZ, p) - ix.closed_form(I.SCHULTZ, p)
        gap_gut = ix.class_count_form(I.GUTMAN, p) - ix.closed_form(I.GUTMAN, p)
        assert gap_mti == p**3 + 4 * p**2
        assert gap_gut == p**3


def test_verify_indices_budget():
    with pytest.raises(BudgetExceededError):
        ix.verify_indices(11)
    assert len(ix.verify_indices(2)) == 8


def test_report_integrality_guard():
    with pytest.raises(AssertionError):
        ix.IndexReport(I.WIENER, Fraction(1, 2))


@pytest.mark.parametrize("n", [6, 8, 9, 12, 25])
def test_two_route_schultz_and_gutman(n):
    g = build_graph(n)
    assert ix.schultz(g, "pairs") == ix.schultz(g, "vertex")
    assert ix.gutman(g, "pairs") == ix.gutman(g, "vertex")


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12, 25])
def test_general_identities(n):
    g = build_graph(n)
    deg = [bin(m).count("1") for m in g.nbr]
    assert ix.zagreb1(g) == sum(deg[u] + deg[v] for u, v in g.edges())
    assert ix.hyper_wiener(g) >= ix.wiener(g)
