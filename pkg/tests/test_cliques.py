import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from grasscode.cliques import find_maximal_cliques


def bitsets(G, N):
    adj = [0] * N
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 14), st.floats(0.0, 1.0), st.integers(0, 10**6))
def test_matches_networkx_on_random_graphs(N, p, seed):
    G = nx.gnp_random_graph(N, p, seed=seed)
    ours = set(find_maximal_cliques(bitsets(G, N)))
    theirs = {frozenset(c) for c in nx.find_cliques(G)}
    assert ours == theirs


def test_small_cases():
    assert list(find_maximal_cliques([])) == []
    assert set(find_maximal_cliques([0, 0])) == {frozenset({0}), frozenset({1})}
    assert set(find_maximal_cliques([0b110, 0b101, 0b011])) == {frozenset({0, 1, 2})}
