from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasscode import codespace as cs
from grasscode import codegraph as cg
from grasscode.errors import (
    DegenerateInput,
    DimensionMismatch,
    InvalidProfile,
    NotAClique,
    NotIncident,
    ParameterOutOfRange,
    ZeroFunctional,
)
from grasscode.gf import make_field
from grasscode.linalg import intersect_and_sum

from oracle import adjacent_sets, all_subspaces, nondegenerate

F2, F3 = make_field(2), make_field(3)


def vecset(S):
    return frozenset(cs.vectors(S))


@pytest.fixture(scope="module")
def g422():
    return cg.build_graph(4, 2, 2)


@pytest.fixture(scope="module")
def g522():
    return cg.build_graph(5, 2, 2)


@pytest.fixture(scope="module")
def g532():
    return cg.build_graph(5, 3, 2)


@pytest.fixture(scope="module")
def g423():
    return cg.build_graph(4, 2, 3)


def test_adjacent_examples():
    X = cs.canonicalize(F2, [(1, 0, 0, 0), (0, 1, 0, 0)])
    Y = cs.canonicalize(F2, [(1, 0, 0, 0), (0, 0, 1, 0)])
    Z = cs.canonicalize(F2, [(0, 0, 1, 0), (0, 0, 0, 1)])
    assert not cg.adjacent(X, X)
    assert cg.adjacent(X, Y)
    assert not cg.adjacent(X, Z)
    with pytest.raises(DimensionMismatch):
        cg.adjacent(X, cs.span(F2, (1, 0, 0, 0)))


@pytest.mark.parametrize("n,k,q,size", [(4, 2, 2, 13), (5, 2, 2, 40), (4, 2, 3, 84)])
def test_build_graph_sizes(n, k, q, size):
    G = cg.build_graph(n, k, q)
    assert len(G) == size == cs.count_nondegenerate(n, k, q)


@pytest.mark.parametrize("n,k", [(4, 1), (4, 3), (4, 4), (3, 2)])
def test_build_graph_rejects_parameters(n, k):
    with pytest.raises(ParameterOutOfRange):
        cg.build_graph(n, k, 2)


@pytest.mark.parametrize("n,k,q", [(4, 2, 2), (3, 2, 3)])
def test_graph_against_vector_set_oracle(n, k, q):
    if k >= n - 1:
        # the oracle comparison does not need the graph parameter guard
        verts = list(cs.enumerate_codes(n, k, q))
        G = cg.CodeGraph(verts)
    else:
        G = cg.build_graph(n, k, q)
    sets = [vecset(X) for X in G.vertices]
    assert set(sets) == {S for S in all_subspaces(n, k, q) if nondegenerate(S, n)}
    for i, j in combinations(range(len(G)), 2):
        assert G.is_adjacent(i, j) == adjacent_sets(sets[i], sets[j], q, k)


@pytest.mark.parametrize("n,k,q", [(4, 2, 2), (5, 2, 2), (5, 3, 2), (4, 2, 3)])
def test_incidence_matches_pairwise(n, k, q):
    a = cg.build_graph(n, k, q)
    b = cg.build_graph(n, k, q, method="pairwise")
    assert a.vertices == b.vertices and a.adj == b.adj


def test_networkx_export(g422):
    H = g422.to_networkx()
    assert H.number_of_nodes() == 13
    assert H.number_of_edges() == sum(g422.degree(i) for i in range(13)) // 2
    assert nx.is_connected(H)


@pytest.mark.parametrize("q", [2, 3])
def test_line_set_has_q_plus_one_members(q):
    F = make_field(q)
    S = cs.span(F, (1, 0, 0, 0, 1))
    U = cs.canonicalize(F, [(1, 0, 0, 0, 1), (0, 1, 0, 0, 0), (0, 0, 1, 1, 0)])
    line = cg.line_set(S, U)
    assert len(set(line)) == q + 1
    assert all(S.issubspace(X) and X.issubspace(U) and X.k == 2 for X in line)
    with pytest.raises(NotIncident):
        cg.line_set(cs.span(F, (0, 0, 0, 0, 1)), U)


def _star_oracle(S, G):
    sset = vecset(S)
    return frozenset(i for i, X in enumerate(G.vertices) if sset <= vecset(X))


def test_star_restricted_examples(g422, g522, g423):
    S = cs.span(F2, (1, 1, 1, 1))
    assert len(cg.star_restricted(S, g422)) == 7
    S = cs.span(F2, (1, 1, 1, 1, 0))
    assert cs.coordinate_profile(S).c == 1
    assert len(cg.star_restricted(S, g522)) == 8
    S = cs.span(F3, (1, 2, 0, 0))
    assert cs.coordinate_profile(S).c == 2
    assert len(cg.star_restricted(S, g423)) == 6


def test_star_restricted_against_filter(g522, g423):
    for G in (g522, g423):
        for S in cs.enumerate_grassmannian(G.n, G.k - 1, G.q):
            assert cg.star_restricted(S, G) == _star_oracle(S, G)


def test_star_restricted_rejects_wrong_dimension(g422):
    with pytest.raises(DimensionMismatch):
        cg.star_restricted(cs.whole_space(F2, 4), g422)


def test_star_size_formula():
    assert cg.star_size_formula(1, 5, 2, 2) == 8
    assert cg.star_size_formula(2, 4, 2, 3) == 6
    for n, k in [(5, 2), (6, 3), (7, 4)]:
        assert cg.star_size_formula(n - k + 1, n, k, 2) == 1
    for bad in (0, 5):
        with pytest.raises(InvalidProfile):
            cg.star_size_formula(bad, 5, 2, 2)


def _top_oracle(U, G):
    uset = vecset(U)
    return frozenset(i for i, X in enumerate(G.vertices) if vecset(X) <= uset)


def test_top_restricted_against_filter(g522, g423):
    for G in (g522, g423):
        for U in cs.enumerate_grassmannian(G.n, G.k + 1, G.q):
            assert cg.top_restricted(U, G) == _top_oracle(U, G)


def test_top_of_degenerate_space_is_empty(g522):
    U = cs.canonicalize(F2, [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 1, 0)])
    assert cg.top_restricted(U, g522) == frozenset()


def test_golden_codes(fixtures_dir):
    C7 = cs.canonicalize(F2, cs.read_matrix(fixtures_dir / "code_7_3_2.txt", 2))
    assert cs.is_nondegenerate(C7)
    assert cg.hyperplane_sections(C7).distinct == 7
    assert cg.top_codes(C7) == []
    C12 = cs.canonicalize(F2, cs.read_matrix(fixtures_dir / "code_12_4_2.txt", 2))
    assert (C12.n, C12.k) == (12, 4)
    assert len(cg.top_codes(C12)) == 3


def _zassenhaus_section(U, i):
    C = cs.coordinate_hyperplane(U.field, U.n, i)
    cap, _ = intersect_and_sum(U.field, U.gen, C.gen, U.n)
    return cs.Subspace(U.q, U.n, cap)


@pytest.mark.parametrize("n,k1,q", [(5, 3, 2), (6, 3, 2), (5, 3, 3), (4, 2, 4)])
def test_sections_against_zassenhaus_and_filter(n, k1, q):
    for U in list(cs.enumerate_codes(n, k1, q))[:400]:
        secs = cg.hyperplane_sections(U)
        for i, sec in enumerate(secs.sections):
            assert sec == _zassenhaus_section(U, i)
            assert vecset(sec) == frozenset(v for v in cs.vectors(U) if v[i] == 0)


def test_sections_two_identical_columns():
    U = cs.canonicalize(F2, [(1, 0, 0, 1, 1), (0, 1, 0, 0, 1), (0, 0, 1, 0, 1)])
    secs = cg.hyperplane_sections(U)
    assert secs.sections[0] == secs.sections[3]
    assert (0, 3) in secs.groups


def test_sections_proportional_columns_q3():
    U = cs.canonicalize(F3, [(1, 0, 0, 2, 1), (0, 1, 0, 0, 1), (0, 0, 1, 0, 2)])
    secs = cg.hyperplane_sections(U)
    assert secs.sections[0] == secs.sections[3]
    assert secs.groups == cg.column_groups(F3, U.gen)


def test_sections_reject_degenerate():
    U = cs.canonicalize(F2, [(1, 0, 0, 0), (0, 1, 1, 0)])
    with pytest.raises(DegenerateInput):
        cg.hyperplane_sections(U)


def test_section_by_functional_examples():
    U = cs.canonicalize(F3, [(1, 0, 0, 2, 1), (0, 1, 0, 1, 1), (0, 0, 1, 1, 2)])
    for i, col in enumerate(zip(*U.gen)):
        sec = cg.section_by_functional(U, col)
        assert sec == cg.coordinate_section(U, i)
        assert not cs.is_nondegenerate(sec)
    w = (1, 1, 0)
    assert cg.section_by_functional(U, w) == cg.section_by_functional(U, (2, 2, 0))
    with pytest.raises(ZeroFunctional):
        cg.section_by_functional(U, (0, 0, 0))
    with pytest.raises(DimensionMismatch):
        cg.section_by_functional(U, (1, 0))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.data())
def test_section_nondegenerate_iff_functional_not_a_column(q, data):
    F = make_field(q)
    codes = list(cs.enumerate_codes(5, 3, q))
    U = data.draw(st.sampled_from(codes))
    cols = {cg.projective_normal(F, c) for c in zip(*U.gen)}
    for w in cs.projective_points(F, 3):
        sec = cg.section_by_functional(U, w)
        assert sec.k == 2 and sec.issubspace(U)
        assert cs.is_nondegenerate(sec) == (w not in cols)
    assert len(cg.missing_columns(F, U.gen)) == cs.q_integer(3, q) - len(cols)


def test_is_maximal_clique_examples(g422, g532):
    S = cs.span(F2, (1, 1, 1, 1))
    assert cg.is_maximal_clique(g422, cg.star_restricted(S, g422))
    # q=2 with c(S) = n-k: two codes, inside a larger top
    S = cs.canonicalize(F2, [(1, 0, 0, 0, 0), (0, 1, 1, 0, 0)])
    assert cs.coordinate_profile(S).c == 2
    members = cg.star_restricted(S, g532)
    assert len(members) == 2
    assert not cg.is_maximal_clique(g532, members)
    # an edge inside a line of three codes
    U = cs.canonicalize(F2, [(1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1)])
    line = [g422.index[X] for X in cg.line_set(cs.span(F2, (1, 1, 1, 1)), U)]
    assert len(line) == 3
    assert not cg.is_maximal_clique(g422, line[:2])
    assert cg.is_clique(g422, []) and cg.is_clique(g422, [0])


def test_not_a_clique_raised(g422):
    i, j = next((i, j) for i, j in combinations(range(13), 2) if not g422.is_adjacent(i, j))
    with pytest.raises(NotAClique):
        cg.is_maximal_clique(g422, [i, j])


def test_q2_minimal_profile_star_sits_inside_top(g532):
    # c(S) = n-k: the star holds two codes X(v), X(w); their sum U has a strictly larger top
    n, k = 5, 3
    hits = 0
    for S in cs.enumerate_grassmannian(n, k - 1, 2):
        if cs.coordinate_profile(S).c != n - k:
            continue
        members = cg.star_restricted(S, g532)
        assert len(members) == 2
        X, Y = (g532.vertices[i] for i in members)
        U = cs.subspace_sum(X, Y)
        assert U.k == k + 1 and cs.is_nondegenerate(U)
        top = cg.top_restricted(U, g532)
        assert members < top
        hits += 1
    assert hits > 0


@pytest.mark.parametrize("fixture", ["g422", "g522", "g532", "g423"])
def test_classification_matches_networkx(fixture, request):
    G = request.getfixturevalue(fixture)
    records = cg.classify_maximal_cliques(G)
    ours = {r.members for r in records}
    theirs = {frozenset(c) for c in nx.find_cliques(G.to_networkx())}
    assert ours == theirs
    assert len(ours) == len(records)
    assert all(r.maximal and r.kind in ("star", "top") for r in records)


def test_two_stars_share_at_most_one_code(g423):
    stars = [cg.star_restricted(S, g423) for S in cs.enumerate_grassmannian(4, 1, 3)]
    for a, b in combinations(stars, 2):
        assert len(a & b) <= 1


def test_star_top_intersection(g522):
    G = g522
    tops = list(cs.enumerate_codes(5, 3, 2))
    for S in cs.enumerate_grassmannian(5, 1, 2):
        star = cg.star_restricted(S, G)
        for U in tops:
            common = star & cg.top_restricted(U, G)
            if S.issubspace(U):
                line = {G.index[X] for X in cg.line_set(S, U) if X in G.index}
                assert common == line
            else:
                assert len(common) <= 1


@pytest.mark.parametrize("fixture", ["g423"])
def test_every_code_lies_in_a_maximal_star_when_q_at_least_3(fixture, request):
    G = request.getfixturevalue(fixture)
    covered = set()
    for S in cs.enumerate_grassmannian(G.n, G.k - 1, G.q):
        members = cg.star_restricted(S, G)
        if members and cg.is_maximal_clique(G, members):
            covered |= members
    assert covered == set(range(len(G)))


@pytest.mark.parametrize("fixture", ["g422", "g522", "g532", "g423"])
def test_connectivity_against_networkx(fixture, request):
    G = request.getfixturevalue(fixture)
    H = G.to_networkx()
    assert cg.connectivity(G) == (True, nx.diameter(H))
    assert cg.bfs_distances(G, 0) == [nx.shortest_path_length(H, 0, v) for v in range(len(G))]


def test_single_vertex_graph():
    G = cg.CodeGraph([cs.whole_space(F2, 4)])
    assert cg.connectivity(G) == (True, 0)
