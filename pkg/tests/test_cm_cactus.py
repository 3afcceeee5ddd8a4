import pytest

from cactusreg.bounds import invariant_report, is_block_graph
from cactusreg.cm_cactus import (
    chain_graph,
    chain_structure,
    corollary45_applies,
    exact_reg_theorem44,
    is_cm_cactus_indecomposable,
    lemma41_family,
    lemma41_reg,
    lemma42_family,
    lemma42_reg,
    matches_theorem44_class,
    parse_chain,
    recognize_lemma41,
    recognize_lemma42,
    theorem44_check,
    theorem44_members,
)
from cactusreg.errors import ClassMismatch, GraphError, NotAChain
from cactusreg.graph import (
    Graph,
    block_cut_tree,
    clique_sum,
    complete,
    cycle,
    path,
    relabel,
)


class TestChains:
    def test_parse(self):
        assert parse_chain("K2,C4,C5/2") == [("K", 2, 1), ("C", 4, 1), ("C", 5, 2)]

    @pytest.mark.parametrize("bad", ["", "K1", "C2", "X3", "C4/3", "K3/1"])
    def test_parse_rejects(self, bad):
        with pytest.raises(GraphError):
            parse_chain(bad)

    def test_g2_structure(self, paper_graphs):
        ch = chain_structure(paper_graphs[1])
        assert ch.labels() == ["K2", "C4", "C4", "K2"]
        assert all(ch.c4_cut_adjacent.values())

    def test_g1_structure(self, paper_graphs):
        ch = chain_structure(paper_graphs[0])
        assert ch.labels() == ["K2", "C4", "K3", "C4", "K2"]
        assert ch.cut_vertices == (2, 5, 7, 10)
        assert ch.to_dict()["kinds"] == ch.labels()

    def test_three_triangles_not_a_chain(self):
        G, _ = clique_sum(complete(3), complete(3), [1], [1])
        G, _ = clique_sum(G, complete(3), [1], [1])
        with pytest.raises(NotAChain):
            chain_structure(G)

    def test_orientation_is_canonical(self):
        G = chain_graph("K3,C4,K2")
        H = relabel(G, {v: G.n + 1 - v for v in G.vertices})
        assert chain_structure(G).labels() == ["K2", "C4", "K3"]
        assert chain_structure(H).labels() == ["K2", "C4", "K3"]

    def test_opposite_cut_points(self):
        ch = chain_structure(chain_graph("K2,C4/2,K3"))
        assert ch.c4_cut_adjacent == {1: False}


class TestCMConditions:
    def test_g1_g2_hold(self, paper_graphs):
        for G in paper_graphs:
            assert is_cm_cactus_indecomposable(G).holds

    def test_small_cases(self):
        assert is_cm_cactus_indecomposable(path(2)).holds
        assert is_cm_cactus_indecomposable(complete(3)).holds
        check = is_cm_cactus_indecomposable(cycle(5))
        assert not check.holds and check.violated

    @pytest.mark.parametrize("spec,fragment", [
        ("K2,C5,C4,K2", "condition 2"),
        ("K2,C4,C5,C4,K2", "condition 3"),
        ("K2,C4,K3,C5,C4,K2", "condition 3"),
        ("K2,C4/2,C4,K2", "condition 4"),
        ("C4,C4,K2", "condition 1"),
    ])
    def test_violations_are_named(self, spec, fragment):
        check = is_cm_cactus_indecomposable(chain_graph(spec))
        assert not check.holds and fragment in check.violated

    def test_decomposable(self):
        assert is_cm_cactus_indecomposable(path(3)).violated == "decomposable"

    def test_rejects_non_cactus(self):
        with pytest.raises(GraphError):
            is_cm_cactus_indecomposable(complete(4))


class TestTheorem44:
    def test_smallest_member(self):
        G = chain_graph("K2,C4,K3")
        assert matches_theorem44_class(G)
        assert exact_reg_theorem44(G) == 4
        assert theorem44_check(G).indecomposable

    def test_g2_is_not_a_member(self, paper_graphs):
        check = theorem44_check(paper_graphs[1])
        assert not check.holds and "K_ml" in check.violated

    def test_opposite_cut_points_excluded(self):
        assert not matches_theorem44_class(chain_graph("K2,C4/2,K3"))

    def test_g1_with_k3_end(self):
        assert exact_reg_theorem44(chain_graph("K2,C4,C3,C4,K3")) == 7

    def test_mismatch(self):
        with pytest.raises(ClassMismatch):
            exact_reg_theorem44(cycle(4))

    def test_members_up_to_nine(self):
        assert theorem44_members(9) == [
            "K2,C4,K3", "K2,C4,K4", "K3,C4,K3", "K2,C4,K5", "K3,C4,K4",
        ]

    def test_members_up_to_eleven_include_longer_chains(self):
        members = theorem44_members(11)
        assert "K2,C4,C4,K3" in members
        assert all(chain_graph(s).n <= 11 for s in members)

    def test_formula_equals_paper_bound_on_members(self):
        for spec in theorem44_members(11):
            G = chain_graph(spec)
            assert matches_theorem44_class(G)
            assert exact_reg_theorem44(G) == invariant_report(G).paper_bound


class TestCorollary45:
    def test_c3_end(self):
        assert corollary45_applies(chain_graph("C3,C4,C4,K2"))

    def test_paper_graphs(self, paper_graphs):
        assert not corollary45_applies(paper_graphs[0])
        assert not corollary45_applies(paper_graphs[1])


class TestFamilies:
    def test_lemma41_shape(self):
        G = lemma41_family(4, 3, 2)
        assert G.n == 4 + 3 + 2 - 3
        assert len(block_cut_tree(G).blocks) == 2

    @pytest.mark.parametrize("args,value", [((4, 3, 2), 3), ((4, 3, 3), 4), ((5, 3, 3), 5)])
    def test_lemma41_values(self, args, value):
        assert lemma41_reg(*args) == value

    @pytest.mark.parametrize("args,value", [((4, 2, 2), 3), ((4, 2, 3), 4), ((5, 3, 3), 5)])
    def test_lemma42_values(self, args, value):
        assert lemma42_reg(*args) == value

    def test_lemma42_shape(self):
        G = lemma42_family(5, 3, 3)
        assert G.n == 5 + 3 + 3 - 2
        assert G.has_edge(1, 2)

    @pytest.mark.parametrize("fn", [lemma41_family, lemma41_reg])
    def test_lemma41_minimums(self, fn):
        with pytest.raises(GraphError):
            fn(4, 2, 2)

    @pytest.mark.parametrize("fn", [lemma42_family, lemma42_reg])
    def test_lemma42_minimums(self, fn):
        with pytest.raises(GraphError):
            fn(3, 2, 2)

    def test_k3_instance_is_not_a_block_graph(self):
        # gluing K_m1 onto an edge of a triangle merges them into one
        # 2-connected block that is not complete
        assert not is_block_graph(lemma41_family(3, 3, 2))

    def test_recognizers_invert_builders(self):
        for k in range(3, 7):
            for m1 in range(3, 5):
                for m2 in range(2, 5):
                    assert recognize_lemma41(lemma41_family(k, m1, m2)) == (k, m1, m2)
        for k in range(4, 7):
            for m1 in range(2, 5):
                for m2 in range(m1, 5):
                    assert recognize_lemma42(lemma42_family(k, m1, m2)) == (k, m1, m2)
                    assert recognize_lemma42(lemma42_family(k, m2, m1)) == (k, m1, m2)

    def test_recognizers_survive_relabeling(self):
        G = lemma41_family(5, 3, 3)
        perm = {v: (v * 3) % G.n + 1 for v in G.vertices}
        assert sorted(perm.values()) == list(G.vertices)
        assert recognize_lemma41(relabel(G, perm)) == (5, 3, 3)

    def test_recognizers_reject(self, paper_graphs):
        for G in (*paper_graphs, cycle(5), complete(4), Graph.from_edges(2, [])):
            assert recognize_lemma41(G) is None
            assert recognize_lemma42(G) is None
        # cliques at non-adjacent cycle vertices
        G, _ = clique_sum(cycle(5), complete(2), [1], [1])
        G, _ = clique_sum(G, complete(2), [3], [1])
        assert recognize_lemma42(G) is None


class TestFamiliesAgainstOracle:
    def test_triangle_instance(self):
        from cactusreg.oracle.hochster import regularity_hochster
        assert [regularity_hochster(lemma41_family(3, m1, m2))
                for m1, m2 in [(3, 2), (3, 3), (4, 2), (4, 3)]] == [2, 3, 2, 3]

    def test_families_up_to_nine_vertices(self):
        from cactusreg.oracle.hochster import regularity_hochster
        checked = 0
        for k in range(3, 8):
            for m1 in range(2, 7):
                for m2 in range(2, 7):
                    if k + m1 + m2 - 3 > 9:
                        continue
                    if m1 >= 3:
                        G = lemma41_family(k, m1, m2)
                        assert regularity_hochster(G) == lemma41_reg(k, m1, m2), (k, m1, m2)
                        checked += 1
                    if k >= 4 and m1 <= m2 and k + m1 + m2 - 2 <= 9:
                        G = lemma42_family(k, m1, m2)
                        assert regularity_hochster(G) == lemma42_reg(k, m1, m2), (k, m1, m2)
                        checked += 1
        assert checked > 30
