import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cactusreg.errors import CapExceeded
from cactusreg.graph import Graph, complete, cycle, disjoint_union, empty, path
from cactusreg.oracle.complex import reduced_homology_ranks, stanley_reisner
from cactusreg.oracle.hochster import (
    candidate_subsets,
    hochster_regularity,
    hochster_result,
    regularity_hochster,
    union_closure,
)
from cactusreg.oracle.ideal import SquarefreeMonomialIdeal, initial_ideal
from cactusreg.oracle.linalg import Q

from conftest import labeled_graphs


def brute_force_reg(ideal, field=32003):
    """max over all 2^N subsets W of 1 + top nonzero reduced homology degree."""
    cx = stanley_reisner(ideal)
    best = 0
    for W in range(1 << ideal.num_vars):
        h = reduced_homology_ranks(cx, W, field)
        best = max([best] + [d + 1 for d, r in h.items() if r])
    return best


squarefree_ideals = st.integers(2, 7).flatmap(
    lambda nv: st.builds(
        SquarefreeMonomialIdeal,
        st.just(nv),
        st.lists(st.integers(1, (1 << nv) - 1), min_size=1, max_size=6).map(tuple),
    )
)


class TestKnownValues:
    def test_k2(self):
        r = hochster_result(complete(2))
        assert r.regularity == 1
        assert r.witness_names() == ["x1", "y2"]

    @pytest.mark.parametrize("n", range(2, 7))
    def test_paths(self, n):
        assert regularity_hochster(path(n)) == n - 1

    @pytest.mark.parametrize("k", [4, 5, 6])
    def test_cycles(self, k):
        assert regularity_hochster(cycle(k)) == k - 2

    @pytest.mark.parametrize("m", range(2, 6))
    def test_complete(self, m):
        assert regularity_hochster(complete(m)) == 1

    def test_g2(self, paper_graphs):
        assert regularity_hochster(paper_graphs[1]) == 6

    def test_edgeless(self):
        assert regularity_hochster(empty(3)) == 0
        assert hochster_regularity(SquarefreeMonomialIdeal(4, ())).regularity == 0

    def test_unit_ideal(self):
        with pytest.raises(ValueError):
            hochster_regularity(SquarefreeMonomialIdeal(2, (0,)))


class TestCaps:
    def test_default_cap(self, paper_graphs):
        with pytest.raises(CapExceeded) as exc:
            regularity_hochster(paper_graphs[0])
        assert exc.value.cap == 9 and exc.value.n == 11

    def test_hard_ceiling(self):
        with pytest.raises(CapExceeded) as exc:
            regularity_hochster(path(12), vertex_cap=50)
        assert exc.value.cap == 11

    def test_cap_must_be_positive(self):
        with pytest.raises(ValueError):
            regularity_hochster(path(2), vertex_cap=0)


class TestPruningIsSound:
    @settings(max_examples=200, deadline=None)
    @given(squarefree_ideals)
    def test_random_ideals(self, ideal):
        assert hochster_regularity(ideal).regularity == brute_force_reg(ideal)

    @pytest.mark.parametrize("n", [2, 3])
    def test_all_small_graphs(self, n):
        for G in labeled_graphs(n):
            assert regularity_hochster(G) == brute_force_reg(initial_ideal(G))

    def test_four_vertex_samples(self):
        for k, G in enumerate(labeled_graphs(4)):
            if k % 5 == 0:
                assert regularity_hochster(G) == brute_force_reg(initial_ideal(G))

    def test_candidates_are_lattice_elements(self, paper_graphs):
        I = initial_ideal(paper_graphs[1])
        lattice = set(union_closure(I.generators))
        cands = candidate_subsets(I)
        assert set(cands) <= lattice
        assert len(cands) < len(lattice)
        sizes = [W.bit_count() for W in cands]
        assert sizes == sorted(sizes, reverse=True)

    def test_union_closure(self):
        assert union_closure([0b01, 0b10]) == [0b01, 0b10, 0b11]


class TestWitness:
    def test_witness_has_top_homology(self, paper_graphs):
        for G in (cycle(5), paper_graphs[1]):
            r = hochster_result(G)
            h = reduced_homology_ranks(stanley_reisner(initial_ideal(G)), r.witness)
            assert h.get(r.regularity - 1, 0) > 0

    def test_parallel_matches_sequential(self, paper_graphs):
        seq = hochster_result(paper_graphs[1], workers=1)
        par = hochster_result(paper_graphs[1], workers=2)
        assert (seq.regularity, seq.witness) == (par.regularity, par.witness)


class TestStructural:
    def test_isolated_vertex_changes_nothing(self):
        for G in (cycle(5), path(4), complete(3)):
            assert regularity_hochster(disjoint_union(G, empty(1))) == regularity_hochster(G)

    def test_disjoint_union_adds(self):
        G = disjoint_union(path(3), cycle(4))
        assert regularity_hochster(G) == 2 + 2

    @pytest.mark.parametrize("field", [2, Q])
    def test_fields_agree_on_small_graphs(self, field):
        for G in labeled_graphs(4):
            assert regularity_hochster(G, field) == regularity_hochster(G)

    def test_fields_agree_on_g2(self, paper_graphs):
        values = {regularity_hochster(paper_graphs[1], f) for f in (2, 32003, Q)}
        assert values == {6}


def test_graph_with_no_vertices():
    assert regularity_hochster(Graph(0, frozenset())) == 0
