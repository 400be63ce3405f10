"""
Tests for the Schreier-graph covering oracle.
"""

from itertools import product

import pytest

from handlebody.covering import (
    covering_genus,
    covering_orientable,
    cycle_closes,
    export_edgelist,
    rank_for_genus,
    schreier_graph,
)
from handlebody.exceptions import GenusError, NotGeneratingError
from handlebody.groups import generates
from handlebody.nielsen import MarkedVector
from handlebody.words import evaluate


class TestSchreierGraph:
    """Tests for the graph, its spanning tree and basis cycles."""

    def test_c2_single(self, c2):
        """Test C2 on (s) has 2 vertices, 2 edges and 1 basis cycle."""
        graph = schreier_graph(c2, (c2.index_of("s"),))
        assert (graph.vertex_count, graph.edge_count, graph.cycle_rank) == (2, 2, 1)

    def test_quaternion_pair(self, quaternion):
        """Test Q8 on (i, j) has 8 vertices, 16 edges and 9 basis cycles."""
        graph = schreier_graph(quaternion, quaternion.generators)
        assert (graph.vertex_count, graph.edge_count, graph.cycle_rank) == (8, 16, 9)

    def test_d3_pair(self, d3):
        """Test D3 on (s1, s2) has 6 vertices, 12 edges and 7 basis cycles."""
        graph = schreier_graph(d3, d3.generators)
        assert (graph.vertex_count, graph.edge_count, graph.cycle_rank) == (6, 12, 7)

    def test_cycles_are_loops(self, quaternion):
        """Test every basis cycle word evaluates to the identity."""
        graph = schreier_graph(quaternion, quaternion.generators)
        for cycle in graph.basis_cycles:
            assert cycle_closes(quaternion, graph, cycle)

    def test_tree_words_reach_each_element(self, d3):
        """Test tree words from the identity evaluate to their endpoint."""
        graph = schreier_graph(d3, d3.generators)
        for x, word in graph.tree_words.items():
            assert evaluate(d3, word, graph.g) == x

    def test_disconnected(self, d3):
        """Test a non-generating vector is refused."""
        s1, _ = d3.generators
        with pytest.raises(NotGeneratingError):
            schreier_graph(d3, (s1, s1))

    @pytest.mark.parametrize("descriptor, n", [("cyclic:4", 2), ("dihedral:3", 2), ("quaternion", 2), ("abelian:2,2", 3)])
    def test_genus_agreement(self, group, descriptor, n):
        """Test the basis-cycle count equals 1 + |G|(n-1) on every generating vector."""
        built = group(descriptor)
        for g in product(range(built.order), repeat=n):
            if generates(built, g):
                assert schreier_graph(built, g).cycle_rank == covering_genus(built, n)


class TestGenus:
    """Tests for the genus formula and its inverse."""

    def test_values(self, group, quaternion):
        """Test 1 + |G|(n-1) for a few cases."""
        assert covering_genus(quaternion, 2) == 9
        assert covering_genus(quaternion, 1) == 1
        assert covering_genus(group("dihedral:6"), 3) == 25

    def test_rank_for_genus(self, d3):
        """Test genus 7 resolves to n = 2 for D3."""
        assert rank_for_genus(d3, 7) == 2
        assert rank_for_genus(d3, 1) == 1

    @pytest.mark.parametrize("genus", [0, 6, 8])
    def test_rank_for_bad_genus(self, group, genus):
        """Test a genus not of the form 1 + |G|(n-1) is refused."""
        with pytest.raises(GenusError):
            rank_for_genus(group("cyclic:4"), genus)


class TestOrientability:
    """Tests for the covering-side orientability verdict."""

    def test_all_ones_is_orientable(self, quaternion):
        """Test all-ones signs give an orientable covering with the trivial character."""
        verdict = covering_orientable(quaternion, MarkedVector.unmarked(quaternion.generators))
        assert verdict.orientable
        assert verdict.character.is_trivial

    def test_quaternion_minus_minus(self, quaternion):
        """Test ((i, j), (-, -)) is orientable with the character sending i and j to -1."""
        i, j = quaternion.generators
        verdict = covering_orientable(quaternion, MarkedVector((i, j), (-1, -1)))
        assert verdict.orientable
        assert verdict.character(i) == verdict.character(j) == -1
        assert verdict.character(quaternion.index_of("k")) == 1
        assert verdict.character.is_homomorphism(quaternion)

    def test_d3_witness(self, d3):
        """Test ((s1, s1 s2), (+, -)) is nonorientable with a witness cycle of sign -1."""
        s1, s2 = d3.generators
        x = MarkedVector((s1, d3.mul(s1, s2)), (1, -1))
        verdict = covering_orientable(d3, x)
        assert not verdict.orientable
        assert verdict.character is None
        assert verdict.witness.sign(x.v) == -1

    @pytest.mark.parametrize("descriptor", ["dihedral:3", "quaternion", "abelian:4,2"])
    def test_root_independence(self, group, descriptor):
        """Test the verdict does not depend on the root of the spanning tree."""
        built = group(descriptor)
        for g in product(range(built.order), repeat=2):
            if not generates(built, g):
                continue
            for v in product((1, -1), repeat=2):
                x = MarkedVector(g, v)
                verdicts = {root: covering_orientable(built, x, root=root) for root in range(built.order)}
                assert len({verdict.orientable for verdict in verdicts.values()}) == 1
                characters = {verdict.character for verdict in verdicts.values()}
                assert len(characters) == 1


class TestExport:
    """Tests for the edge-list export."""

    def test_edgelist(self, d3, tmp_path):
        """Test one ``src dst coord sign`` line per edge."""
        s1, s2 = d3.generators
        path = tmp_path / "d3.edges"
        export_edgelist(schreier_graph(d3, (s1, s2)), path, (1, -1))
        lines = path.read_text().splitlines()
        assert len(lines) == 12
        assert "1 s1 1 +" in lines
        assert "1 s2 2 -" in lines
        assert all(len(line.split()) == 4 for line in lines)
