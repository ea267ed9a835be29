"""Tests for the (S1), (S2) and distance-regularity checks."""

import networkx as nx
import pytest

from hyperwalk.generators import corpus, cycle, path, petersen, prism_cayley
from hyperwalk.graph import all_pairs_distances, compute_distance_profile
from hyperwalk.symmetry import (
    check_distance_regular,
    check_s1,
    check_s2,
    intersection_counts,
    symmetry_report,
)
from hyperwalk.types import Graph, PointedGraph

CORPUS = corpus()
CORPUS_IDS = [name for name, _ in CORPUS]

ORACLE_GRAPHS = [(name, pg.graph) for name, pg in CORPUS] + [
    ("prism", prism_cayley().graph),
    ("path3", path(3)),
    ("path5", path(5)),
    ("star", Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])),
]


class TestS1:
    """Test constant sphere sizes."""

    @pytest.mark.parametrize(("name", "pg"), CORPUS, ids=CORPUS_IDS)
    def test_corpus(self, name, pg):
        """Test every corpus member satisfies (S1)."""
        assert check_s1(compute_distance_profile(pg))

    def test_path3_witness(self, path3_end):
        """Test the first differing sphere size is reported."""
        result = check_s1(compute_distance_profile(path3_end))
        assert not result
        assert result.witness.kind == "s1"
        # |S_1(0)| = 1 but |S_1(1)| = 2
        assert result.witness.indices == (1, 0, 1)
        assert result.witness.values == (1, 2)


class TestS2:
    """Test constant intersection counts."""

    @pytest.mark.parametrize(("name", "pg"), CORPUS, ids=CORPUS_IDS)
    def test_corpus(self, name, pg):
        """Test every corpus member satisfies (S2)."""
        result, tables = check_s2(compute_distance_profile(pg))
        assert result
        assert tables is not None

    def test_prism_fails(self, prism):
        """Test the prism satisfies (S1) but not (S2)."""
        profile = compute_distance_profile(prism)
        assert check_s1(profile)
        result, tables = check_s2(profile)
        assert not result
        assert tables is None
        # S_1(2) meets S_1(0) in {4}; S_1(3) misses it
        assert result.witness.indices == (1, 1, 1, 2, 3)
        assert result.witness.values == (1, 0)

    def test_cycle4_tables(self, cycle4):
        """Test the intersection tables of the 4-cycle."""
        _, tables = check_s2(compute_distance_profile(cycle4))
        # tables[k][i][j] = |S_i(z_k) ∩ S_j(0)|
        assert tables[1].tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
        assert tables[2].tolist() == [[0, 0, 1], [0, 2, 0], [1, 0, 0]]

    def test_all_representatives_agree(self, fig2):
        """Test every vertex of a sphere has the same counts under (S2)."""
        profile = compute_distance_profile(fig2)
        counts = intersection_counts(profile)
        for sphere in profile.spheres:
            for v in sphere:
                assert (counts[v] == counts[sphere[0]]).all()


class TestDistanceRegular:
    """Test distance-regularity and the intersection array."""

    @pytest.mark.parametrize(
        ("name", "g"), ORACLE_GRAPHS, ids=[name for name, _ in ORACLE_GRAPHS]
    )
    def test_matches_networkx(self, name, g):
        """Test the verdict and intersection array agree with networkx."""
        result, array = check_distance_regular(g, all_pairs_distances(g))
        nx_graph = g.to_networkx()
        expected = nx.is_distance_regular(nx_graph)
        assert result.holds == expected
        if expected:
            b, c = nx.intersection_array(nx_graph)
            assert array == (tuple(b), tuple(c))
        else:
            assert array is None
            assert result.witness.kind == "distance-regular"

    def test_petersen_array(self):
        """Test the Petersen graph has intersection array {3, 2; 1, 1}."""
        g = petersen()
        _, array = check_distance_regular(g, all_pairs_distances(g))
        assert array == ((3, 2), (1, 1))

    def test_fig2_is_not_distance_regular(self, fig2):
        """Test the 14-vertex example fails distance-regularity."""
        g = fig2.graph
        result, array = check_distance_regular(g, all_pairs_distances(g))
        assert not result
        assert array is None

    def test_cycle_is_distance_regular(self):
        """Test cycles are distance-regular."""
        g = cycle(7)
        assert check_distance_regular(g, all_pairs_distances(g))[0]


class TestSymmetryReport:
    """Test the combined report."""

    def test_fig2_report(self, fig2):
        """Test the example is (S1)+(S2) but not distance-regular."""
        report = symmetry_report(fig2.graph, compute_distance_profile(fig2))
        assert report.s1
        assert report.s2
        assert not report.distance_regular
        assert report.intersection_tables is not None
        assert report.intersection_array is None

    def test_petersen_report(self, petersen_graph):
        """Test the Petersen graph attains every condition."""
        report = symmetry_report(
            petersen_graph.graph, compute_distance_profile(petersen_graph)
        )
        assert report.s1 and report.s2 and report.distance_regular
        assert report.intersection_array == ((3, 2), (1, 1))

    def test_distance_regular_implies_s1s2(self):
        """Test distance-regularity at any base point forces (S1) and (S2)."""
        for name, g in ORACLE_GRAPHS:
            if not check_distance_regular(g, all_pairs_distances(g))[0]:
                continue
            for v0 in range(g.vertex_count):
                profile = compute_distance_profile(PointedGraph(g, v0))
                assert check_s1(profile), name
                assert check_s2(profile)[0], name
