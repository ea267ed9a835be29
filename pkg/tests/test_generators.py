"""Tests for graph family constructors and builtin name resolution."""

import networkx as nx
import pytest

from hyperwalk.exceptions import (
    InvalidCayleySpecError,
    InvalidParametersError,
    UnknownGraphFamilyError,
)
from hyperwalk.generators import (
    cayley,
    complete,
    corpus,
    cycle,
    cyclic_group_table,
    figure2_graph,
    hypercube,
    path,
    petersen,
    platonic,
    prism_cayley,
    resolve_builtin,
)
from hyperwalk.graph import compute_distance_profile
from hyperwalk.types import CayleySpec, PointedGraph

KLEIN_FOUR = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))


class TestFamilies:
    """Test the standard families."""

    def test_cycle3_is_triangle(self):
        """Test C_3 equals K_3."""
        assert cycle(3) == complete(3)

    def test_cycle_too_small(self):
        """Test cycles need three vertices."""
        with pytest.raises(InvalidParametersError):
            cycle(2)

    def test_cycle5_sizes(self):
        """Test C_5 has sphere sizes (1, 2, 2)."""
        assert compute_distance_profile(PointedGraph(cycle(5))).sphere_sizes == (1, 2, 2)

    def test_path(self):
        """Test P_n has n - 1 edges."""
        assert path(1).edge_count == 0
        assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]

    def test_petersen(self):
        """Test the Petersen graph is 3-regular on 10 vertices with diameter 2."""
        g = petersen()
        assert g.vertex_count == 10
        assert {g.degree(v) for v in range(10)} == {3}
        assert nx.diameter(g.to_networkx()) == 2

    def test_hypercube2_is_cycle4(self):
        """Test Q_2 is isomorphic to C_4."""
        assert nx.is_isomorphic(hypercube(2).to_networkx(), cycle(4).to_networkx())

    def test_hypercube_size(self):
        """Test Q_d has 2^d vertices of degree d."""
        g = hypercube(4)
        assert g.vertex_count == 16
        assert {g.degree(v) for v in range(16)} == {4}

    @pytest.mark.parametrize(
        ("name", "vertices", "degree"),
        [
            ("tetrahedron", 4, 3),
            ("cube", 8, 3),
            ("octahedron", 6, 4),
            ("dodecahedron", 20, 3),
            ("icosahedron", 12, 5),
        ],
    )
    def test_platonic(self, name, vertices, degree):
        """Test each platonic skeleton is regular of the right size."""
        g = platonic(name)
        assert g.vertex_count == vertices
        assert {g.degree(v) for v in range(vertices)} == {degree}

    def test_unknown_platonic(self):
        """Test an unknown solid name is rejected."""
        with pytest.raises(UnknownGraphFamilyError):
            platonic("tesseract")


class TestFigure2:
    """Test the transcribed 14-vertex graph."""

    def test_checksum(self):
        """Test 14 vertices, 42 edges, 6-regular, sphere sizes (1, 6, 6, 1)."""
        pg = figure2_graph()
        g = pg.graph
        assert pg.base_point == 0
        assert g.vertex_count == 14
        assert g.edge_count == 42
        assert {g.degree(v) for v in range(14)} == {6}
        assert compute_distance_profile(pg).sphere_sizes == (1, 6, 6, 1)

    def test_bottom_apex_is_antipodal(self):
        """Test vertex 13 is the unique vertex at distance 3 from the apex."""
        assert compute_distance_profile(figure2_graph()).spheres[3] == (13,)


class TestCayley:
    """Test Cayley graph construction."""

    def test_z4_is_cycle4(self):
        """Test Z/4Z on {1, 3} gives the 4-cycle edge for edge."""
        assert cayley(CayleySpec((1, 3), group_order=4)).edges() == cycle(4).edges()

    def test_z6_is_cycle6(self):
        """Test Z/6Z on {1, 5} is isomorphic to C_6."""
        g = cayley(CayleySpec((1, 5), group_order=6))
        assert nx.is_isomorphic(g.to_networkx(), cycle(6).to_networkx())

    def test_explicit_table(self):
        """Test the Klein four-group on all non-identity elements gives K_4."""
        g = cayley(CayleySpec((1, 2, 3), table=KLEIN_FOUR))
        assert g == complete(4)

    def test_prism(self):
        """Test Z/6Z on {2, 3, 4} is the triangular prism."""
        g = prism_cayley().graph
        prism = nx.circular_ladder_graph(3)
        assert nx.is_isomorphic(g.to_networkx(), prism)

    def test_cyclic_group_table(self):
        """Test the Z/3Z table."""
        assert cyclic_group_table(3) == ((0, 1, 2), (1, 2, 0), (2, 0, 1))

    @pytest.mark.parametrize(
        ("spec", "message"),
        [
            (CayleySpec((0, 1, 3), group_order=4), "identity"),
            (CayleySpec((1,), group_order=4), "inverses"),
            (CayleySpec((2,), group_order=4), "do not generate"),
            (CayleySpec((1, 3, 7), group_order=4), "not a group element"),
            (CayleySpec((1, 1, 3), group_order=4), "repeated"),
            (CayleySpec((1,), group_order=2, table=((0, 1), (1, 0))), "exactly one"),
            (CayleySpec((1,)), "exactly one"),
            (CayleySpec((1,), table=((0, 1), (1, 1))), "permutation"),
        ],
    )
    def test_invalid_specs(self, spec, message):
        """Test invalid specifications are rejected with a reason."""
        with pytest.raises(InvalidCayleySpecError, match=message):
            cayley(spec)


class TestCorpus:
    """Test the named corpus."""

    def test_size_and_names(self):
        """Test the corpus has at least 25 uniquely named members."""
        names = [name for name, _ in corpus()]
        assert len(names) >= 25
        assert len(set(names)) == len(names)
        assert {"cycle3", "cycle12", "complete8", "petersen", "hypercube4", "fig2"} <= set(
            names
        )

    def test_base_points(self):
        """Test every member is pointed at vertex 0."""
        assert all(pg.base_point == 0 for _, pg in corpus())


class TestResolveBuiltin:
    """Test builtin graph name resolution."""

    @pytest.mark.parametrize(
        ("tokens", "expected"),
        [
            (["cycle", "4"], cycle(4)),
            (["cycle4"], cycle(4)),
            (["CYCLE", "4"], cycle(4)),
            (["path3"], path(3)),
            (["complete", "5"], complete(5)),
            (["hypercube", "3"], hypercube(3)),
            (["platonic", "cube"], platonic("cube")),
            (["petersen"], petersen()),
            (["cayley", "z4", "1,3"], cycle(4)),
            (["cayley", "z4", "1,", "3"], cycle(4)),
        ],
    )
    def test_resolves(self, tokens, expected):
        """Test names resolve to the expected graph at base point 0."""
        pg = resolve_builtin(tokens)
        assert pg is not None
        assert pg.graph == expected
        assert pg.base_point == 0

    def test_fig2_and_prism(self):
        """Test the named fixtures resolve."""
        assert resolve_builtin(["fig2"]) == figure2_graph()
        assert resolve_builtin(["prism"]) == prism_cayley()

    def test_file_path_is_not_builtin(self):
        """Test unknown single tokens fall through to file handling."""
        assert resolve_builtin(["graphs/c4.txt"]) is None

    def test_unparsable_family(self):
        """Test a known family with bad parameters is an error."""
        with pytest.raises(UnknownGraphFamilyError):
            resolve_builtin(["cycle", "four"])

    def test_family_parameter_range(self):
        """Test parameter ranges are enforced by the constructor."""
        with pytest.raises(InvalidParametersError):
            resolve_builtin(["cycle", "2"])
