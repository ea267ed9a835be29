"""Tests for multi-step coefficients computed three independent ways."""

from fractions import Fraction
from itertools import product

import pytest

from hyperwalk.coordinator import ProductivityCoordinator
from hyperwalk.generators import corpus
from hyperwalk.hypergroup import (
    left_nested_convolution,
    multi_step_coefficients,
    walk_coefficients,
)
from hyperwalk.matrices import check_transition_algebra, transition_product

CORPUS = corpus()
CORPUS_IDS = [name for name, _ in CORPUS]


def _sequences(size: int, max_length: int):
    for length in range(1, max_length + 1):
        yield from product(range(size), repeat=length)


class TestShortSequences:
    """Test every corpus member on sequences of length at most 2."""

    @pytest.mark.parametrize(("name", "pg"), CORPUS, ids=CORPUS_IDS)
    def test_three_methods_agree(self, name, pg):
        """Test enumeration, convolution and matrix product agree."""
        c = ProductivityCoordinator(pg)
        for sequence in _sequences(c.profile.index_set_size, 2):
            result = c.multi_step(sequence)
            assert result.enumeration == result.convolution, sequence
            assert result.matrix_product == result.convolution, sequence


@pytest.mark.slow
class TestLengthFour:
    """Test all sequences up to length 4 on every productive member."""

    @pytest.mark.parametrize(("name", "pg"), CORPUS, ids=CORPUS_IDS)
    def test_three_methods_agree(self, name, pg):
        """Test the nested sum, convolution and matrix extraction coincide."""
        c = ProductivityCoordinator(pg)
        assert c.decide().productive
        for sequence in _sequences(c.profile.index_set_size, 4):
            result = c.multi_step(sequence)
            assert result.enumeration == result.convolution, sequence
            assert result.matrix_product == result.convolution, sequence


class TestMatrixAlgebra:
    """Test the transition matrices multiply like the table."""

    @pytest.mark.parametrize(("name", "pg"), CORPUS, ids=CORPUS_IDS)
    def test_transition_algebra(self, name, pg):
        """Test P_i P_j = Σ_k p_{i,j}^k P_k on productive members."""
        c = ProductivityCoordinator(pg)
        assert check_transition_algebra(c.transition_family, c.structure_constants)

    def test_product_expands_in_basis(self, fig2):
        """Test a product of operators is the combination given by the walk law."""
        c = ProductivityCoordinator(fig2)
        tf = c.transition_family
        sequence = (1, 2, 1)
        coefficients = left_nested_convolution(c.structure_constants, sequence)
        expected = sum(
            (coefficients[k] * tf.operator(k) for k in range(tf.size)),
            start=tf.operator(0) * Fraction(0),
        )
        assert (transition_product(tf, sequence) == expected).all()


class TestWithoutSymmetry:
    """Test the walk law on a graph without (S2)."""

    def test_two_jumps_match_table(self, prism):
        """Test two jumps always follow the table, with or without (S2)."""
        c = ProductivityCoordinator(prism)
        for sequence in _sequences(c.profile.index_set_size, 2):
            assert walk_coefficients(c.profile, sequence) == left_nested_convolution(
                c.structure_constants, sequence
            )

    def test_enumeration_is_a_distribution(self, prism):
        """Test the nested sum gives a probability vector for longer walks."""
        c = ProductivityCoordinator(prism)
        result = multi_step_coefficients(
            c.structure_constants, (1, 2, 1), c.profile, report=c.symmetry
        )
        assert sum(result.enumeration) == 1
        assert all(p >= 0 for p in result.enumeration)
        assert result.matrix_product is None
