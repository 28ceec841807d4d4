from fractions import Fraction

import pytest

from cubic27 import decomp, picard, weyl
from cubic27.linalg import QMatrix
from oracles import rank_by_reverse_elimination


@pytest.fixture(scope="module")
def meeting():
    return decomp.meeting_matrix()


class TestMeetingMatrix:
    def test_known_entries(self, meeting, line_index):
        assert meeting[line_index["E1"], line_index["F12"]] == 1
        assert meeting[line_index["E1"], line_index["G1"]] == 0
        assert meeting[line_index["E1"], line_index["G2"]] == 1

    def test_symmetric_zero_diagonal(self, meeting):
        assert meeting.is_symmetric()
        assert all(meeting[i, i] == 0 for i in range(27))

    def test_row_sums_ten(self, meeting):
        for row in meeting.data:
            assert sum(row) == 10

    def test_strongly_regular_identity(self, meeting):
        assert decomp.strongly_regular_certificate(meeting)

    def test_fault_injection_detected(self, meeting):
        rows = [list(r) for r in meeting.data]
        rows[3][7] = 1 - rows[3][7]
        assert not decomp.strongly_regular_certificate(QMatrix(rows))


class TestSpectralDecomposition:
    def test_identity_matrix(self):
        comps = decomp.spectral_decomposition(QMatrix.identity(27))
        assert [(c.eigenvalue, c.dimension) for c in comps] == [(1, 27)]
        assert comps[0].projector == QMatrix.identity(27)

    def test_all_ones_matrix(self):
        j = QMatrix([[1] * 27 for _ in range(27)])
        comps = decomp.spectral_decomposition(j)
        assert [(c.eigenvalue, c.dimension) for c in comps] == [(27, 1), (0, 26)]

    def test_meeting_spectrum(self, meeting):
        comps = decomp.spectral_decomposition(meeting)
        assert [(c.eigenvalue, c.dimension) for c in comps] == [
            (10, 1),
            (1, 20),
            (-5, 6),
        ]

    def test_eigenspace_dim_against_independent_elimination(self, meeting):
        shifted = [
            [x - (i == j) for j, x in enumerate(row)]
            for i, row in enumerate(meeting.data)
        ]
        assert 27 - rank_by_reverse_elimination(shifted) == 20

    def test_non_integral_spectrum_rejected(self):
        with pytest.raises(ValueError):
            decomp.spectral_decomposition(QMatrix([[0, 1], [1, 1]]))

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            decomp.spectral_decomposition(QMatrix([[0, 1], [0, 0]]))


class TestProjectorAlgebra:
    def test_partition_of_identity(self, decomposition):
        total = QMatrix.zeros(27, 27)
        for c in decomposition.components:
            total = total + c.projector
        assert total == QMatrix.identity(27)

    def test_pairwise_orthogonal_idempotents(self, decomposition):
        comps = decomposition.components
        zero = QMatrix.zeros(27, 27)
        for i, ci in enumerate(comps):
            assert ci.projector * ci.projector == ci.projector
            for cj in comps[i + 1 :]:
                assert ci.projector * cj.projector == zero

    def test_reconstruction(self, decomposition, meeting):
        recon = QMatrix.zeros(27, 27)
        for c in decomposition.components:
            recon = recon + c.projector.scaled(c.eigenvalue)
        assert recon == meeting

    def test_traces_equal_dimensions(self, decomposition):
        for c in decomposition.components:
            assert c.projector.trace() == c.dimension

    def test_commutes_with_generators(self, decomposition, group):
        for g in group.generators:
            m = decomp.permutation_matrix(g)
            for c in decomposition.components:
                assert m * c.projector == c.projector * m


class TestCharacters:
    def test_perm_character_degree(self, decomposition, classes):
        assert decomposition.perm_character[0] == 27
        assert decomposition.perm_character == decomp.permutation_character(classes)

    def test_trivial_inner_products(self, group, classes):
        one = decomp.trivial_character(classes)
        assert decomp.inner_product(one, one, classes, group.order) == 1

    def test_perm_contains_trivial_once(self, decomposition, group, classes):
        one = decomp.trivial_character(classes)
        assert (
            decomp.inner_product(
                decomposition.perm_character, one, classes, group.order
            )
            == 1
        )

    def test_perm_norm_equals_orbital_count(self, decomposition, group, classes):
        chi = decomposition.perm_character
        assert decomp.inner_product(chi, chi, classes, group.order) == Fraction(
            group.orbit_count_on_ordered_pairs()
        )

    def test_constituents_integral_norm_one(self, decomposition, group, classes):
        for c in decomposition.components:
            assert all(v.denominator == 1 for v in c.character)
            assert decomp.inner_product(c.character, c.character, classes, group.order) == 1

    def test_identity_class_values_are_dimensions(self, decomposition):
        for c in decomposition.components:
            assert c.character[0] == c.dimension

    def test_top_component_is_trivial_character(self, decomposition, classes):
        top = decomposition.component_by_eigenvalue(10)
        assert top.character == decomp.trivial_character(classes)

    def test_characters_sum_to_perm_character(self, decomposition):
        total = [Fraction(0)] * 25
        for c in decomposition.components:
            total = [a + b for a, b in zip(total, c.character)]
        assert tuple(total) == decomposition.perm_character

    def test_six_part_matches_lattice_reflection_trace(self, decomposition):
        # trace of a reflection on the K-perp lattice, computed in Q^7:
        # full trace minus 1 for the fixed direction spanned by K
        p6 = decomposition.component_by_eigenvalue(-5).projector
        basis7 = [tuple(int(i == j) for j in range(7)) for i in range(7)]
        for root, perm in zip(
            picard.SIMPLE_ROOTS, weyl.simple_reflection_generators()
        ):
            trace7 = sum(picard.reflect(root, e)[i] for i, e in enumerate(basis7))
            assert decomp.projected_trace(p6, perm) == trace7 - 1


def test_decompose_dimensions(decomposition):
    assert decomposition.dimensions == (1, 6, 20)
    assert sum(decomposition.dimensions) == 27
    assert len(decomposition.components) == 3
