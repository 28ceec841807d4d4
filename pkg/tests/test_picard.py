import pytest

from cubic27 import picard
from cubic27.errors import ModelError

E1 = (0, 1, 0, 0, 0, 0, 0)
E2 = (0, 0, 1, 0, 0, 0, 0)
F12 = (1, -1, -1, 0, 0, 0, 0)
F23 = (1, 0, -1, -1, 0, 0, 0)
G1 = (2, 0, -1, -1, -1, -1, -1)
R12 = (0, 1, -1, 0, 0, 0, 0)  # E1 - E2
R123 = (1, -1, -1, -1, 0, 0, 0)  # H - E1 - E2 - E3


class TestPairing:
    def test_hyperplane_self_pairing(self):
        assert picard.pairing(picard.H, picard.H) == 1

    def test_line_self_pairing(self):
        assert picard.pairing(E1, E1) == -1

    def test_meeting_pair(self):
        assert picard.pairing(E1, F12) == 1

    def test_skew_pair(self):
        assert picard.pairing(E1, G1) == 0

    def test_canonical_class_norm(self):
        assert picard.pairing(picard.K, picard.K) == 3


class TestLines:
    def test_count(self, lines):
        assert len(lines) == 27

    def test_index_order(self, lines):
        assert [l.label for l in lines[:6]] == ["E1", "E2", "E3", "E4", "E5", "E6"]
        assert lines[6].label == "F12"
        assert lines[20].label == "F56"
        assert [l.label for l in lines[21:]] == ["G1", "G2", "G3", "G4", "G5", "G6"]

    def test_e3_class(self, lines):
        assert lines[2].label == "E3"
        assert lines[2].cls == (0, 0, 0, 1, 0, 0, 0)

    def test_line_numerology(self, lines):
        for line in lines:
            assert picard.pairing(line.cls, line.cls) == -1
            assert picard.pairing(line.cls, picard.K) == -1

    def test_each_line_meets_ten_others(self, lines):
        # brute force over all ordered pairs
        for a in lines:
            meets = sum(
                1 for b in lines if b is not a and picard.pairing(a.cls, b.cls) == 1
            )
            assert meets == 10

    def test_classes_distinct(self, lines):
        assert len({l.cls for l in lines}) == 27


class TestRoots:
    def test_count(self, roots):
        assert len(roots) == 72

    def test_known_roots(self, roots):
        vecs = {r.vec for r in roots}
        assert R12 in vecs
        assert R123 in vecs

    def test_numerology(self, roots):
        for r in roots:
            assert picard.pairing(r.vec, r.vec) == -2
            assert picard.pairing(r.vec, picard.K) == 0

    def test_closed_under_negation(self, roots):
        vecs = {r.vec for r in roots}
        assert {tuple(-c for c in v) for v in vecs} == vecs

    def test_closed_under_reflection(self, roots):
        vecs = {r.vec for r in roots}
        for r in roots:
            assert {picard.reflect(r.vec, v) for v in vecs} == vecs


class TestReflect:
    def test_involution(self, roots):
        samples = [E1, G1, picard.H, (1, 1, -2, 0, 3, 0, -1)]
        for r in roots:
            for x in samples:
                assert picard.reflect(r.vec, picard.reflect(r.vec, x)) == x

    def test_preserves_pairing(self, roots):
        samples = [(E1, G1), (F12, F23), (picard.H, E2)]
        for r in roots:
            for u, v in samples:
                assert picard.pairing(
                    picard.reflect(r.vec, u), picard.reflect(r.vec, v)
                ) == picard.pairing(u, v)

    def test_fixes_canonical_class(self, roots):
        for r in roots:
            assert picard.reflect(r.vec, picard.K) == picard.K

    def test_swaps_blowup_points(self):
        assert picard.reflect(R12, E1) == E2

    def test_sends_point_to_conic(self):
        assert picard.reflect(R123, E1) == F23


class TestLinePermutation:
    def test_swap_structure(self, line_index):
        p = picard.line_permutation(R12)
        expected_swaps = [("E1", "E2"), ("G1", "G2")] + [
            (f"F1{k}", f"F2{k}") for k in range(3, 7)
        ]
        moved = set()
        for a, b in expected_swaps:
            i, j = line_index[a], line_index[b]
            assert p[i] == j and p[j] == i
            moved |= {i, j}
        for i in range(27):
            if i not in moved:
                assert p[i] == i

    def test_reflections_are_involutions(self, roots):
        for r in roots[:12]:
            p = picard.line_permutation(r.vec)
            assert p != tuple(range(27))
            assert tuple(p[p[i]] for i in range(27)) == tuple(range(27))

    def test_point_to_conic_on_indices(self, line_index):
        p = picard.line_permutation(R123)
        assert p[line_index["E1"]] == line_index["F23"]

    def test_rejects_non_root_direction(self):
        with pytest.raises(ModelError):
            picard.line_permutation((1, 0, 0, 0, 0, 0, 0))


class TestTriangles:
    def test_count(self, triangles):
        assert len(triangles) == 45

    def test_known_triangle(self, triangles, line_index):
        members = tuple(sorted([line_index["E1"], line_index["G2"], line_index["F12"]]))
        assert any(t.members == members for t in triangles)

    def test_sum_is_minus_k(self, triangles, lines):
        for t in triangles:
            total = tuple(sum(lines[i].cls[k] for i in t.members) for k in range(7))
            assert total == picard.MINUS_K

    def test_shape_census(self, triangles, lines):
        shapes = {}
        for t in triangles:
            shape = "".join(sorted(lines[i].label[0] for i in t.members))
            shapes[shape] = shapes.get(shape, 0) + 1
        assert shapes == {"EFG": 30, "FFF": 15}

    def test_each_line_in_five_triangles(self, triangles):
        for i in range(27):
            assert sum(1 for t in triangles if i in t.members) == 5

    def test_canonical_ordering(self, triangles):
        members = [t.members for t in triangles]
        assert members == sorted(members)
        assert all(m == tuple(sorted(m)) for m in members)
