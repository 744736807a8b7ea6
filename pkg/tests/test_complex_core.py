"""Тесты для модуля симплициальных комплексов."""

import pytest

from bistellar_cluster.complex_core import (
    OrientedSimplex,
    SimplicialComplex,
    TriangulatedManifold,
    boundary_complex,
    f_from_h,
    face_vectors,
    format_face,
    from_facets,
    join,
    link,
    orient,
    permutation_sign,
    simplex,
)
from bistellar_cluster.errors import (
    ComplexError,
    FaceNotInComplex,
    NotClosed,
    NotConnected,
    NotOrientable,
    NotPure,
    OrientationBreak,
    VertexOverlap,
)
from bistellar_cluster.fixtures import load_fixture

SPHERE5 = [(1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5), (2, 3, 4), (2, 3, 5)]


class TestSimplex:
    """Тесты нормализации симплексов."""

    def test_sorted(self):
        assert simplex([3, 1, 2]) == (1, 2, 3)

    def test_duplicate_vertices(self):
        with pytest.raises(ComplexError):
            simplex([1, 1, 2])

    def test_non_positive_label(self):
        with pytest.raises(ComplexError):
            simplex([0, 1])

    def test_format(self):
        assert format_face((1, 2, 3)) == "(1,2,3)"

    def test_permutation_sign(self):
        assert permutation_sign((1, 2, 3)) == 1
        assert permutation_sign((2, 1, 3)) == -1
        assert permutation_sign((3, 1, 2)) == 1

    def test_oriented_from_sequence(self):
        oriented = OrientedSimplex.from_sequence((2, 1, 3))
        assert oriented.vertices == (1, 2, 3)
        assert oriented.sign == -1
        assert str(oriented) == "-(1,2,3)"


class TestSimplicialComplex:
    """Тесты границы, линка и джойна."""

    def test_boundary_of_triangle(self):
        assert boundary_complex((1, 2, 3)).facets == ((1, 2), (1, 3), (2, 3))

    def test_boundary_of_vertex_is_empty_simplex(self):
        assert boundary_complex((4,)).facets == ((),)

    def test_non_maximal_faces_dropped(self):
        complex_ = SimplicialComplex([(1, 2), (1, 2, 3)])
        assert complex_.facets == ((1, 2, 3),)

    def test_link_of_edge(self):
        manifold = from_facets(SPHERE5)
        assert link(manifold, (1, 2)).facets == ((4,), (5,))

    def test_link_of_vertex(self):
        tetra = load_fixture("boundary_delta3")
        assert link(tetra, (1,)).facets == ((2, 3), (2, 4), (3, 4))

    def test_link_of_missing_face(self):
        manifold = from_facets(SPHERE5)
        with pytest.raises(FaceNotInComplex):
            link(manifold, (4, 5))

    def test_join_of_boundaries(self):
        square = join(boundary_complex((1, 2)), boundary_complex((3, 4)))
        assert square.facets == ((1, 3), (1, 4), (2, 3), (2, 4))

    def test_join_overlap(self):
        with pytest.raises(VertexOverlap):
            join(boundary_complex((1, 2)), boundary_complex((2, 3)))


class TestValidation:
    """Тесты проверки многообразий."""

    def test_not_closed(self):
        with pytest.raises(NotClosed):
            from_facets([(1, 2, 3), (1, 2, 4), (1, 3, 4)])

    def test_not_pure(self):
        with pytest.raises(NotPure):
            from_facets([(1, 2, 3), (1, 2, 3, 4)])

    def test_empty(self):
        with pytest.raises(NotPure):
            from_facets([])

    def test_not_connected(self):
        first = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
        second = [(5, 6, 7), (5, 6, 8), (5, 7, 8), (6, 7, 8)]
        with pytest.raises(NotConnected):
            from_facets(first + second)

    def test_projective_plane_not_orientable(self):
        with pytest.raises(NotOrientable):
            load_fixture("rp2_6")

    def test_duplicate_facet(self):
        with pytest.raises(ComplexError):
            from_facets([(1, 2, 3), (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])

    def test_wrong_signs_break_cycle(self):
        signs = {f: 1 for f in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]}
        with pytest.raises(OrientationBreak):
            TriangulatedManifold(2, signs)

    def test_error_carries_facets(self):
        with pytest.raises(NotClosed) as info:
            from_facets([(1, 2, 3), (1, 2, 4), (1, 3, 4)])
        assert info.value.facets


class TestOrientation:
    """Тесты согласованной ориентации."""

    def test_first_facet_positive(self):
        manifold = from_facets(SPHERE5)
        assert manifold.sign((1, 2, 4)) == 1

    def test_sphere5_signs(self):
        manifold = from_facets(SPHERE5)
        assert manifold.signed_facets() == {
            (1, 2, 4): 1, (1, 2, 5): -1, (1, 3, 4): -1,
            (1, 3, 5): 1, (2, 3, 4): 1, (2, 3, 5): -1,
        }

    def test_deterministic(self):
        shuffled = list(reversed(SPHERE5))
        assert from_facets(SPHERE5) == from_facets(shuffled)

    def test_orient_returns_sorted(self):
        oriented = orient(SPHERE5)
        assert [s.vertices for s in oriented] == sorted(SPHERE5)

    def test_tetrahedron_signs(self):
        tetra = load_fixture("boundary_delta3")
        assert [tetra.sign(f) for f in tetra.facets] == [1, -1, 1, -1]

    def test_negated(self):
        manifold = from_facets(SPHERE5)
        flipped = manifold.negated()
        assert all(flipped.sign(f) == -manifold.sign(f) for f in manifold.facets)
        assert flipped != manifold

    def test_key(self):
        manifold = from_facets(SPHERE5)
        assert manifold.key().startswith("(1,2,4) (1,2,5)")


class TestManifoldFaces:
    """Тесты перечисления граней."""

    def test_ridges_of_sphere5(self):
        manifold = from_facets(SPHERE5)
        assert len(manifold.ridges()) == 9
        assert (4, 5) not in manifold.ridges()

    def test_has_face(self):
        manifold = from_facets(SPHERE5)
        assert manifold.has_face((1, 2))
        assert not manifold.has_face((4, 5))
        assert manifold.has_face(())

    def test_facets_containing(self):
        manifold = from_facets(SPHERE5)
        assert manifold.facets_containing((1, 2)) == [(1, 2, 4), (1, 2, 5)]


class TestFaceVectors:
    """Тесты f-, h- и g-векторов."""

    def test_boundary_delta4(self):
        vectors = face_vectors(load_fixture("boundary_delta4"))
        assert vectors.f == (5, 10, 10, 5)
        assert vectors.h == (1, 1, 1, 1, 1)
        assert vectors.g == (1, 0, 0)

    def test_sphere5(self):
        vectors = face_vectors(from_facets(SPHERE5))
        assert vectors.f == (5, 9, 6)
        assert vectors.h == (1, 2, 2, 1)
        assert vectors.g == (1, 1)

    def test_boundary_delta5(self):
        vectors = face_vectors(load_fixture("boundary_delta5"))
        assert vectors.f == (6, 15, 20, 15, 6)
        assert vectors.h == (1, 1, 1, 1, 1, 1)

    def test_h_symmetric_on_spheres(self):
        for name in ("octahedron", "sphere7", "sphere8", "sphere4_h2"):
            h = face_vectors(load_fixture(name)).h
            assert h == tuple(reversed(h))

    def test_f_from_h(self):
        assert f_from_h((1, 2, 2, 1), 2) == (5, 9, 6)

    def test_f_from_h_inverts(self):
        for name in ("boundary_delta4", "octahedron", "sphere4_h2"):
            manifold = load_fixture(name)
            vectors = face_vectors(manifold)
            assert f_from_h(vectors.h, manifold.dimension) == vectors.f
