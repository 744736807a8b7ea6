"""Тесты для модуля PL-инварианта."""

import pytest

from bistellar_cluster.bistellar import (
    BistellarPair,
    apply_move,
    find_bistellar_pairs,
    pair_at,
)
from bistellar_cluster.cluster_algebra import presentation
from bistellar_cluster.errors import BistellarError, WrongDimension
from bistellar_cluster.exchange_graph import enumerate_class
from bistellar_cluster.fixtures import load_fixture
from bistellar_cluster.pl_invariant import (
    EmbeddingMap,
    PrecedesWitness,
    build_chain_2d,
    embedding_4d,
    identity_embedding,
    presentations_equal,
    sequences_commute,
    single_class_check,
    surviving_type2_pairs,
    untouched_type2_pairs,
    verify_preceq,
)


@pytest.fixture
def sphere5():
    return load_fixture("sphere5")


@pytest.fixture(scope="module")
def chain6():
    return build_chain_2d(load_fixture("boundary_delta3"), 6)


class TestPrecedes:
    """Тесты свидетельств порядка между классами."""

    def test_flip_witness(self, sphere5):
        pair = pair_at(sphere5, [1, 2])
        witness = PrecedesWitness(sphere5, apply_move(sphere5, pair), (pair,))
        assert verify_preceq(witness, 1)

    def test_move_too_small(self, sphere5):
        pair = pair_at(sphere5, [1, 2])
        witness = PrecedesWitness(sphere5, apply_move(sphere5, pair), (pair,))
        assert not verify_preceq(witness, 2)

    def test_zero_move_witness(self, sphere5):
        pair = find_bistellar_pairs(sphere5, 0)[0]
        witness = PrecedesWitness(sphere5, apply_move(sphere5, pair), (pair,))
        assert verify_preceq(witness, 1)

    def test_wrong_target(self, sphere5):
        pair = pair_at(sphere5, [1, 2])
        assert not verify_preceq(PrecedesWitness(sphere5, sphere5, (pair,)), 1)

    def test_invalid_move(self, sphere5):
        pair = BistellarPair.of([1, 4], [2, 3])
        assert not verify_preceq(PrecedesWitness(sphere5, sphere5, (pair,)), 1)

    def test_empty_witness(self, sphere5):
        assert verify_preceq(PrecedesWitness(sphere5, sphere5), 1)

    def test_then(self, sphere5):
        pair = pair_at(sphere5, [1, 2])
        moved = apply_move(sphere5, pair)
        first = PrecedesWitness(sphere5, moved, (pair,))
        second = PrecedesWitness(moved, sphere5, (pair.inverse(),))
        joined = first.then(second)
        assert joined.moves == (pair, pair.inverse())
        assert verify_preceq(joined, 1)

    def test_tetrahedron_below_sphere5(self, sphere5):
        tetra = load_fixture("boundary_delta3")
        zero = BistellarPair.of([1, 2, 3], [5])
        assert apply_move(tetra, zero).facets == sphere5.facets
        flip = pair_at(sphere5, [1, 2])
        target = apply_move(sphere5, flip)
        witness = PrecedesWitness(tetra, target, (zero, flip))
        assert verify_preceq(witness, 1)
        assert not verify_preceq(witness, 2)

    def test_transitive_across_levels(self, chain6):
        bottom = chain6.levels[0].representative
        middle = chain6.levels[1].representative
        zero = find_bistellar_pairs(bottom, 0)[0]
        assert apply_move(bottom, zero) == middle
        flip = find_bistellar_pairs(middle, 1)[0]
        moved = apply_move(middle, flip)
        first = PrecedesWitness(bottom, moved, (zero, flip))
        top_zero = find_bistellar_pairs(moved, 0)[0]
        second = PrecedesWitness(moved, apply_move(moved, top_zero), (top_zero,))
        assert verify_preceq(first, 1)
        assert verify_preceq(second, 1)
        joined = first.then(second)
        assert len(joined.target.vertices) == chain6.levels[2].vertex_count
        assert verify_preceq(joined, 1)


class TestEmbeddingMap:
    """Тесты отображений вложения."""

    def test_compose(self):
        first = EmbeddingMap({(1, 2): (1, 3)})
        second = EmbeddingMap({(1, 3): (2, 3)})
        assert first.compose(second).image((1, 2)) == (2, 3)

    def test_injective(self):
        assert not EmbeddingMap({(1, 2): (1, 3), (1, 4): (1, 3)}).is_injective()

    def test_identity_on_class(self):
        algebra = presentation(enumerate_class(load_fixture("sphere5")))
        embedding = identity_embedding(algebra, algebra)
        assert embedding.preserves_relations()
        relation = algebra.relations[0]
        assert embedding.map_relation(relation).key() == relation.key()

    def test_missing_generators(self):
        small = presentation(enumerate_class(load_fixture("boundary_delta3")))
        large = presentation(enumerate_class(load_fixture("sphere5")))
        embedding = identity_embedding(large, small)
        assert embedding.missing_generators()
        assert not embedding.preserves_relations()


class TestChain:
    """Тесты цепочки классов поверхностей."""

    def test_counts(self, chain6):
        assert chain6.generator_counts() == [6, 10, 15]
        assert chain6.relation_counts()[:2] == [0, 15]
        assert [level.vertex_count for level in chain6.levels] == [4, 5, 6]

    def test_embeddings_preserve_relations(self, chain6):
        assert all(e.preserves_relations() for e in chain6.embeddings)

    def test_single_class(self, chain6):
        assert single_class_check(chain6)

    def test_composite_matches_direct(self, chain6):
        composite = chain6.composite(0, 2)
        direct = chain6.direct(0, 2)
        assert composite.generator_map == direct.generator_map
        assert chain6.composite(1, 1).preserves_relations()

    def test_seven_vertices(self):
        chain = build_chain_2d(load_fixture("boundary_delta3"), 7)
        assert chain.generator_counts() == [6, 10, 15, 21]
        assert all(e.preserves_relations() for e in chain.embeddings)

    def test_wrong_dimension(self):
        with pytest.raises(WrongDimension):
            build_chain_2d(load_fixture("sphere4_h2"), 8)

    def test_m_max_too_small(self, sphere5):
        with pytest.raises(BistellarError):
            build_chain_2d(sphere5, 4)


class TestFourDimensional:
    """Тесты для четырёхмерных многообразий."""

    def test_embedding_after_zero_move(self):
        manifold = load_fixture("boundary_delta5")
        pair = find_bistellar_pairs(manifold, 0)[0]
        embedding = embedding_4d(manifold, pair)
        assert embedding.is_injective()
        assert all(face == image for face, image in embedding.generator_map.items())
        assert not embedding.missing_generators()
        assert embedding.preserves_relations()

    def test_embedding_wrong_move(self):
        sphere4 = load_fixture("sphere4_h2")
        with pytest.raises(WrongDimension):
            embedding_4d(sphere4, pair_at(sphere4, [4, 5]))

    def test_embedding_wrong_dimension(self, sphere5):
        with pytest.raises(WrongDimension):
            embedding_4d(sphere5, pair_at(sphere5, [1, 2]))

    def test_type2_pair_can_be_lost(self):
        sphere4 = load_fixture("sphere4_h2")
        stacked = apply_move(sphere4, BistellarPair.of([1, 2, 4, 5, 7], [8]))
        flip = pair_at(stacked, [1, 2, 4, 5])
        assert flip == BistellarPair.of([1, 2, 4, 5], [3, 8])
        survived, lost = surviving_type2_pairs(stacked, flip)
        assert BistellarPair.of([1, 2, 3], [4, 5, 6]) in lost
        assert set(survived) | set(lost) == set(find_bistellar_pairs(stacked, 2))

    def test_embedding_after_middle_face_move(self):
        sphere4 = load_fixture("sphere4_h2")
        stacked = apply_move(sphere4, BistellarPair.of([1, 2, 4, 5, 7], [8]))
        pair = pair_at(stacked, [1, 2, 4, 7])
        assert pair == BistellarPair.of([1, 2, 4, 7], [6, 8])
        embedding = embedding_4d(stacked, pair)
        assert embedding.generator_map[(1, 2, 4, 7)] == (1, 2, 6, 8)
        assert embedding.is_injective()
        assert surviving_type2_pairs(stacked, pair)[1] == []
        # полное включение соотношений нарушается и без потери пар типа 2
        assert embedding.lost_relations()
        assert not embedding.preserves_relations()
        assert BistellarPair.of([1, 2, 3], [4, 5, 6]) in untouched_type2_pairs(stacked, pair)
        assert embedding.domain
        assert embedding.preserves_domain()

    def test_survival_wrong_dimension(self, sphere5):
        with pytest.raises(WrongDimension):
            surviving_type2_pairs(sphere5, pair_at(sphere5, [1, 2]))


class TestSequences:
    """Тесты перестановочности последовательностей ходов."""

    def test_move_and_inverse(self, sphere5):
        pair = pair_at(sphere5, [1, 2])
        assert sequences_commute(sphere5, [pair, pair.inverse()], [])

    def test_different_results(self, sphere5):
        pair = pair_at(sphere5, [1, 2])
        assert not sequences_commute(sphere5, [pair], [])

    def test_disjoint_flip_and_zero_move(self):
        octahedron = load_fixture("octahedron")
        flip = pair_at(octahedron, [1, 2])
        assert flip == BistellarPair.of([1, 2], [3, 4])
        zero = BistellarPair.of([4, 5, 6], [7])
        assert sequences_commute(octahedron, [flip, zero], [zero, flip])
        assert not sequences_commute(octahedron, [flip, zero], [zero])

    def test_presentations_equal(self):
        graph = enumerate_class(load_fixture("sphere5"))
        assert presentations_equal(presentation(graph), presentation(graph))
