import numpy as np
import pytest

from cogmap import (
    Concept,
    MapValidationError,
    Relation,
    adjacency_of,
    build_map,
    from_adjacency,
    scale_map,
)

import goldens
from conftest import make_random_map


def test_build_two_concepts_one_relation(map_q):
    assert map_q.n == 2
    assert np.array_equal(adjacency_of(map_q), [[0, 0.7], [0, 0]])
    assert map_q.weight(1, 2) == 0.7
    assert map_q.weight(2, 1) == 0


def test_build_mutual_pair(map_s):
    assert np.array_equal(adjacency_of(map_s), [[0, 0.5], [0.5, 0]])
    assert len(map_s.relations) == 2


def test_build_signed_benchmark(map_signed):
    assert map_signed.n == 7
    assert len(map_signed.relations) == 10
    assert np.array_equal(map_signed.adjacency, goldens.W_SIGNED)


def test_weighted_benchmark_adjacency(map_weighted):
    assert np.array_equal(adjacency_of(map_weighted), goldens.W_WEIGHTED)


def test_empty_relations_zero_matrix():
    cmap = build_map([Concept(1), Concept(2)], [])
    assert not cmap.adjacency.any()


@pytest.mark.parametrize(
    "concepts,relations,message",
    [
        ([Concept(1), Concept(1)], [], "duplicate concept"),
        ([Concept(1), Concept(3)], [], "ids must be exactly"),
        ([Concept(1), Concept(2)], [Relation(1, 3, 1.0)], "unknown concept"),
        ([Concept(1), Concept(2)], [Relation(1, 1, 1.0)], "self-loop"),
        ([Concept(1), Concept(2)], [Relation(1, 2, 0.0)], "zero weight"),
        (
            [Concept(1), Concept(2)],
            [Relation(1, 2, 1.0), Relation(1, 2, 2.0)],
            "duplicate relation",
        ),
    ],
)
def test_build_rejects_bad_input(concepts, relations, message):
    with pytest.raises(MapValidationError, match=message):
        build_map(concepts, relations)


def test_adjacency_is_read_only(map_q):
    with pytest.raises(ValueError):
        map_q.adjacency[0, 1] = 9.0


def test_scale_divide_by_1_2(map_signed):
    scaled = scale_map(map_signed, 1 / 1.2)
    assert np.allclose(scaled.adjacency, goldens.W_SIGNED / 1.2)
    nonzero = scaled.adjacency[scaled.adjacency != 0]
    assert np.allclose(np.abs(nonzero), 1 / 1.2)


def test_scale_identity(map_s):
    assert np.array_equal(scale_map(map_s, 1.0).adjacency, map_s.adjacency)


def test_scale_by_four(map_s):
    scaled = scale_map(map_s, 4.0)
    assert np.array_equal(scaled.adjacency, [[0, 2], [2, 0]])


def test_scale_zero_rejected(map_s):
    with pytest.raises(MapValidationError):
        scale_map(map_s, 0)


def test_scale_round_trip():
    rng = np.random.default_rng(7)
    for _ in range(20):
        cmap = make_random_map(rng)
        for factor in (0.5, 1 / 1.2, 4.0, -3.0):
            back = scale_map(scale_map(cmap, factor), 1 / factor)
            assert np.max(np.abs(back.adjacency - cmap.adjacency)) < 1e-12


def test_rebuild_round_trip():
    rng = np.random.default_rng(8)
    for _ in range(20):
        cmap = make_random_map(rng)
        rebuilt = build_map(cmap.concepts, cmap.relations, cmap.name)
        assert rebuilt.concepts == cmap.concepts
        assert rebuilt.relations == cmap.relations
        assert rebuilt.name == cmap.name
        assert np.array_equal(rebuilt.adjacency, cmap.adjacency)


def test_nonzero_count_matches_relation_count():
    rng = np.random.default_rng(9)
    for _ in range(20):
        cmap = make_random_map(rng)
        assert np.count_nonzero(cmap.adjacency) == len(cmap.relations)


def test_from_adjacency_rejects_non_square():
    with pytest.raises(MapValidationError):
        from_adjacency([[0, 1, 0], [0, 0, 1]])
