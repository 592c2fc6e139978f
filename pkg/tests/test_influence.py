import numpy as np
import pytest

from cogmap import (
    PathExplosion,
    build_map,
    Concept,
    influence_profile,
    k_entry,
    k_matrix,
    rank_concepts,
    scale_map,
)

import goldens
from conftest import make_random_map


def reachable_from(cmap, source):
    seen = {source}
    stack = [source]
    while stack:
        for nxt in cmap.successors(stack.pop()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def test_entry_single_path_sums_weights(map_signed):
    # the only simple path 4 -> 2 is 4,7,6,1,3,2 with weights 1,1,-1,1,1
    assert k_entry(map_signed, 4, 2) == pytest.approx(3.0, abs=1e-9)


def test_entry_direct_and_absent(map_q):
    assert k_entry(map_q, 1, 2) == pytest.approx(0.7)
    assert k_entry(map_q, 2, 1) == 0.0


def test_entry_multi_loop(map_signed):
    assert k_entry(map_signed, 3, 6) == pytest.approx(23 / 17, abs=2e-3)


def test_signed_matrix_golden(map_signed):
    values = k_matrix(map_signed).values
    assert np.max(np.abs(values - goldens.K_SIGNED)) <= 2e-3
    assert np.all(np.diag(values) == 0)


def test_weighted_matrix_golden(map_weighted):
    values = k_matrix(map_weighted).values
    assert np.max(np.abs(values - goldens.K_WEIGHTED)) <= 2e-3


def test_empty_map_zero_matrix():
    cmap = build_map([Concept(1), Concept(2), Concept(3)], [])
    km = k_matrix(cmap)
    assert not km.values.any()
    assert not km.path_counts.any()


def test_provenance_counts(map_signed):
    km = k_matrix(map_signed)
    assert km.path_counts[0, 5] == 3       # three simple paths 1 -> 6
    assert km.branch_counts[4, 6] == 5     # five edges back the 5 -> 7 entry
    assert km.path_counts[1, 0] == 1


def test_matrix_parallel_is_bit_identical(map_signed):
    sequential = k_matrix(map_signed)
    parallel = k_matrix(map_signed, workers=2)
    assert np.array_equal(sequential.values, parallel.values)
    assert np.array_equal(sequential.path_counts, parallel.path_counts)


def test_path_explosion_propagates(map_signed):
    with pytest.raises(PathExplosion) as info:
        k_matrix(map_signed, cap=2)
    assert (info.value.source, info.value.sink) != (0, 0)


def test_path_explosion_propagates_parallel(map_signed):
    with pytest.raises(PathExplosion):
        k_matrix(map_signed, cap=2, workers=2)


def test_profile_signed_aggregates(map_signed):
    profile = influence_profile(k_matrix(map_signed))
    assert profile.pressure[4] == pytest.approx(12, abs=2e-2)
    assert profile.pressure[1] == pytest.approx(9.333, abs=2e-2)
    assert profile.consequence[1] == pytest.approx(13.6, abs=2e-2)
    assert profile.consequence[3] == pytest.approx(12, abs=2e-2)
    assert np.allclose(profile.pressure, goldens.SIGNED_PRESSURE, atol=2e-2)
    assert np.allclose(profile.amp_pressure, goldens.SIGNED_AMP_PRESSURE, atol=2e-2)
    assert np.allclose(profile.consequence, goldens.SIGNED_CONSEQUENCE, atol=2e-2)
    assert np.allclose(profile.amp_consequence, goldens.SIGNED_AMP_CONSEQUENCE, atol=2e-2)


def test_profile_weighted_aggregates(map_weighted):
    profile = influence_profile(k_matrix(map_weighted))
    assert profile.pressure[4] == pytest.approx(10.1, abs=2e-2)
    assert profile.consequence[3] == pytest.approx(11.6, abs=2e-2)
    assert profile.amp_consequence[4] == pytest.approx(2.9, abs=2e-2)
    assert np.allclose(profile.pressure, goldens.WEIGHTED_PRESSURE, atol=2e-2)


def test_all_positive_profile_equals_amp():
    cmap = build_map(
        [Concept(1), Concept(2), Concept(3)],
        [],
    )
    values = np.array([[0, 1.0, 2.0], [0.5, 0, 0.25], [1.5, 2.5, 0]])
    profile = influence_profile(values)
    assert np.array_equal(profile.pressure, profile.amp_pressure)
    assert np.array_equal(profile.consequence, profile.amp_consequence)


def test_rank_signed_pressure(map_signed):
    profile = influence_profile(k_matrix(map_signed))
    order = tuple(cid for cid, _ in rank_concepts(profile.pressure))
    assert order == goldens.SIGNED_RANKS["pressure"]


def test_rank_weighted_consequence(map_weighted):
    profile = influence_profile(k_matrix(map_weighted))
    order = tuple(cid for cid, _ in rank_concepts(profile.consequence))
    assert order == goldens.WEIGHTED_RANKS["consequence"]


def test_rank_tie_break_ascending_id():
    assert rank_concepts([1.0, 1.0, 1.0, 1.0]) == [
        (1, 1.0),
        (2, 1.0),
        (3, 1.0),
        (4, 1.0),
    ]


def test_profile_invariants_random(random_maps_small):
    for cmap in random_maps_small[:10]:
        profile = influence_profile(k_matrix(cmap))
        assert np.all(profile.amp_pressure >= np.abs(profile.pressure) - 1e-12)
        assert np.all(profile.amp_consequence >= np.abs(profile.consequence) - 1e-12)
        assert profile.pressure.sum() == pytest.approx(
            profile.consequence.sum(), abs=1e-9
        )


def test_scale_equivariance(map_signed, map_weighted):
    for cmap in (map_signed, map_weighted):
        base = k_matrix(cmap).values
        for factor in (0.5, 1 / 1.2, 4.0):
            scaled = k_matrix(scale_map(cmap, factor)).values
            assert np.max(np.abs(scaled - factor * base)) <= 1e-9


def test_rank_invariance_under_positive_scaling(map_signed):
    base = influence_profile(k_matrix(map_signed))
    scaled = influence_profile(k_matrix(scale_map(map_signed, 1 / 1.2)))
    for metric in ("pressure", "consequence", "amp-pressure", "amp-consequence"):
        assert [c for c, _ in rank_concepts(base.component(metric))] == [
            c for c, _ in rank_concepts(scaled.component(metric))
        ]


def test_unreachable_pairs_are_zero(random_maps_small):
    for cmap in random_maps_small[:10]:
        values = k_matrix(cmap).values
        for source in range(1, cmap.n + 1):
            reach = reachable_from(cmap, source)
            for sink in range(1, cmap.n + 1):
                if sink != source and sink not in reach:
                    assert values[source - 1, sink - 1] == 0.0
        assert np.all(np.diag(values) == 0)


def test_adjacent_entry_includes_mediated_routes(map_signed, map_weighted):
    # adjacent concepts are not shortcut to their direct weight: a second
    # route through 6, 1 and 4 pulls the 5 -> 7 influence off the edge value
    assert map_signed.weight(5, 7) == -1.0
    assert k_entry(map_signed, 5, 7) == pytest.approx(-0.8, abs=1e-9)
    assert map_weighted.weight(5, 7) == -0.9
    assert k_entry(map_weighted, 5, 7) == pytest.approx(-0.6, abs=2e-3)
