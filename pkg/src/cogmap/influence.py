"""Pairwise influence matrix (K-matrix) and collective influence aggregates.

The entry K[a][b] is the potential induced at concept b when the subgraph
of all simple paths a -> b is read as a resistor network grounded at a.
Unreachable pairs and the diagonal are zero.  Note K[a][b] is not the raw
edge weight even for adjacent concepts: every mediated route contributes.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .circuit import solve_potentials, symmetrize
from .errors import PathExplosion
from .model import CognitiveMap
from .paths import DEFAULT_PATH_CAP, PathSubgraph, enumerate_simple_paths


@dataclass(frozen=True)
class KMatrix:
    """N x N influence values plus per-entry diagnostics.

    path_counts[a][b] and branch_counts[a][b] record how many simple paths
    and how many distinct edges backed each entry.
    """

    values: np.ndarray
    path_counts: np.ndarray
    branch_counts: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class InfluenceProfile:
    """Per-concept collective influence, index = concept id - 1.

    pressure[b]: total influence of all concepts on b (column sums);
    consequence[a]: total influence of a on all concepts (row sums);
    the amp_* variants sum absolute values.
    """

    pressure: np.ndarray
    consequence: np.ndarray
    amp_pressure: np.ndarray
    amp_consequence: np.ndarray

    def component(self, metric: str) -> np.ndarray:
        return {
            "pressure": self.pressure,
            "consequence": self.consequence,
            "amp-pressure": self.amp_pressure,
            "amp-consequence": self.amp_consequence,
        }[metric]


def k_entry(
    cmap: CognitiveMap, source: int, sink: int, cap: int = DEFAULT_PATH_CAP
) -> float:
    """Influence of ``source`` on ``sink``; 0 when unreachable."""
    value, _, _ = _pair_result(cmap, source, sink, cap)
    return value


def _pair_result(cmap: CognitiveMap, source: int, sink: int, cap: int):
    paths = enumerate_simple_paths(cmap, source, sink, cap)
    if not paths:
        return 0.0, 0, 0
    edges = {
        (u, v, cmap.weight(u, v))
        for path in paths
        for u, v in zip(path.nodes, path.nodes[1:])
    }
    nodes = {u for u, _, _ in edges} | {v for _, v, _ in edges}
    subgraph = PathSubgraph(source, sink, frozenset(edges), frozenset(nodes))
    network = symmetrize(subgraph)
    potentials = solve_potentials(network)
    return potentials[sink], len(paths), len(network.branches)


def _pair_worker(args):
    cmap, source, sink, cap = args
    try:
        return _pair_result(cmap, source, sink, cap)
    except PathExplosion:
        return None


def k_matrix(
    cmap: CognitiveMap,
    cap: int = DEFAULT_PATH_CAP,
    workers: int = 1,
) -> KMatrix:
    """Influence values for every ordered concept pair.

    Entries are independent, so they may be computed by a pool of
    ``workers`` processes; results are assembled in pair order and are
    bit-identical to the sequential computation.
    """
    n = cmap.n
    values = np.zeros((n, n))
    path_counts = np.zeros((n, n), dtype=int)
    branch_counts = np.zeros((n, n), dtype=int)
    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]

    if workers > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    _pair_worker,
                    [(cmap, a, b, cap) for a, b in pairs],
                    chunksize=max(1, len(pairs) // (workers * 4)),
                )
            )
        for (a, b), result in zip(pairs, results):
            if result is None:
                raise PathExplosion(a, b, cap)
            values[a - 1, b - 1], path_counts[a - 1, b - 1], branch_counts[a - 1, b - 1] = result
    else:
        for a, b in pairs:
            values[a - 1, b - 1], path_counts[a - 1, b - 1], branch_counts[a - 1, b - 1] = (
                _pair_result(cmap, a, b, cap)
            )
    return KMatrix(values, path_counts, branch_counts)


def influence_profile(matrix: KMatrix | np.ndarray) -> InfluenceProfile:
    """Column and row aggregates of an influence matrix.

    The diagonal is zero by construction, so plain sums already exclude
    self-influence.
    """
    values = matrix.values if isinstance(matrix, KMatrix) else np.asarray(matrix)
    return InfluenceProfile(
        pressure=values.sum(axis=0),
        consequence=values.sum(axis=1),
        amp_pressure=np.abs(values).sum(axis=0),
        amp_consequence=np.abs(values).sum(axis=1),
    )


def rank_concepts(component) -> list[tuple[int, float]]:
    """(concept id, value) pairs sorted by descending value, ties by id."""
    values = np.asarray(component, dtype=float)
    order = sorted(range(len(values)), key=lambda i: (-values[i], i))
    return [(i + 1, float(values[i])) for i in order]
