"""Core representation of cognitive maps.

A cognitive map is a weighted signed digraph: concepts are vertices,
relations are directed edges whose sign encodes reinforcing (positive)
or inhibiting (negative) influence.  Concept ids are 1-based and
contiguous in all public interfaces; array indices are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MapValidationError


@dataclass(frozen=True)
class Concept:
    id: int
    label: str = ""


@dataclass(frozen=True)
class Relation:
    source: int
    target: int
    weight: float


@dataclass(frozen=True)
class CognitiveMap:
    """Immutable validated map with its adjacency matrix materialized.

    ``adjacency[i][j]`` is the weight of the relation ``(i+1) -> (j+1)``,
    0 when absent.  The array is marked read-only; maps are safe to share
    across parallel workers.
    """

    concepts: tuple[Concept, ...]
    relations: tuple[Relation, ...]
    adjacency: np.ndarray
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.concepts)

    def label_of(self, concept_id: int) -> str:
        label = self.concepts[concept_id - 1].label
        return label if label else f"C{concept_id}"

    def weight(self, source: int, target: int) -> float:
        return float(self.adjacency[source - 1, target - 1])

    def successors(self, concept_id: int) -> list[int]:
        """Out-neighbors of a concept, ascending."""
        row = self.adjacency[concept_id - 1]
        return [j + 1 for j in np.flatnonzero(row)]


def build_map(concepts, relations, name: str = "") -> CognitiveMap:
    """Validate concepts and relations and assemble a CognitiveMap.

    Raises MapValidationError on duplicate ids, a non-contiguous id range,
    unknown endpoints, duplicate ordered relations, self-loops, or zero
    weights.
    """
    concepts = tuple(concepts)
    relations = tuple(relations)
    n = len(concepts)

    ids = [c.id for c in concepts]
    if len(set(ids)) != n:
        raise MapValidationError("duplicate concept ids")
    if sorted(ids) != list(range(1, n + 1)):
        raise MapValidationError(f"concept ids must be exactly 1..{n}")

    by_id = sorted(concepts, key=lambda c: c.id)
    adjacency = np.zeros((n, n))
    seen: set[tuple[int, int]] = set()
    for rel in relations:
        if not (1 <= rel.source <= n) or not (1 <= rel.target <= n):
            raise MapValidationError(
                f"relation {rel.source}->{rel.target} references an unknown concept"
            )
        if rel.source == rel.target:
            raise MapValidationError(f"self-loop on concept {rel.source} rejected")
        if rel.weight == 0:
            raise MapValidationError(
                f"relation {rel.source}->{rel.target} has zero weight; "
                f"omit it instead"
            )
        key = (rel.source, rel.target)
        if key in seen:
            raise MapValidationError(f"duplicate relation {rel.source}->{rel.target}")
        seen.add(key)
        adjacency[rel.source - 1, rel.target - 1] = rel.weight

    adjacency.setflags(write=False)
    return CognitiveMap(tuple(by_id), relations, adjacency, name)


def from_adjacency(matrix, name: str = "", labels=None) -> CognitiveMap:
    """Build a map from a square weight matrix (row index = source)."""
    w = np.asarray(matrix, dtype=float)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise MapValidationError("adjacency matrix must be square")
    n = w.shape[0]
    labels = labels or [""] * n
    concepts = [Concept(i + 1, labels[i]) for i in range(n)]
    relations = [
        Relation(i + 1, j + 1, float(w[i, j]))
        for i in range(n)
        for j in range(n)
        if w[i, j] != 0
    ]
    return build_map(concepts, relations, name)


def scale_map(cmap: CognitiveMap, factor: float) -> CognitiveMap:
    """Multiply every relation weight by ``factor``; topology unchanged.

    Normalizing by a divisor c is ``scale_map(m, 1 / c)``.
    """
    if factor == 0:
        raise MapValidationError("scale factor must be nonzero")
    relations = [
        Relation(r.source, r.target, r.weight * factor) for r in cmap.relations
    ]
    return build_map(cmap.concepts, relations, cmap.name)


def adjacency_of(cmap: CognitiveMap) -> np.ndarray:
    """Writable copy of the adjacency matrix, row-source convention."""
    return cmap.adjacency.copy()
