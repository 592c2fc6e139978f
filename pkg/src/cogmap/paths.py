"""Simple directed path enumeration and per-pair path subgraphs.

The influence of one concept on another is computed on the subgraph made
of every simple directed path between them.  "Simple" (no repeated node)
is the load-bearing choice: a back edge between two mutually linked
concepts lies on no simple path and must not leak into the subgraph.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import PathExplosion
from .model import CognitiveMap

DEFAULT_PATH_CAP = 1_000_000


@dataclass(frozen=True)
class SimplePath:
    nodes: tuple[int, ...]
    edge_weights: tuple[float, ...]


@dataclass(frozen=True)
class PathSubgraph:
    """Union of the edges of all simple paths source -> sink."""

    source: int
    sink: int
    edges: frozenset[tuple[int, int, float]]
    node_set: frozenset[int]

    @property
    def empty(self) -> bool:
        return not self.edges


def _check_pair(cmap: CognitiveMap, source: int, sink: int) -> None:
    for cid in (source, sink):
        if not 1 <= cid <= cmap.n:
            raise ValueError(f"concept {cid} not in map (1..{cmap.n})")
    if source == sink:
        raise ValueError("source and sink must differ")


def _reaches_sink(cmap: CognitiveMap, sink: int) -> set[int]:
    # reverse reachability; lets the DFS skip branches that cannot finish
    preds: dict[int, list[int]] = {i + 1: [] for i in range(cmap.n)}
    for rel in cmap.relations:
        preds[rel.target].append(rel.source)
    seen = {sink}
    stack = [sink]
    while stack:
        for p in preds[stack.pop()]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def enumerate_simple_paths(
    cmap: CognitiveMap, source: int, sink: int, cap: int = DEFAULT_PATH_CAP
) -> list[SimplePath]:
    """All simple directed paths source -> sink, lexicographic by node sequence.

    Backtracking depth-first search with an on-path visited set.  Raises
    PathExplosion as soon as more than ``cap`` paths are found; silent
    truncation would corrupt every downstream influence value.
    """
    _check_pair(cmap, source, sink)
    if cap < 1:
        raise ValueError("cap must be >= 1")

    alive = _reaches_sink(cmap, sink)
    if source not in alive:
        return []

    found: list[tuple[int, ...]] = []
    on_path = {source}
    prefix = [source]

    def visit(node: int) -> None:
        for nxt in cmap.successors(node):
            if nxt == sink:
                if len(found) >= cap:
                    raise PathExplosion(source, sink, cap)
                found.append((*prefix, sink))
            elif nxt not in on_path and nxt in alive:
                on_path.add(nxt)
                prefix.append(nxt)
                visit(nxt)
                prefix.pop()
                on_path.remove(nxt)

    visit(source)
    found.sort()
    return [
        SimplePath(p, tuple(cmap.weight(u, v) for u, v in zip(p, p[1:])))
        for p in found
    ]


def extract_subgraph(
    cmap: CognitiveMap, source: int, sink: int, cap: int = DEFAULT_PATH_CAP
) -> PathSubgraph:
    """Edge union of all simple paths source -> sink (empty when unreachable)."""
    paths = enumerate_simple_paths(cmap, source, sink, cap)
    edges = {
        (u, v, cmap.weight(u, v))
        for path in paths
        for u, v in zip(path.nodes, path.nodes[1:])
    }
    nodes = {u for u, _, _ in edges} | {v for _, v, _ in edges}
    return PathSubgraph(source, sink, frozenset(edges), frozenset(nodes))
