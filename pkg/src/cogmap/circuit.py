"""Resistor-network reading of a path subgraph.

Each directed edge becomes a branch of an electrical network: unit
resistance, EMF equal to the edge weight, free to carry current in either
direction (the graph is symmetrized) while keeping its original
orientation for the EMF sign.  Grounding the source concept and solving
Kirchhoff's equations yields node potentials; the potential at the sink
is the influence value.

Sign conventions, pinned by the golden examples:
  - incidence row: +1 at the branch's from-node column, -1 at its to-node
    column, ground column deleted;
  - branch current: I = (phi_from - phi_to + emf) / R, so traversing a
    branch along its orientation at zero current raises the potential
    by emf.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDefinite, SingularSystem
from .paths import PathSubgraph


@dataclass(frozen=True)
class Branch:
    from_node: int
    to_node: int
    emf: float
    resistance: float = 1.0


@dataclass(frozen=True)
class BranchNetwork:
    branches: tuple[Branch, ...]
    nodes: tuple[int, ...]
    ground: int

    @property
    def empty(self) -> bool:
        return not self.branches


@dataclass(frozen=True)
class PotentialVector:
    phi: dict[int, float]
    ground: int

    def __getitem__(self, concept_id: int) -> float:
        return self.phi[concept_id]


def symmetrize(subgraph: PathSubgraph) -> BranchNetwork:
    """One branch per directed edge, ground at the subgraph source.

    Antiparallel edges stay two distinct parallel branches; merging them
    would change both the effective resistance and the EMF pattern.
    """
    branches = tuple(
        Branch(u, v, w) for u, v, w in sorted(subgraph.edges)
    )
    return BranchNetwork(branches, tuple(sorted(subgraph.node_set)), subgraph.source)


def incidence_matrix(network: BranchNetwork) -> np.ndarray:
    """Reduced branch-node incidence matrix, M x (N-1).

    Row per branch, column per non-ground node in ascending node order.
    """
    if network.empty:
        raise ValueError("incidence matrix of an empty network")
    cols = {v: i for i, v in enumerate(n for n in network.nodes if n != network.ground)}
    omega = np.zeros((len(network.branches), len(cols)))
    for i, b in enumerate(network.branches):
        if b.from_node != network.ground:
            omega[i, cols[b.from_node]] = 1.0
        if b.to_node != network.ground:
            omega[i, cols[b.to_node]] = -1.0
    return omega


def emf_vector(network: BranchNetwork) -> np.ndarray:
    return np.array([b.emf for b in network.branches])


def solve_spd(matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve a symmetric positive definite system by direct factorization.

    Raises NotPositiveDefinite when a Cholesky pivot fails.
    """
    a = np.asarray(matrix, dtype=float)
    b = np.asarray(rhs, dtype=float)
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if a.size and float(np.max(np.abs(a - a.T))) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    try:
        lower = np.linalg.cholesky(a)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite(str(exc)) from exc
    # forward then back substitution on the triangular factors
    n = a.shape[0]
    y = np.zeros(n)
    for i in range(n):
        y[i] = (b[i] - lower[i, :i] @ y[:i]) / lower[i, i]
    x = np.zeros(n)
    upper = lower.T
    for i in range(n - 1, -1, -1):
        x[i] = (y[i] - upper[i, i + 1:] @ x[i + 1:]) / upper[i, i]
    return x


def solve_potentials(network: BranchNetwork) -> PotentialVector:
    """Node potentials of a connected branch network, ground pinned to 0.

    Solves the nodal system (Omega^T Omega) phi = -Omega^T E, which is
    Kirchhoff's current law at unit resistance.
    """
    if network.empty:
        raise ValueError("cannot solve an empty network")
    omega = incidence_matrix(network)
    emfs = emf_vector(network)
    try:
        reduced = solve_spd(omega.T @ omega, -omega.T @ emfs)
    except NotPositiveDefinite as exc:
        raise SingularSystem(
            "nodal system not positive definite; network is disconnected"
        ) from exc
    phi = {network.ground: 0.0}
    non_ground = [n for n in network.nodes if n != network.ground]
    for node, value in zip(non_ground, reduced):
        phi[node] = float(value)
    return PotentialVector(phi, network.ground)


def branch_currents(network: BranchNetwork, potentials: PotentialVector) -> np.ndarray:
    return np.array([
        (potentials[b.from_node] - potentials[b.to_node] + b.emf) / b.resistance
        for b in network.branches
    ])


def kcl_residuals(network: BranchNetwork, potentials: PotentialVector) -> dict[int, float]:
    """Signed current balance at every node, ground included."""
    currents = branch_currents(network, potentials)
    residual = dict.fromkeys(network.nodes, 0.0)
    for b, current in zip(network.branches, currents):
        residual[b.from_node] += current
        residual[b.to_node] -= current
    return residual
