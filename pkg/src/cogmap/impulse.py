"""Impulse propagation: iterative pulse spreading and its closed form.

The iteration is v(n+1) = v(n) + W p(n) with p(n) = v(n) - v(n-1) and
v(0) = v_init + p(0).  When the spectral radius of W is below 1 the
trajectory converges to v_init + (I - W)^-1 p(0).

Orientation: the update multiplies the adjacency matrix as stored
(row-source convention, W[i][j] = weight of i -> j).  This was calibrated
against the golden collective-influence values and is exposed as
ORIENTATION; the transposed convention reproduces none of them.

Unlike the circuit method, results here scale nonlinearly with the
weights and may diverge; callers must normalize unstable maps first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergenceDetected, Unstable
from .influence import InfluenceProfile
from .model import CognitiveMap

ORIENTATION = "row-source"

OVERFLOW_GUARD = 1e300
STABILITY_MARGIN = 1e-9


@dataclass(frozen=True)
class ImpulseState:
    """Trajectory of concept values and pulses, index n = 0..n_steps."""

    v_init: np.ndarray
    p0: np.ndarray
    trajectory: list[np.ndarray]
    pulses: list[np.ndarray]

    @property
    def final(self) -> np.ndarray:
        return self.trajectory[-1]


@dataclass(frozen=True)
class StabilityReport:
    spectral_radius: float
    stable: bool
    iterations_used: int
    converged: bool = True


@dataclass(frozen=True)
class ImpulseOmega:
    """Accumulated-response matrix (I - W)^-1 under the pinned orientation."""

    omega: np.ndarray
    orientation: str = ORIENTATION


def _vector(x, n: int) -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if v.shape != (n,):
        raise ValueError(f"expected a length-{n} vector, got shape {v.shape}")
    return v.copy()


def impulse_simulate(
    cmap: CognitiveMap, v_init, p0, n_steps: int
) -> ImpulseState:
    """Run the pulse iteration for ``n_steps`` steps.

    Aborts with DivergenceDetected when any component magnitude passes
    1e300, reporting the step at which it happened.
    """
    if n_steps < 0:
        raise ValueError("n_steps must be >= 0")
    n = cmap.n
    v_init = _vector(v_init, n)
    p = _vector(p0, n)
    w = cmap.adjacency
    v = v_init + p
    trajectory = [v.copy()]
    pulses = [p.copy()]
    for step in range(1, n_steps + 1):
        v = v + w @ p
        p = v - trajectory[-1]
        if np.max(np.abs(v)) > OVERFLOW_GUARD:
            raise DivergenceDetected(step)
        trajectory.append(v.copy())
        pulses.append(p.copy())
    return ImpulseState(v_init, pulses[0].copy(), trajectory, pulses)


def spectral_radius(matrix, tol: float = 1e-6, max_squarings: int = 60) -> StabilityReport:
    """Largest eigenvalue magnitude via norm limits of repeated squaring.

    Tracks ||W^(2^k)||^(1/2^k) with rescaling at every squaring; handles
    complex dominant eigenvalue pairs, where a plain power iteration on
    vectors oscillates.  Returns the best estimate with converged=False
    if the budget runs out.
    """
    w = np.asarray(matrix, dtype=float)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ValueError("spectral radius needs a square matrix")
    if w.size == 0 or not np.any(w):
        return StabilityReport(0.0, True, 0)

    a = w.copy()
    log_scale = 0.0
    power = 1
    previous = None
    for iteration in range(1, max_squarings + 1):
        norm = float(np.linalg.norm(a, ord=np.inf))
        if norm == 0.0:
            # exactly nilpotent: all eigenvalues are zero
            return StabilityReport(0.0, True, iteration)
        estimate = math.exp((log_scale + math.log(norm)) / power)
        if previous is not None and abs(estimate - previous) <= tol * max(1.0, estimate):
            return StabilityReport(estimate, estimate < 1.0 - STABILITY_MARGIN, iteration)
        previous = estimate
        a = a / norm
        log_scale = 2.0 * (log_scale + math.log(norm))
        a = a @ a
        power *= 2
    return StabilityReport(previous, previous < 1.0 - STABILITY_MARGIN, max_squarings, converged=False)


def _require_stable(cmap: CognitiveMap) -> StabilityReport:
    report = spectral_radius(cmap.adjacency)
    if not report.stable:
        raise Unstable(report.spectral_radius)
    return report


def impulse_omega(cmap: CognitiveMap) -> ImpulseOmega:
    _require_stable(cmap)
    n = cmap.n
    return ImpulseOmega(np.linalg.inv(np.eye(n) - cmap.adjacency))


def impulse_closed_form(cmap: CognitiveMap, v_init, p0) -> np.ndarray:
    """Limit of the pulse iteration, v_init + (I - W)^-1 p0."""
    n = cmap.n
    v_init = _vector(v_init, n)
    p0 = _vector(p0, n)
    omega = impulse_omega(cmap).omega
    return v_init + omega @ p0


def impulse_profile(cmap: CognitiveMap) -> InfluenceProfile:
    """Collective influence analogs from the accumulated-response matrix.

    With Omega = (I - W)^-1: pressure on b sums column b off the diagonal,
    consequence of a sums row a off the diagonal; the amp variants use
    absolute values.
    """
    omega = impulse_omega(cmap).omega
    diag = np.diag(omega)
    return InfluenceProfile(
        pressure=omega.sum(axis=0) - diag,
        consequence=omega.sum(axis=1) - diag,
        amp_pressure=np.abs(omega).sum(axis=0) - np.abs(diag),
        amp_consequence=np.abs(omega).sum(axis=1) - np.abs(diag),
    )


def parse_vector_spec(spec, n: int) -> np.ndarray:
    """Build a length-n vector from a request spec.

    Accepts a sequence of numbers, a comma-separated string, or the
    shorthands "zero", "all-ones" and "unit:<concept id>".
    """
    if isinstance(spec, str):
        text = spec.strip()
        if text == "zero":
            return np.zeros(n)
        if text == "all-ones":
            return np.ones(n)
        if text.startswith("unit:"):
            try:
                cid = int(text.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad unit pulse spec {spec!r}; use unit:<concept id>")
            if not 1 <= cid <= n:
                raise ValueError(f"unit pulse concept {cid} not in map (1..{n})")
            vec = np.zeros(n)
            vec[cid - 1] = 1.0
            return vec
        try:
            values = [float(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(
                f"bad vector spec {spec!r}; use comma-separated numbers, "
                f"'zero', 'all-ones' or 'unit:<id>'"
            )
        return _vector(values, n)
    return _vector(spec, n)


def pressure_single(cmap: CognitiveMap, beta: int) -> float:
    """Pressure on one concept built constructively.

    Unit pulses are placed on every concept except ``beta`` and the
    accumulated response at ``beta`` is read off along the incoming
    direction; equal to impulse_profile().pressure[beta-1] by
    construction.
    """
    if not 1 <= beta <= cmap.n:
        raise ValueError(f"concept {beta} not in map (1..{cmap.n})")
    omega = impulse_omega(cmap).omega
    pulse = np.ones(cmap.n)
    pulse[beta - 1] = 0.0
    return float((omega.T @ pulse)[beta - 1])
