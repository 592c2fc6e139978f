"""Analysis orchestration, rank comparison and report rendering.

A report bundles whatever was requested: the pairwise influence matrix
and its aggregates, the impulse aggregates (optionally on normalized
weights), stability, rank tables and rank-agreement statistics.  Text
output rounds to 3 decimals; csv and json carry full precision.

Normalization only ever applies to the impulse side.  The circuit method
scales linearly with the weights, so dividing them would change values
but never rankings; the impulse method needs the division to converge at
all, and its rankings do change with it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .errors import Unstable
from .impulse import StabilityReport, impulse_profile, spectral_radius
from .influence import InfluenceProfile, KMatrix, influence_profile, k_matrix, rank_concepts
from .model import CognitiveMap, scale_map
from .paths import DEFAULT_PATH_CAP

METRICS = ("pressure", "consequence", "amp-pressure", "amp-consequence")
METHODS = ("k", "impulse")


@dataclass
class AnalysisReport:
    name: str
    labels: list[str] = field(default_factory=list)
    stability: StabilityReport | None = None
    normalization: float | None = None
    normalized_stability: StabilityReport | None = None
    k_matrix: KMatrix | None = None
    k_profile: InfluenceProfile | None = None
    impulse_profile: InfluenceProfile | None = None
    rank_tables: dict[str, list[tuple[int, float]]] = field(default_factory=dict)
    concordance: dict[str, float] | None = None


def compare_rankings(a, b) -> float:
    """Kendall rank correlation between two orderings of the same concepts.

    1.0 for identical orders, -1.0 for exactly reversed ones.
    """
    a = list(a)
    b = list(b)
    if set(a) != set(b) or len(set(a)) != len(a) or len(set(b)) != len(b):
        raise ValueError("rankings must order the same set of concepts")
    if len(a) < 2:
        return 1.0
    pos_a = {c: i for i, c in enumerate(a)}
    pos_b = {c: i for i, c in enumerate(b)}
    concordant = discordant = 0
    for x, y in combinations(sorted(a), 2):
        sign = (pos_a[x] - pos_a[y]) * (pos_b[x] - pos_b[y])
        if sign > 0:
            concordant += 1
        elif sign < 0:
            discordant += 1
    return (concordant - discordant) / (len(a) * (len(a) - 1) / 2)


def analyze(
    cmap: CognitiveMap,
    *,
    include_k: bool = False,
    include_impulse: bool = False,
    keep_matrix: bool = True,
    metrics=METRICS,
    normalize: float | None = None,
    cap: int = DEFAULT_PATH_CAP,
    workers: int = 1,
) -> AnalysisReport:
    """Run the requested analyses on one map.

    ``normalize`` divides the weights by the given constant before the
    impulse computation only; the influence matrix always uses the raw
    weights.  ``keep_matrix=False`` drops the matrix from the report once
    the aggregates are computed (rank-only output).  Raises Unstable when
    impulse results are requested and the effective weights have spectral
    radius >= 1.
    """
    report = AnalysisReport(
        name=cmap.name,
        labels=[cmap.label_of(i + 1) for i in range(cmap.n)],
        stability=spectral_radius(cmap.adjacency),
    )

    impulse_map = cmap
    effective_stability = report.stability
    if normalize is not None and (include_impulse or not include_k):
        # normalization only concerns the impulse side; a request that
        # computes no impulse results must be unaffected by it
        impulse_map = scale_map(cmap, 1.0 / normalize)
        report.normalization = normalize
        report.normalized_stability = spectral_radius(impulse_map.adjacency)
        effective_stability = report.normalized_stability

    if include_k:
        matrix = k_matrix(cmap, cap=cap, workers=workers)
        report.k_matrix = matrix if keep_matrix else None
        report.k_profile = influence_profile(matrix)
        for metric in metrics:
            report.rank_tables[f"k:{metric}"] = rank_concepts(
                report.k_profile.component(metric)
            )

    if include_impulse:
        if not effective_stability.stable:
            raise Unstable(effective_stability.spectral_radius)
        report.impulse_profile = impulse_profile(impulse_map)
        for metric in metrics:
            report.rank_tables[f"impulse:{metric}"] = rank_concepts(
                report.impulse_profile.component(metric)
            )

    if include_k and include_impulse:
        report.concordance = {
            metric: compare_rankings(
                [cid for cid, _ in report.rank_tables[f"k:{metric}"]],
                [cid for cid, _ in report.rank_tables[f"impulse:{metric}"]],
            )
            for metric in metrics
        }
    return report


# -- rendering ---------------------------------------------------------------

def _fmt(value: float) -> str:
    return f"{value:.3f}"


def _matrix_block(values) -> list[str]:
    return ["  ".join(f"{v:8.3f}" for v in row) for row in values]


def _rank_block(table, labels) -> list[str]:
    width = max([7] + [len(label) for label in labels])
    lines = [f"rank  {'concept':<{width}}  value"]
    for position, (cid, value) in enumerate(table, start=1):
        lines.append(f"{position:>4}  {labels[cid - 1]:<{width}}  {_fmt(value)}")
    return lines


def _stability_lines(report: AnalysisReport) -> list[str]:
    lines = []
    s = report.stability
    if s is not None:
        state = "stable" if s.stable else "unstable"
        flag = "" if s.converged else ", estimate did not converge"
        lines.append(f"spectral radius = {_fmt(s.spectral_radius)}, {state}{flag}")
    if report.normalization is not None and report.normalized_stability is not None:
        ns = report.normalized_stability
        state = "stable" if ns.stable else "unstable"
        lines.append(
            f"after dividing weights by {report.normalization:g}: "
            f"spectral radius = {_fmt(ns.spectral_radius)}, {state}"
        )
    return lines


def render_report(report: AnalysisReport, format: str = "text") -> str:
    if format == "text":
        return _render_text(report)
    if format == "csv":
        return _render_csv(report)
    if format == "json":
        return _render_json(report)
    raise ValueError(f"unknown report format {format!r}")


def _render_text(report: AnalysisReport) -> str:
    out = [f"== {report.name or 'cognitive map'} =="]
    out.extend(_stability_lines(report))
    if report.k_matrix is not None:
        out.append("")
        out.append(f"influence matrix ({report.k_matrix.n} x {report.k_matrix.n}):")
        out.extend(_matrix_block(report.k_matrix.values))
    for key, table in report.rank_tables.items():
        method, metric = key.split(":", 1)
        out.append("")
        out.append(f"{metric} ranking ({method} method):")
        out.extend(_rank_block(table, report.labels))
    if report.concordance is not None:
        out.append("")
        out.append("rank agreement (Kendall tau, k vs impulse):")
        for metric, tau in report.concordance.items():
            out.append(f"  {metric:<16} {tau:+.3f}")
    return "\n".join(out) + "\n"


def _render_csv(report: AnalysisReport) -> str:
    rows = ["section,method,metric,row,col,label,value"]
    if report.stability is not None:
        s = report.stability
        rows.append(f"stability,,spectral_radius,,,,{float(s.spectral_radius)!r}")
        rows.append(f"stability,,stable,,,,{str(s.stable).lower()}")
    if report.normalization is not None and report.normalized_stability is not None:
        ns = report.normalized_stability
        rows.append(f"stability,,normalization,,,,{float(report.normalization)!r}")
        rows.append(f"stability,,normalized_spectral_radius,,,,{float(ns.spectral_radius)!r}")
    if report.k_matrix is not None:
        for i, row in enumerate(report.k_matrix.values, start=1):
            for j, value in enumerate(row, start=1):
                rows.append(f"kmatrix,k,,{i},{j},,{float(value)!r}")
    for attr, profile in (("k", report.k_profile), ("impulse", report.impulse_profile)):
        if profile is None:
            continue
        for metric in METRICS:
            for cid, value in enumerate(profile.component(metric), start=1):
                rows.append(f"profile,{attr},{metric},{cid},,,{float(value)!r}")
    for key, table in report.rank_tables.items():
        method, metric = key.split(":", 1)
        for position, (cid, value) in enumerate(table, start=1):
            label = report.labels[cid - 1]
            rows.append(f"rank,{method},{metric},{position},{cid},{label},{value!r}")
    if report.concordance is not None:
        for metric, tau in report.concordance.items():
            rows.append(f"concordance,both,{metric},,,,{tau!r}")
    return "\n".join(rows) + "\n"


def report_to_dict(report: AnalysisReport) -> dict:
    """Report as a JSON-ready dict; the wire format of the service layer."""
    profiles = {}
    for method, profile in (("k", report.k_profile), ("impulse", report.impulse_profile)):
        profiles[method] = (
            None
            if profile is None
            else {metric: [float(v) for v in profile.component(metric)] for metric in METRICS}
        )
    ranks: dict[str, dict[str, list]] = {}
    for key, table in report.rank_tables.items():
        method, metric = key.split(":", 1)
        ranks.setdefault(method, {})[metric] = [
            {
                "rank": position,
                "id": cid,
                "label": report.labels[cid - 1],
                "value": float(value),
            }
            for position, (cid, value) in enumerate(table, start=1)
        ]
    stability = None
    if report.stability is not None:
        stability = {
            "spectral_radius": float(report.stability.spectral_radius),
            "stable": report.stability.stable,
            "iterations_used": report.stability.iterations_used,
            "converged": report.stability.converged,
            "normalization": report.normalization,
            "normalized_spectral_radius": (
                None
                if report.normalized_stability is None
                else float(report.normalized_stability.spectral_radius)
            ),
        }
    return {
        "k_matrix": (
            None
            if report.k_matrix is None
            else [[float(v) for v in row] for row in report.k_matrix.values]
        ),
        "profiles": profiles,
        "ranks": ranks,
        "stability": stability,
        "concordance": report.concordance,
    }


def _render_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def render_impulse_values(values, labels, format: str = "text") -> str:
    """Render a converged impulse value vector."""
    if format == "json":
        return json.dumps({"values": [float(v) for v in values]}, indent=2) + "\n"
    if format == "csv":
        rows = ["step,concept,label,value"]
        rows.extend(
            f"inf,{cid},{labels[cid - 1]},{float(v)!r}"
            for cid, v in enumerate(values, start=1)
        )
        return "\n".join(rows) + "\n"
    width = max([7] + [len(label) for label in labels])
    lines = ["converged concept values:"]
    lines.extend(
        f"  {labels[cid - 1]:<{width}}  {_fmt(float(v))}"
        for cid, v in enumerate(values, start=1)
    )
    return "\n".join(lines) + "\n"


def render_impulse_trajectory(state, labels, format: str = "text") -> str:
    """Render a simulated trajectory of concept values."""
    if format == "json":
        doc = {
            "trajectory": [[float(v) for v in step] for step in state.trajectory],
            "pulses": [[float(v) for v in step] for step in state.pulses],
        }
        return json.dumps(doc, indent=2) + "\n"
    if format == "csv":
        rows = ["step,concept,label,value"]
        for n, step in enumerate(state.trajectory):
            rows.extend(
                f"{n},{cid},{labels[cid - 1]},{float(v)!r}"
                for cid, v in enumerate(step, start=1)
            )
        return "\n".join(rows) + "\n"
    header = "   n  " + "  ".join(f"{label:>12}" for label in labels)
    lines = [header]
    for n, step in enumerate(state.trajectory):
        lines.append(f"{n:>4}  " + "  ".join(f"{float(v):12.4g}" for v in step))
    return "\n".join(lines) + "\n"
