"""Cognitive map analysis toolkit.

Two methods over weighted signed digraphs: pairwise influence through a
resistor-network reading of per-pair path subgraphs (the K-matrix), and
classical impulse propagation, plus collective influence aggregates,
rankings and comparison reports.
"""

__version__ = "0.1.0"

from .circuit import (
    Branch,
    BranchNetwork,
    PotentialVector,
    branch_currents,
    incidence_matrix,
    kcl_residuals,
    solve_potentials,
    solve_spd,
    symmetrize,
)
from .errors import (
    CogmapError,
    DivergenceDetected,
    MapParseError,
    MapValidationError,
    NotPositiveDefinite,
    PathExplosion,
    SingularSystem,
    Unstable,
)
from .impulse import (
    ImpulseOmega,
    ImpulseState,
    StabilityReport,
    impulse_closed_form,
    impulse_omega,
    impulse_profile,
    impulse_simulate,
    pressure_single,
    spectral_radius,
)
from .influence import (
    InfluenceProfile,
    KMatrix,
    influence_profile,
    k_entry,
    k_matrix,
    rank_concepts,
)
from .mapio import dump_map_csv, dump_map_json, load_map, parse_map
from .model import (
    CognitiveMap,
    Concept,
    Relation,
    adjacency_of,
    build_map,
    from_adjacency,
    scale_map,
)
from .paths import (
    DEFAULT_PATH_CAP,
    PathSubgraph,
    SimplePath,
    enumerate_simple_paths,
    extract_subgraph,
)
from .report import AnalysisReport, METRICS, analyze, compare_rankings, render_report
