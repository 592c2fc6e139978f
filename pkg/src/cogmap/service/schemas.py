"""Pydantic request and response models for the analysis service."""
from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..model import CognitiveMap, Concept, Relation, build_map
from ..paths import DEFAULT_PATH_CAP

Metric = Literal["pressure", "consequence", "amp-pressure", "amp-consequence"]
Method = Literal["k", "impulse", "both"]


class ConceptModel(BaseModel):
    id: int
    label: str = ""


class RelationModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    source: int = Field(alias="from")
    target: int = Field(alias="to")
    weight: float


class MapModel(BaseModel):
    """Wire form of a cognitive map; same schema as the JSON map file."""

    version: str = "1"
    name: str = ""
    concepts: list[ConceptModel]
    relations: list[RelationModel]

    def to_domain(self) -> CognitiveMap:
        concepts = [Concept(c.id, c.label or f"C{c.id}") for c in self.concepts]
        relations = [Relation(r.source, r.target, r.weight) for r in self.relations]
        return build_map(concepts, relations, self.name)

    @classmethod
    def from_domain(cls, cmap: CognitiveMap) -> "MapModel":
        return cls(
            name=cmap.name,
            concepts=[ConceptModel(id=c.id, label=c.label) for c in cmap.concepts],
            relations=[
                RelationModel(source=r.source, target=r.target, weight=r.weight)
                for r in cmap.relations
            ],
        )


def _check_normalize(value):
    if value == 0:
        raise ValueError("normalize divisor must be nonzero")
    return value


class KMatrixRequest(BaseModel):
    map: MapModel
    path_cap: int = Field(default=DEFAULT_PATH_CAP, ge=1)
    parallel: int = Field(default=1, ge=1)


class RankRequest(BaseModel):
    map: MapModel
    metric: Metric = "pressure"
    method: Method = "k"
    normalize: Optional[float] = None
    path_cap: int = Field(default=DEFAULT_PATH_CAP, ge=1)
    parallel: int = Field(default=1, ge=1)

    _nz = field_validator("normalize")(_check_normalize)


class StabilityRequest(BaseModel):
    map: MapModel


class ImpulseRequest(BaseModel):
    """Closed-form values when steps is omitted, a trajectory otherwise."""

    map: MapModel
    p0: Union[list[float], str] = "all-ones"
    v_init: Union[list[float], str] = "zero"
    steps: Optional[int] = Field(default=None, ge=0)
    normalize: Optional[float] = None

    _nz = field_validator("normalize")(_check_normalize)


class CompareRequest(BaseModel):
    map: MapModel
    normalize: Optional[float] = None
    path_cap: int = Field(default=DEFAULT_PATH_CAP, ge=1)
    parallel: int = Field(default=1, ge=1)

    _nz = field_validator("normalize")(_check_normalize)


class StabilityModel(BaseModel):
    spectral_radius: float
    stable: bool
    iterations_used: int
    converged: bool
    normalization: Optional[float] = None
    normalized_spectral_radius: Optional[float] = None


class RankRow(BaseModel):
    rank: int
    id: int
    label: str
    value: float


class ReportModel(BaseModel):
    """Full analysis report; mirrors the report JSON document."""

    k_matrix: Optional[list[list[float]]] = None
    profiles: dict[str, Optional[dict[str, list[float]]]] = {}
    ranks: dict[str, dict[str, list[RankRow]]] = {}
    stability: Optional[StabilityModel] = None
    concordance: Optional[dict[str, float]] = None


class KMatrixResponse(BaseModel):
    k_matrix: list[list[float]]
    path_counts: list[list[int]]
    branch_counts: list[list[int]]


class ImpulseValuesResponse(BaseModel):
    values: list[float]


class ImpulseTrajectoryResponse(BaseModel):
    trajectory: list[list[float]]
    pulses: list[list[float]]


class HealthResponse(BaseModel):
    status: str
    version: str
