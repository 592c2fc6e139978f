"""HTTP front end for the analysis library.

Every endpoint takes a full map document in the request body and runs
one analysis on it; nothing is stored between calls.  Domain failures
map to structured JSON errors: invalid maps and exploding path
enumerations to 400, analyses blocked by instability to 409.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import (
    DivergenceDetected,
    MapParseError,
    MapValidationError,
    PathExplosion,
    Unstable,
)
from ..impulse import impulse_closed_form, impulse_simulate, parse_vector_spec, spectral_radius
from ..model import scale_map
from ..report import METRICS, analyze, report_to_dict
from . import schemas

app = FastAPI(
    title="cogmap",
    version=__version__,
    description="Cognitive map influence analysis: circuit method and impulse method.",
)

_STATUS = {
    MapValidationError: 400,
    MapParseError: 400,
    PathExplosion: 400,
    Unstable: 409,
    DivergenceDetected: 409,
}


def _register_handlers(app: FastAPI) -> None:
    for exc_type, status in _STATUS.items():
        async def handler(request: Request, exc: Exception, status=status):
            return JSONResponse(
                status_code=status,
                content={"error": type(exc).__name__, "detail": str(exc)},
            )

        app.add_exception_handler(exc_type, handler)


_register_handlers(app)


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok", version=__version__)


@app.post("/kmatrix", response_model=schemas.KMatrixResponse)
def kmatrix(request: schemas.KMatrixRequest) -> schemas.KMatrixResponse:
    cmap = request.map.to_domain()
    report = analyze(
        cmap, include_k=True, metrics=(), cap=request.path_cap, workers=request.parallel
    )
    km = report.k_matrix
    return schemas.KMatrixResponse(
        k_matrix=[[float(v) for v in row] for row in km.values],
        path_counts=[[int(v) for v in row] for row in km.path_counts],
        branch_counts=[[int(v) for v in row] for row in km.branch_counts],
    )


@app.post("/rank", response_model=schemas.ReportModel)
def rank(request: schemas.RankRequest) -> schemas.ReportModel:
    cmap = request.map.to_domain()
    report = analyze(
        cmap,
        include_k=request.method in ("k", "both"),
        include_impulse=request.method in ("impulse", "both"),
        keep_matrix=False,
        metrics=(request.metric,),
        normalize=request.normalize,
        cap=request.path_cap,
        workers=request.parallel,
    )
    return schemas.ReportModel(**report_to_dict(report))


@app.post("/stability", response_model=schemas.StabilityModel)
def stability(request: schemas.StabilityRequest) -> schemas.StabilityModel:
    cmap = request.map.to_domain()
    result = spectral_radius(cmap.adjacency)
    return schemas.StabilityModel(
        spectral_radius=result.spectral_radius,
        stable=result.stable,
        iterations_used=result.iterations_used,
        converged=result.converged,
    )


@app.post(
    "/impulse",
    response_model=schemas.ImpulseValuesResponse | schemas.ImpulseTrajectoryResponse,
)
def impulse(request: schemas.ImpulseRequest):
    cmap = request.map.to_domain()
    if request.normalize is not None:
        cmap = scale_map(cmap, 1.0 / request.normalize)
    try:
        v_init = parse_vector_spec(request.v_init, cmap.n)
        p0 = parse_vector_spec(request.p0, cmap.n)
    except ValueError as exc:
        return JSONResponse(
            status_code=422, content={"error": "ValueError", "detail": str(exc)}
        )
    if request.steps is None:
        values = impulse_closed_form(cmap, v_init, p0)
        return schemas.ImpulseValuesResponse(values=[float(v) for v in values])
    state = impulse_simulate(cmap, v_init, p0, request.steps)
    return schemas.ImpulseTrajectoryResponse(
        trajectory=[[float(v) for v in step] for step in state.trajectory],
        pulses=[[float(v) for v in step] for step in state.pulses],
    )


@app.post("/compare", response_model=schemas.ReportModel)
def compare(request: schemas.CompareRequest) -> schemas.ReportModel:
    cmap = request.map.to_domain()
    report = analyze(
        cmap,
        include_k=True,
        include_impulse=True,
        metrics=METRICS,
        normalize=request.normalize,
        cap=request.path_cap,
        workers=request.parallel,
    )
    return schemas.ReportModel(**report_to_dict(report))
