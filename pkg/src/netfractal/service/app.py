"""FastAPI service exposing the analysis pipeline.

Run with: uvicorn netfractal.service:app
"""

from __future__ import annotations

import logging

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..analysis import (
    AnalysisError,
    graph_to_edge_list,
    run_analysis,
    run_cover,
    run_generate,
)
from ..dimension import FitError
from ..generators import GenerationError
from ..graphs import DisconnectedGraphError, GraphParseError
from .schemas import (
    AnalysisReport,
    AnalyzeRequest,
    CoverRequest,
    CoverResponse,
    GenerateRequest,
    GenerateResponse,
    HealthResponse,
    SweepRequest,
)

logger = logging.getLogger("netfractal.service")


def _log_diagnostics(diagnostics: list[str]) -> None:
    for line in diagnostics:
        logger.warning(line)


def create_app() -> FastAPI:
    app = FastAPI(
        title="netfractal",
        version=__version__,
        description="Box-covering fractal, information, and Tsallis "
                    "information dimensions of complex networks.",
    )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/analyze", response_model=AnalysisReport)
    def analyze(request: AnalyzeRequest) -> AnalysisReport:
        report, diagnostics = _run_pipeline(request, [request.q])
        _log_diagnostics(diagnostics)
        return AnalysisReport.model_validate(report)

    @app.post("/sweep", response_model=AnalysisReport)
    def sweep(request: SweepRequest) -> AnalysisReport:
        report, diagnostics = _run_pipeline(request, request.q_list)
        _log_diagnostics(diagnostics)
        return AnalysisReport.model_validate(report)

    @app.post("/cover", response_model=CoverResponse)
    def cover(request: CoverRequest) -> CoverResponse:
        try:
            result, diagnostics = run_cover(
                request.content,
                fmt=request.format,
                l_B=request.l_B,
                trials=request.trials,
                seed=request.seed,
                strict=request.strict,
                source=request.name,
            )
        except (GraphParseError, DisconnectedGraphError, AnalysisError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        _log_diagnostics(diagnostics)
        return CoverResponse.model_validate(result)

    @app.post("/generate", response_model=GenerateResponse)
    def generate(request: GenerateRequest) -> GenerateResponse:
        try:
            graph = run_generate(request.model, request.params, request.seed)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except GenerationError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return GenerateResponse(
            model=request.model,
            nodes=graph.node_count,
            edges=graph.edge_count,
            content=graph_to_edge_list(graph),
        )

    return app


def _run_pipeline(request, q_values) -> tuple[dict, list[str]]:
    try:
        return run_analysis(
            request.content,
            fmt=request.format,
            q_values=list(q_values),
            trials=request.trials,
            seed=request.seed,
            mode=request.mode,
            l_min=request.l_min,
            l_max=request.l_max,
            strict=request.strict,
            source=request.name,
        )
    except (GraphParseError, DisconnectedGraphError, AnalysisError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except FitError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


app = create_app()
