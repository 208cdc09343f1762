"""Request/response models for the HTTP API."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class AnalyzeRequest(BaseModel):
    content: str = Field(description="network file content (edge list or Pajek)")
    format: Literal["auto", "edgelist", "pajek"] = "auto"
    q: float = 1.0
    trials: int = Field(default=10, ge=1)
    seed: int = 42
    mode: Literal["slope", "pointwise"] = "slope"
    l_min: int | None = Field(default=None, ge=1)
    l_max: int | None = Field(default=None, ge=1)
    strict: bool = False
    name: str | None = Field(default=None, description="reported as input.file")


class SweepRequest(BaseModel):
    content: str
    format: Literal["auto", "edgelist", "pajek"] = "auto"
    q_list: list[float] = Field(min_length=1)
    trials: int = Field(default=10, ge=1)
    seed: int = 42
    mode: Literal["slope", "pointwise"] = "slope"
    l_min: int | None = Field(default=None, ge=1)
    l_max: int | None = Field(default=None, ge=1)
    strict: bool = False
    name: str | None = None


class CoverRequest(BaseModel):
    content: str
    format: Literal["auto", "edgelist", "pajek"] = "auto"
    l_B: int = Field(ge=1)
    trials: int = Field(default=10, ge=1)
    seed: int = 42
    strict: bool = False
    name: str | None = None


class GenerateRequest(BaseModel):
    model: Literal["path", "cycle", "grid", "star", "complete", "er_random"]
    params: list[float] = Field(min_length=1)
    seed: int = 42


class ReportInput(BaseModel):
    file: str | None
    format: str
    nodes: int
    edges: int
    diameter: int
    component_note: str | None


class ReportSettings(BaseModel):
    q_list: list[float]
    trials: int
    seed: int
    mode: str
    l_min: int
    l_max: int
    strict: bool


class ProfileRow(BaseModel):
    l: int
    ln_l: float
    n_boxes: int
    # scalar for a single q, keyed by q for multi-q sweeps
    S_q: float | dict[str, float]
    pointwise_ratio: float | dict[str, float | None] | None


class Estimate(BaseModel):
    q: float
    dimension: float
    slope: float | None
    intercept: float | None
    r2: float | None
    mode: str


class AnalysisReport(BaseModel):
    input: ReportInput
    settings: ReportSettings
    profile: list[ProfileRow]
    estimates: list[Estimate]


class CoverResponse(BaseModel):
    file: str | None
    format: str
    nodes: int
    diameter: int
    l_B: int
    n_boxes: int
    boxes: list[list[str]]
    trials: int
    seed: int


class GenerateResponse(BaseModel):
    model: str
    nodes: int
    edges: int
    content: str = Field(description="graph in edge-list format")


class HealthResponse(BaseModel):
    status: str
    version: str
