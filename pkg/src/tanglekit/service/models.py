"""Request and response models for the invariant service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class DiagramRequest(BaseModel):
    source: str = Field(..., description="Diagram in .tgl text form")


class ParseResponse(BaseModel):
    n: int
    m: int
    layers: int
    crossings: int
    components: Optional[int] = None
    canonical: str


class JonesResponse(BaseModel):
    jones: str
    components: int


class HomologyRequest(DiagramRequest):
    standard: bool = False


class DimEntry(BaseModel):
    i: int
    j: int
    dim: int


class HomologyResponse(BaseModel):
    standard: bool
    dims: list[DimEntry]
    total: int
    euler: str


class ReducedRequest(DiagramRequest):
    mark: str = Field(..., description="Marked strand as C:K, leg K of cap layer C")


class ReducedResponse(BaseModel):
    dims: list[DimEntry]
    total: int
    euler: str
    normalized_jones: str
    euler_matches_jones: bool


class EulerResponse(BaseModel):
    euler: str
    components: int
    jones: str
    matches: bool


class SkeinRequest(DiagramRequest):
    crossing: int = Field(..., ge=1, description="1-based crossing index")


class SkeinResponse(BaseModel):
    crossing: int
    d_squared_zero: bool
    sub_matches_one_smoothing: bool
    quotient_matches_zero_smoothing: bool
    exactness_ok: bool
    euler_ok: bool
    ok: bool
    details: list[str]


class RelcheckRequest(BaseModel):
    max_width: int = Field(5, ge=2, le=8)
    model: str = Field("rt", pattern="^(rt|ktheory)$")


class RelcheckResponse(BaseModel):
    model: str
    max_width: int
    passed: int
    failed: int
    failures: list[str]
    families: dict[str, list[int]]
    ok: bool


class KcheckRequest(BaseModel):
    max_width: int = Field(5, ge=2, le=8)
    shifts: bool = False


class KcheckResponse(BaseModel):
    max_width: int
    checked: int
    failures: list[str]
    ok: bool
    shift_report: Optional[dict] = None
