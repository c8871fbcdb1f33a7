"""Request and response models for the HTTP service.

Every response carries the versioned ``schema`` key so downstream
consumers can detect format changes.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from ..formats import SCHEMA

Suite = Literal["leibniz", "euler", "cocycle", "roundtrip", "smallwheels",
                "crosscheck"]


class _Response(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=SCHEMA, alias="schema")


class HealthResponse(_Response):
    status: str = "ok"
    version: str


class DimsRequest(BaseModel):
    weight: Literal[2, 3]
    j_max: int = Field(ge=1)
    relaxed: bool = False
    jobs: int = Field(default=1, ge=1)


class DimsRow(BaseModel):
    i: int
    j: int
    dim: int
    formula: int
    match: bool


class DimsResponse(_Response):
    weight: int
    relaxed: bool
    rows: list[DimsRow]
    all_match: bool


class BasisRequest(BaseModel):
    i: int = Field(ge=1)
    j: int = Field(ge=1)
    relaxed: bool = False


class BasisResponse(_Response):
    i: int
    j: int
    dim: int
    basis: list[str]


class DeltaRequest(BaseModel):
    n: int = Field(ge=2, description="even subscript 2n of delta_{2n}")


class DeltaResponse(_Response):
    n: int
    theta: str
    value: str
    u_x: str
    u_y: str
    divergence: str
    symplectic: bool


class VerifyRequest(BaseModel):
    suite: Suite
    seed: int = 0
    cases: int = Field(default=50, ge=1)


class VerifyCase(BaseModel):
    name: str
    ok: bool
    detail: str = ""


class VerifyResponse(_Response):
    suite: str
    seed: int
    cases: list[VerifyCase]
    passed: bool


class EvalRequest(BaseModel):
    expr: str


class EvalResponse(_Response):
    expr: str
    sort: str
    value: str
