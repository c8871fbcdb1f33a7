"""HTTP facade over the library: one endpoint per report type."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..expressions import ExprError
from ..free_lie import DegreeCapError
from . import handlers
from .models import (BasisRequest, BasisResponse, DeltaRequest, DeltaResponse,
                     DimsRequest, DimsResponse, EvalRequest, EvalResponse,
                     HealthResponse, VerifyRequest, VerifyResponse)

app = FastAPI(
    title="krv-lab",
    version=__version__,
    description=("Exact computations in the operator calculus on the free "
                 "associative algebra on x, y: trace spaces, the free Lie "
                 "algebra, divergence kernels and their dimension tables."),
)


@app.exception_handler(ExprError)
async def _expr_error(_request: Request, exc: ExprError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(DegreeCapError)
async def _cap_error(_request: Request, exc: DegreeCapError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def _value_error(_request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return handlers.handle_health()


@app.post("/dims", response_model=DimsResponse)
def dims(req: DimsRequest) -> DimsResponse:
    return handlers.handle_dims(req)


@app.post("/basis", response_model=BasisResponse)
def basis(req: BasisRequest) -> BasisResponse:
    return handlers.handle_basis(req)


@app.post("/delta", response_model=DeltaResponse)
def delta(req: DeltaRequest) -> DeltaResponse:
    return handlers.handle_delta(req)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    return handlers.handle_verify(req)


@app.post("/eval", response_model=EvalResponse)
def evaluate(req: EvalRequest) -> EvalResponse:
    return handlers.handle_eval(req)
