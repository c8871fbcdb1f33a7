"""Service handlers, callable in-process or through the HTTP app.

Handlers take a request model and return a response model; domain
errors (degree cap, parse errors, invalid subscripts) propagate to the
caller, which maps them to HTTP statuses or exit codes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .. import __version__
from ..derivations import from_trace, is_symplectic
from ..expressions import evaluate_source, render_value
from ..free_lie import DegreeCapError
from ..kv_algebra import delta, divergence, expected_dimension, krv_component
from ..verify import run_suite
from .models import (BasisRequest, BasisResponse, DeltaRequest, DeltaResponse,
                     DimsRequest, DimsResponse, DimsRow, EvalRequest,
                     EvalResponse, HealthResponse, VerifyCase, VerifyRequest,
                     VerifyResponse)


def handle_health() -> HealthResponse:
    return HealthResponse(version=__version__)


def _component_dim(task: tuple[int, int, bool]) -> int:
    weight, j, relaxed = task
    return krv_component(weight, j, relaxed=relaxed).dimension


def handle_dims(req: DimsRequest) -> DimsResponse:
    if req.weight + req.j_max > 16:
        raise DegreeCapError(
            f"total degree {req.weight + req.j_max} exceeds the cap of 16")
    tasks = [(req.weight, j, req.relaxed) for j in range(1, req.j_max + 1)]
    if req.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=req.jobs) as pool:
            dims = list(pool.map(_component_dim, tasks))
    else:
        dims = [_component_dim(task) for task in tasks]
    rows = []
    for (_, j, _), dim in zip(tasks, dims):
        formula = expected_dimension(req.weight, j)
        rows.append(DimsRow(i=req.weight, j=j, dim=dim, formula=formula,
                            match=dim == formula))
    return DimsResponse(weight=req.weight, relaxed=req.relaxed, rows=rows,
                        all_match=all(row.match for row in rows))


def handle_basis(req: BasisRequest) -> BasisResponse:
    component = krv_component(req.i, req.j, relaxed=req.relaxed)
    basis = [str(element) for element in component.basis]
    return BasisResponse(i=req.i, j=req.j, dim=component.dimension,
                         basis=basis)


def handle_delta(req: DeltaRequest) -> DeltaResponse:
    element = delta(req.n)
    u = from_trace(element)
    return DeltaResponse(
        n=req.n,
        theta=str(element),
        value=str(element.value),
        u_x=str(u.image("x")),
        u_y=str(u.image("y")),
        divergence=str(divergence(u)),
        symplectic=is_symplectic(u),
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    report = run_suite(req.suite, seed=req.seed, cases=req.cases)
    cases = [VerifyCase(name=c.name, ok=c.ok, detail=c.detail)
             for c in report.cases]
    return VerifyResponse(suite=report.suite, seed=report.seed, cases=cases,
                          passed=report.passed)


def handle_eval(req: EvalRequest) -> EvalResponse:
    value = evaluate_source(req.expr)
    return EvalResponse(expr=req.expr, sort=value.sort,
                        value=render_value(value))
