"""Command-line client for the dimension tables, bases and suites.

By default every subcommand calls the service handlers in-process; with
``--server URL`` the same requests go over HTTP to a running service.
Exit codes: 0 success, 1 verification failure (a dimension row that does
not match the closed form, or a failed suite case), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .expressions import ExprError
from .free_lie import DegreeCapError
from .service import handlers
from .service.models import (BasisRequest, BasisResponse, DeltaRequest,
                             DeltaResponse, DimsRequest, DimsResponse,
                             EvalRequest, EvalResponse, VerifyRequest,
                             VerifyResponse)

_SUITES = ("leibniz", "euler", "cocycle", "roundtrip", "smallwheels",
           "crosscheck")


class UsageError(Exception):
    """Invalid request; reported on stderr with exit status 2."""


class _Client:
    """Dispatches requests in-process or to a remote service."""

    def __init__(self, server: Optional[str]):
        self.server = server.rstrip("/") if server else None

    def _post(self, path: str, payload: dict, model):
        import httpx

        try:
            response = httpx.post(f"{self.server}{path}", json=payload,
                                  timeout=600.0)
        except httpx.HTTPError as exc:
            raise UsageError(f"server request failed: {exc}")
        if response.status_code >= 400:
            detail = response.json().get("detail", response.text)
            raise UsageError(f"server rejected request: {detail}")
        return model.model_validate(response.json())

    def dims(self, req: DimsRequest) -> DimsResponse:
        if self.server:
            return self._post("/dims", req.model_dump(), DimsResponse)
        return handlers.handle_dims(req)

    def basis(self, req: BasisRequest) -> BasisResponse:
        if self.server:
            return self._post("/basis", req.model_dump(), BasisResponse)
        return handlers.handle_basis(req)

    def delta(self, req: DeltaRequest) -> DeltaResponse:
        if self.server:
            return self._post("/delta", req.model_dump(), DeltaResponse)
        return handlers.handle_delta(req)

    def verify(self, req: VerifyRequest) -> VerifyResponse:
        if self.server:
            return self._post("/verify", req.model_dump(), VerifyResponse)
        return handlers.handle_verify(req)

    def evaluate(self, req: EvalRequest) -> EvalResponse:
        if self.server:
            return self._post("/eval", req.model_dump(), EvalResponse)
        return handlers.handle_eval(req)


def _common_flags() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False,
                                     argument_default=argparse.SUPPRESS)
    parser.add_argument("--format", choices=("text", "json", "csv"),
                        help="output format (csv applies to dims only)")
    parser.add_argument("--seed", type=int, help="seed for verify suites")
    parser.add_argument("--jobs", type=int,
                        help="parallel workers for the dims sweep")
    parser.add_argument("--relaxed-div", action="store_true",
                        dest="relaxed_div",
                        help="admit divergence values in the span of "
                             "tr([x,y]^i) instead of requiring zero")
    parser.add_argument("--server", metavar="URL",
                        help="send requests to a running service")
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="krv-lab",
        parents=[common],
        description="Exact dimension tables, bases and property suites for "
                    "the divergence kernel on symplectic derivations of the "
                    "free Lie algebra on x, y.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common],
                       help="dimension table for one weight row")
    p.add_argument("weight", type=int, choices=(2, 3))
    p.add_argument("j_max", type=int, metavar="j-max")

    p = sub.add_parser("basis", parents=[common],
                       help="kernel basis in one bidegree")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)

    p = sub.add_parser("delta", parents=[common],
                       help="the generator with the given even subscript")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", parents=[common],
                       help="run a seeded property suite")
    p.add_argument("suite", choices=_SUITES)
    p.add_argument("--cases", type=int, default=50)

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate an expression and print the value")
    p.add_argument("expr")

    p = sub.add_parser("serve", parents=[common],
                       help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _print_json(model) -> None:
    print(model.model_dump_json(by_alias=True, indent=2))


def _cmd_dims(client: _Client, ns: argparse.Namespace, fmt: str,
              relaxed: bool, jobs: int) -> int:
    req = DimsRequest(weight=ns.weight, j_max=ns.j_max, relaxed=relaxed,
                      jobs=jobs)
    out = client.dims(req)
    if fmt == "json":
        _print_json(out)
    elif fmt == "csv":
        print("i,j,dim,formula,match")
        for row in out.rows:
            print(f"{row.i},{row.j},{row.dim},{row.formula},"
                  f"{'true' if row.match else 'false'}")
    else:
        print(f"{'i':>3} {'j':>3} {'dim':>5} {'formula':>8} {'match':>6}")
        for row in out.rows:
            print(f"{row.i:>3} {row.j:>3} {row.dim:>5} {row.formula:>8} "
                  f"{'yes' if row.match else 'NO':>6}")
        verdict = "all rows match" if out.all_match else "MISMATCH"
        print(f"{len(out.rows)} rows; {verdict}")
    return 0 if out.all_match else 1


def _cmd_basis(client: _Client, ns: argparse.Namespace, fmt: str,
               relaxed: bool) -> int:
    out = client.basis(BasisRequest(i=ns.i, j=ns.j, relaxed=relaxed))
    if fmt == "json":
        _print_json(out)
    else:
        print(f"dim krv({out.i},{out.j}) = {out.dim}")
        for index, element in enumerate(out.basis):
            print(f"  [{index}] {element}")
    return 0


def _cmd_delta(client: _Client, ns: argparse.Namespace, fmt: str) -> int:
    out = client.delta(DeltaRequest(n=ns.n))
    if fmt == "json":
        _print_json(out)
    else:
        print(f"delta_{out.n} = {out.theta}")
        print(f"value      = {out.value}")
        print(f"u(x)       = {out.u_x}")
        print(f"u(y)       = {out.u_y}")
        print(f"divergence = {out.divergence}")
        print(f"symplectic = {'yes' if out.symplectic else 'NO'}")
    return 0


def _cmd_verify(client: _Client, ns: argparse.Namespace, fmt: str,
                seed: int) -> int:
    out = client.verify(VerifyRequest(suite=ns.suite, seed=seed,
                                      cases=ns.cases))
    if fmt == "json":
        _print_json(out)
    else:
        for case in out.cases:
            status = "PASS" if case.ok else "FAIL"
            print(f"{status} {case.name:24} {case.detail}")
        good = sum(1 for case in out.cases if case.ok)
        print(f"suite {out.suite}: {good}/{len(out.cases)} passed "
              f"(seed {out.seed})")
    return 0 if out.passed else 1


def _cmd_eval(client: _Client, ns: argparse.Namespace, fmt: str) -> int:
    out = client.evaluate(EvalRequest(expr=ns.expr))
    if fmt == "json":
        _print_json(out)
    else:
        print(out.value)
    return 0


def _cmd_serve(ns: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=ns.host, port=ns.port)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    fmt = getattr(ns, "format", "text")
    seed = getattr(ns, "seed", 0)
    jobs = getattr(ns, "jobs", 1)
    relaxed = getattr(ns, "relaxed_div", False)
    server = getattr(ns, "server", None)
    client = _Client(server)
    try:
        if fmt == "csv" and ns.command != "dims":
            raise UsageError("csv format is only available for dims")
        if ns.command == "dims":
            return _cmd_dims(client, ns, fmt, relaxed, jobs)
        if ns.command == "basis":
            return _cmd_basis(client, ns, fmt, relaxed)
        if ns.command == "delta":
            return _cmd_delta(client, ns, fmt)
        if ns.command == "verify":
            return _cmd_verify(client, ns, fmt, seed)
        if ns.command == "eval":
            return _cmd_eval(client, ns, fmt)
        if ns.command == "serve":
            return _cmd_serve(ns)
    except (UsageError, ExprError, DegreeCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")  # pragma: no cover


def entrypoint() -> None:
    sys.exit(main())
