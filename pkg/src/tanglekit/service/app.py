"""FastAPI service exposing the invariant computations.

Each endpoint wraps a plain handler function working on the pydantic
models, so the same handlers serve both HTTP clients and the in-process
command-line front end.  Malformed diagrams and invalid marks map to
HTTP 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import checks, ktheory, relations
from ..diagrams import (DiagramError, TangleParseError, component_count,
                        parse_tangle, serialize_tangle)
from ..khovanov import euler_characteristic, h_alg, reduced, total_dimension
from ..kh_standard import h_kh_standard
from ..laurent import format_laurent
from ..rt import jones
from .models import (DiagramRequest, DimEntry, EulerResponse, HomologyRequest,
                     HomologyResponse, JonesResponse, KcheckRequest,
                     KcheckResponse, ParseResponse, ReducedRequest,
                     ReducedResponse, RelcheckRequest, RelcheckResponse,
                     SkeinRequest, SkeinResponse)


class InvalidInput(ValueError):
    """Bad diagram text, marks or indices; maps to exit code 2 / HTTP 422."""


def _parse(source: str):
    try:
        return parse_tangle(source)
    except (TangleParseError, DiagramError) as exc:
        raise InvalidInput(str(exc)) from exc


def _dims_list(dims: dict) -> list:
    return [DimEntry(i=i, j=j, dim=d)
            for (i, j), d in sorted(dims.items())]


def _parse_mark(mark: str):
    parts = mark.split(":")
    if len(parts) != 2:
        raise InvalidInput(f"mark must look like C:K, got {mark!r}")
    try:
        c, k = int(parts[0]), int(parts[1])
    except ValueError:
        raise InvalidInput(f"mark must be two integers C:K, got {mark!r}") from None
    return c, k


def handle_parse(req: DiagramRequest) -> ParseResponse:
    diagram = _parse(req.source)
    comps = component_count(diagram) if diagram.is_link() else None
    return ParseResponse(n=diagram.n, m=diagram.m, layers=len(diagram.layers),
                         crossings=len(diagram.crossings()), components=comps,
                         canonical=serialize_tangle(diagram))


def handle_jones(req: DiagramRequest) -> JonesResponse:
    diagram = _parse(req.source)
    if not diagram.is_link():
        raise InvalidInput("jones needs a (0,0) link diagram")
    return JonesResponse(jones=format_laurent(jones(diagram)),
                         components=component_count(diagram))


def handle_homology(req: HomologyRequest) -> HomologyResponse:
    diagram = _parse(req.source)
    if not diagram.is_link():
        raise InvalidInput("homology needs a (0,0) link diagram")
    dims = h_kh_standard(diagram) if req.standard else h_alg(diagram)
    return HomologyResponse(standard=req.standard, dims=_dims_list(dims),
                            total=total_dimension(dims),
                            euler=format_laurent(euler_characteristic(dims)))


def handle_reduced(req: ReducedRequest) -> ReducedResponse:
    diagram = _parse(req.source)
    if not diagram.is_link():
        raise InvalidInput("reduced homology needs a (0,0) link diagram")
    c, k = _parse_mark(req.mark)
    try:
        dims = reduced(diagram, c, k)
        ok, chi, expected = checks.reduced_euler_check(diagram, c, k)
    except DiagramError as exc:
        raise InvalidInput(str(exc)) from exc
    return ReducedResponse(dims=_dims_list(dims), total=total_dimension(dims),
                           euler=format_laurent(chi),
                           normalized_jones=format_laurent(expected),
                           euler_matches_jones=ok)


def handle_euler(req: DiagramRequest) -> EulerResponse:
    diagram = _parse(req.source)
    if not diagram.is_link():
        raise InvalidInput("euler needs a (0,0) link diagram")
    ok, chi, expected = checks.euler_jones_check(diagram)
    return EulerResponse(euler=format_laurent(chi),
                         components=component_count(diagram),
                         jones=format_laurent(expected), matches=ok)


def handle_skein(req: SkeinRequest) -> SkeinResponse:
    diagram = _parse(req.source)
    if not diagram.is_link():
        raise InvalidInput("skein needs a (0,0) link diagram")
    ncross = len(diagram.crossings())
    if not 1 <= req.crossing <= ncross:
        raise InvalidInput(
            f"crossing {req.crossing} out of range; diagram has {ncross}")
    rep = checks.skein_les_check(diagram, req.crossing - 1)
    return SkeinResponse(crossing=req.crossing,
                         d_squared_zero=rep.d_squared_zero,
                         sub_matches_one_smoothing=rep.sub_matches_one_smoothing,
                         quotient_matches_zero_smoothing=rep.quotient_matches_zero_smoothing,
                         exactness_ok=rep.exactness_ok, euler_ok=rep.euler_ok,
                         ok=rep.ok, details=rep.lines)


def handle_relcheck(req: RelcheckRequest) -> RelcheckResponse:
    passed, failed, failures, tally = relations.run_suite(req.model, req.max_width)
    return RelcheckResponse(model=req.model, max_width=req.max_width,
                            passed=passed, failed=failed, failures=failures,
                            families=tally, ok=failed == 0)


def handle_kcheck(req: KcheckRequest) -> KcheckResponse:
    checked, failures = ktheory.intertwining_failures(req.max_width)
    report = ktheory.shift_scalar_report() if req.shifts else None
    return KcheckResponse(max_width=req.max_width, checked=checked,
                          failures=failures, ok=not failures,
                          shift_report=report)


def create_app() -> FastAPI:
    app = FastAPI(title="tanglekit",
                  description="Quantum sl(2) tangle invariants as a service")

    def guard(handler, req):
        try:
            return handler(req)
        except InvalidInput as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/parse", response_model=ParseResponse)
    def parse(req: DiagramRequest):
        return guard(handle_parse, req)

    @app.post("/jones", response_model=JonesResponse)
    def jones_route(req: DiagramRequest):
        return guard(handle_jones, req)

    @app.post("/homology", response_model=HomologyResponse)
    def homology_route(req: HomologyRequest):
        return guard(handle_homology, req)

    @app.post("/reduced", response_model=ReducedResponse)
    def reduced_route(req: ReducedRequest):
        return guard(handle_reduced, req)

    @app.post("/euler", response_model=EulerResponse)
    def euler_route(req: DiagramRequest):
        return guard(handle_euler, req)

    @app.post("/skein", response_model=SkeinResponse)
    def skein_route(req: SkeinRequest):
        return guard(handle_skein, req)

    @app.post("/relcheck", response_model=RelcheckResponse)
    def relcheck_route(req: RelcheckRequest):
        return guard(handle_relcheck, req)

    @app.post("/kcheck", response_model=KcheckResponse)
    def kcheck_route(req: KcheckRequest):
        return guard(handle_kcheck, req)

    return app


app = create_app()
