"""HTTP+JSON adapter over JudgeService.

Route and payload shapes are part of the external contract:

    POST /api/iterations {seed, m, trap_rate} -> {iteration_id}
    GET  /api/tasks?assessor=<id>&batch=<n>   -> [wire tasks]
    GET  /api/snapshots/<domain_id>           -> archived HTML
    POST /api/judgments {assessor_id, task_id, score} -> {accepted, flagged}
    POST /api/iterations/<id>/close           -> report JSON
    GET  /api/reports/<iteration>             -> report JSON

Errors: 400 invalid input, 403 flagged assessor, 404 unknown ids,
409 duplicate submissions and lifecycle conflicts.
"""

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .errors import (
    AssessorFlagged,
    DuplicateJudgment,
    InvalidParams,
    InvalidScore,
    IterationAlreadyOpen,
    NoOpenIteration,
    ParkbanditError,
    UnknownTask,
)
from .service import DEFAULT_BATCH, JudgeService

_STATUS_FOR = (
    (InvalidParams, 400),
    (InvalidScore, 400),
    (AssessorFlagged, 403),
    (UnknownTask, 404),
    (IterationAlreadyOpen, 409),
    (NoOpenIteration, 409),
    (DuplicateJudgment, 409),
)


def _error_response(exc: ParkbanditError) -> JSONResponse:
    for cls, status in _STATUS_FOR:
        if isinstance(exc, cls):
            return JSONResponse(
                {"error": type(exc).__name__, "detail": str(exc)},
                status_code=status,
            )
    raise exc


async def _json_object(request: Request) -> dict | None:
    try:
        body = await request.json()
    except Exception:
        return None
    return body if isinstance(body, dict) else None


def _bad_request(detail: str) -> JSONResponse:
    return JSONResponse(
        {"error": "InvalidParams", "detail": detail}, status_code=400
    )


def create_app(service: JudgeService) -> FastAPI:
    app = FastAPI(title="judge-service", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def _validation_as_400(request, exc):
        return _bad_request(str(exc.errors()[:1]))

    @app.post("/api/iterations")
    async def open_iteration(request: Request):
        body = await _json_object(request)
        if body is None:
            return _bad_request("body must be a JSON object")
        if "seed" not in body or "m" not in body:
            return _bad_request("seed and m are required")
        trap_rate = body.get("trap_rate", 0.1)
        if isinstance(trap_rate, int) and not isinstance(trap_rate, bool):
            trap_rate = float(trap_rate)
        if not isinstance(trap_rate, float):
            return _bad_request(f"trap_rate must be a number, got {trap_rate!r}")
        try:
            iteration = service.open_iteration(body["seed"], body["m"], trap_rate)
        except ParkbanditError as exc:
            return _error_response(exc)
        return {"iteration_id": iteration}

    @app.get("/api/tasks")
    async def tasks(assessor: str, batch: int = DEFAULT_BATCH):
        try:
            return service.next_tasks(assessor, batch)
        except ParkbanditError as exc:
            return _error_response(exc)

    @app.get("/api/snapshots/{domain_id}")
    async def snapshot(domain_id: str):
        try:
            html = service.snapshot_html(domain_id)
        except ParkbanditError as exc:
            return _error_response(exc)
        return Response(content=html, media_type="text/html")

    @app.post("/api/judgments")
    async def judge(request: Request):
        body = await _json_object(request)
        if body is None:
            return _bad_request("body must be a JSON object")
        assessor_id = body.get("assessor_id")
        task_id = body.get("task_id")
        if not isinstance(assessor_id, str) or not isinstance(task_id, str):
            return _bad_request("assessor_id and task_id must be strings")
        try:
            return service.submit_judgment(assessor_id, task_id, body.get("score"))
        except ParkbanditError as exc:
            return _error_response(exc)

    @app.post("/api/iterations/{iteration_id}/close")
    async def close(iteration_id: int):
        try:
            return service.close_iteration(iteration_id)
        except ParkbanditError as exc:
            return _error_response(exc)

    @app.get("/api/reports/{iteration}")
    async def report(iteration: int):
        try:
            return service.report(iteration)
        except ParkbanditError as exc:
            return _error_response(exc)

    return app
