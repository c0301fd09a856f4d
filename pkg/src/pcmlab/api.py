"""HTTP API over the session engine, consumed by the web UI.

Endpoints:
  POST /sessions                    create a session, returns id + analog view
  GET  /sessions/{id}/stages/{0..3} fetch one stage view
  POST /sessions/{id}/step          move the cursor {"direction": "forward"|"back"}
  POST /sessions/{id}/reset         cursor back to the analog stage
  GET  /presets                     built-in demo signals

Every response carries the session's current stage cursor. Sessions live in
process memory only.
"""

from __future__ import annotations

from fastapi import FastAPI, Path, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .errors import InvalidArgument, PcmError, UnknownSession
from .harmonics import PRESETS
from .inputs import resolve_spec
from .session import SessionRegistry, reset, spec_payload, stage_payload, step


class CreateSessionRequest(BaseModel):
    preset: str | None = None
    a: list[float] | None = None
    b: list[float] | None = None
    f1_mantissa: float | None = None
    f1_exponent: int | None = None
    dc: float | None = None
    periods: int | None = None
    samples: int = Field(description="number of samples over the window")
    bits: int = Field(description="quantizer bit depth")
    range_lo: float | None = None
    range_hi: float | None = None


class StepRequest(BaseModel):
    direction: str


def _session_response(session, view_stage=None) -> dict:
    stage = session.stage
    view = stage_payload(session, stage if view_stage is None else view_stage)
    return {"stage": int(stage), "view": view}


def create_app(allow_origins: tuple[str, ...] = ("*",), ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="pcmlab", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(allow_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    registry = SessionRegistry()
    app.state.registry = registry

    @app.exception_handler(PcmError)
    async def pcm_error_handler(request: Request, exc: PcmError):
        status = 404 if isinstance(exc, UnknownSession) else 400
        return JSONResponse(
            status_code=status,
            content={"code": exc.code, "field": exc.field, "message": str(exc)},
        )

    @app.exception_handler(RequestValidationError)
    async def validation_error_handler(request: Request, exc: RequestValidationError):
        errors = [
            {"field": ".".join(str(p) for p in err["loc"] if p != "body"), "message": err["msg"]}
            for err in exc.errors()
        ]
        return JSONResponse(
            status_code=400,
            content={
                "code": "invalid-argument",
                "field": errors[0]["field"] if errors else None,
                "message": errors[0]["message"] if errors else "invalid request",
                "errors": errors,
            },
        )

    @app.get("/presets")
    def list_presets():
        return {"presets": [{"name": name, "spec": spec_payload(s)} for name, s in PRESETS.items()]}

    @app.post("/sessions")
    def create(req: CreateSessionRequest):
        spec = resolve_spec(
            preset=req.preset,
            a=req.a,
            b=req.b,
            f1_mantissa=req.f1_mantissa,
            f1_exponent=req.f1_exponent,
            dc=req.dc,
            periods=req.periods,
        )
        if (req.range_lo is None) != (req.range_hi is None):
            raise InvalidArgument("range_lo and range_hi must be given together", field="range_lo")
        quant_range = None if req.range_lo is None else (req.range_lo, req.range_hi)
        session = registry.create(spec, req.samples, req.bits, quant_range=quant_range)
        return {"id": session.id, **_session_response(session)}

    @app.get("/sessions/{session_id}/stages/{stage}")
    def get_stage(session_id: str, stage: int = Path(ge=0, le=3)):
        session = registry.get(session_id)
        return {"stage": int(session.stage), "view": stage_payload(session, stage)}

    @app.post("/sessions/{session_id}/step")
    def do_step(session_id: str, req: StepRequest):
        if req.direction not in ("forward", "back"):
            raise InvalidArgument("direction must be 'forward' or 'back'", field="direction")
        session = step(registry.get(session_id), req.direction)
        return _session_response(session)

    @app.post("/sessions/{session_id}/reset")
    def do_reset(session_id: str):
        session = reset(registry.get(session_id))
        return _session_response(session)

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
