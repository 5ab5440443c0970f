"""HTTP facade over the exact-computation handlers.

Run with `fpskit serve` or `uvicorn fpskit.service:app`.  Every endpoint is
stateless and exact; validation failures surface as HTTP 422 with a
machine-readable body, internal failures as HTTP 500.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import api, schemas
from .errors import ExactError

app = FastAPI(
    title="fpskit",
    description="Exact formal power series reversion, Hankel transforms, "
    "continued fractions, and combinatorial enumeration.",
    version="0.1.0",
)


@app.exception_handler(ExactError)
async def exact_error_handler(_request: Request, exc: ExactError):
    return JSONResponse(
        status_code=422,
        content=schemas.ErrorResponse(
            error=type(exc).__name__, message=str(exc)
        ).model_dump(),
    )


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/revert", response_model=schemas.SeriesResponse)
def revert(req: schemas.SeriesRequest):
    return api.revert(req)


@app.post("/dl", response_model=schemas.LadderResponse)
def ladder(req: schemas.LadderRequest):
    return api.ladder(req)


@app.post("/qser", response_model=schemas.SeriesResponse)
def fixed_point(req: schemas.LadderRequest):
    return api.fixed_point(req)


@app.post("/interp", response_model=schemas.SeriesResponse)
def interpolate(req: schemas.InterpRequest):
    return api.interpolate(req)


@app.post("/hankel", response_model=schemas.HankelResponse)
def hankel(req: schemas.HankelRequest):
    return api.hankel(req)


@app.post("/jfrac", response_model=schemas.JFractionResponse)
def jfraction(req: schemas.JFractionRequest):
    return api.jfraction(req)


@app.post("/transform", response_model=schemas.TransformResponse)
def transform(req: schemas.TransformRequest):
    return api.transform(req)


@app.post("/enum", response_model=schemas.EnumResponse)
def enumerate_objects(req: schemas.EnumRequest):
    return api.enumerate_objects(req)


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest):
    return api.verify(req)
