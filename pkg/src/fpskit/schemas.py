"""Pydantic request/response models shared by the HTTP service and the CLI.

All numeric payloads are exact rational strings ("num/den", denominator
omitted when 1); polynomial values are lists of {"coeff", "monomial"}
objects.  No floats cross this boundary in either direction.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

RingValue = Union[str, list]


class SeriesRequest(BaseModel):
    coeffs: list[str] = Field(min_length=1)
    order: Optional[int] = Field(default=None, ge=1)


class SeriesResponse(BaseModel):
    order: int
    coeffs: list[RingValue]


class LadderRequest(BaseModel):
    coeffs: list[str] = Field(min_length=1)
    n: int = Field(ge=1)


class LadderResponse(BaseModel):
    partials: list[list[RingValue]]
    mirrors: list[list[RingValue]]
    mirror_constants: list[RingValue]


class InterpRequest(BaseModel):
    coeffs: list[str] = Field(min_length=1)
    tau: str = "0"
    order: Optional[int] = Field(default=None, ge=2)
    variant: Literal["reversion", "derivative"] = "reversion"


class HankelRequest(BaseModel):
    seq: list[str] = Field(min_length=1)
    shift: int = Field(default=0, ge=0)
    n: int = Field(ge=1)


class HankelResponse(BaseModel):
    dets: list[RingValue]


class JFractionRequest(BaseModel):
    coeffs: list[str] = Field(min_length=1)
    depth: int = Field(ge=0)


class JFractionResponse(BaseModel):
    d0: str
    p: list[str]
    q: list[str]


class TransformRequest(BaseModel):
    seq: list[str] = Field(min_length=1)
    kind: Literal["inverse", "binomial"]
    iterations: int = Field(default=1, ge=0)
    tau: str = "1"


class TransformResponse(BaseModel):
    seq: list[RingValue]


class EnumRequest(BaseModel):
    kind: Literal["luka", "motzkin", "trees"]
    n: int = Field(ge=0)
    weights: bool = False
    orbits: bool = False


class EnumResponse(BaseModel):
    count: int
    items: list
    weights: Optional[list] = None
    orbits: Optional[dict] = None


class VerifyRequest(BaseModel):
    suite: str
    order: Optional[int] = Field(default=None, ge=1)


class CheckLine(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checks: list[CheckLine]


class ErrorResponse(BaseModel):
    error: str
    message: str
