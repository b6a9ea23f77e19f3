"""Pydantic request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..params import GroupParams, params


class ParamsModel(BaseModel):
    """Surface data: marked points, punctures, cone points and orders."""

    n: int = 0
    L: int = 0
    N: int = 0
    m: list[int] | None = None

    def to_params(self) -> GroupParams:
        return params(self.n, self.L, self.N, tuple(self.m) if self.m is not None else None)

    @classmethod
    def from_params(cls, p: GroupParams) -> "ParamsModel":
        return cls(n=p.n, L=p.L, N=p.N, m=list(p.m))


class WordRequest(BaseModel):
    params: ParamsModel
    word: str
    max_syllable: int | None = None
    max_ops: int | None = None
    certify: bool | None = None


class SyllableModel(BaseModel):
    level: int
    word: str


class NormalFormResponse(BaseModel):
    text: str
    syllables: list[SyllableModel]
    coset: str
    trivial: bool
    word: str


class TrivialResponse(BaseModel):
    trivial: bool


class PresentRequest(BaseModel):
    params: ParamsModel
    group: str = Field("pure", pattern="^(pure|full)$")
    format: str = Field("text", pattern="^(text|json|algebra)$")


class PresentResponse(BaseModel):
    group: str
    format: str
    generators: list[str]
    relator_count: int
    text: str


class WordResponse(BaseModel):
    word: str
    params: ParamsModel


class PermResponse(BaseModel):
    cycles: str
    images: list[int]
    identity: bool


class GammaRequest(BaseModel):
    params: ParamsModel
    text: str


class GammaResponse(BaseModel):
    text: str
    identity: bool


class GPathRequest(BaseModel):
    params: ParamsModel
    path: str


class GPathResponse(BaseModel):
    continuous: str
    total: str


class OracleResponse(BaseModel):
    trivial: bool
    convention: str


class VerifyRequest(BaseModel):
    params: ParamsModel | None = None
    suites: list[str] | None = None
    grid: bool = False
    max_n: int = 4
    max_L: int = 2
    max_N: int = 2
    count: int = 100
    seed: int = 0


class SuiteReportModel(BaseModel):
    suite: str
    params: ParamsModel
    checked: int
    ok: bool
    seconds: float
    failures: list[str]


class VerifyResponse(BaseModel):
    ok: bool
    reports: list[SuiteReportModel]


class BenchRequest(BaseModel):
    params: ParamsModel
    count: int = 50
    length: int = 40
    seed: int = 0


class BenchResponse(BaseModel):
    params: ParamsModel
    count: int
    length: int
    total_seconds: float
    mean_ms: float
    max_ms: float
    blowups: int
    line: str


class ErrorDetail(BaseModel):
    type: str
    message: str
    position: int | None = None
    level: int | None = None
    size: int | None = None
    cap: int | None = None
    reason: str | None = None


class HealthResponse(BaseModel):
    status: str
    version: str
