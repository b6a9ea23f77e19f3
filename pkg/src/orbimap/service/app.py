"""FastAPI application exposing the library over HTTP.

Domain errors map to structured 422 payloads (400 for malformed words
or parameters) so clients can distinguish bad input, resource blowups,
and genuine server faults without parsing prose.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..combing import (
    BlowupError,
    CertificationError,
    NonPureError,
    forget,
    is_trivial,
    normal_form,
    push,
    rewrite_pure,
    section,
)
from ..gamma import GammaError, gamma_from_text, gamma_is_identity, gamma_to_text
from ..gpath import GPathError, continuous_to_text, gpath_from_text, gpath_normalize
from ..oracle import EmbeddingError, OracleError, oracle_is_trivial, validate_embedding
from ..params import OrbimapError, ParamsError
from ..presentations import (
    PresentationError,
    export_presentation,
    expand_word,
    full_presentation,
    pure_presentation,
)
from ..verify import bench_normal_form, run_grid, run_suite, suite_names
from ..words import (
    AlphabetError,
    LetterRangeError,
    ParseError,
    letter_to_text,
    parse_word,
    perm_image,
    word_to_text,
)
from .models import (
    BenchRequest,
    BenchResponse,
    ErrorDetail,
    GammaRequest,
    GammaResponse,
    GPathRequest,
    GPathResponse,
    HealthResponse,
    NormalFormResponse,
    OracleResponse,
    ParamsModel,
    PermResponse,
    PresentRequest,
    PresentResponse,
    SuiteReportModel,
    SyllableModel,
    TrivialResponse,
    VerifyRequest,
    VerifyResponse,
    WordRequest,
    WordResponse,
)

_BAD_INPUT = (
    ParseError,
    LetterRangeError,
    AlphabetError,
    ParamsError,
    GammaError,
    GPathError,
    PresentationError,
    NonPureError,
    ValueError,
)


def _error_payload(exc: Exception) -> ErrorDetail:
    detail = ErrorDetail(type=type(exc).__name__, message=str(exc))
    if isinstance(exc, ParseError):
        detail.position = exc.position
    if isinstance(exc, BlowupError):
        detail.level = exc.level
        detail.size = exc.size
        detail.cap = exc.cap
        detail.reason = exc.reason
    return detail


def create_app() -> FastAPI:
    """Build the service; state is per-request, safe to share."""
    app = FastAPI(title="orbimap", version=__version__)

    @app.exception_handler(OrbimapError)
    async def _domain_error(request: Request, exc: OrbimapError) -> JSONResponse:
        if isinstance(exc, _BAD_INPUT):
            status = 400
        elif isinstance(exc, BlowupError):
            status = 422
        elif isinstance(exc, (CertificationError, OracleError, EmbeddingError)):
            status = 500
        else:
            status = 422
        return JSONResponse(
            status_code=status, content={"error": _error_payload(exc).model_dump()}
        )

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(
            status_code=400, content={"error": _error_payload(exc).model_dump()}
        )

    @app.get("/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/nf", response_model=NormalFormResponse)
    async def nf(req: WordRequest) -> NormalFormResponse:
        p = req.params.to_params()
        w = parse_word(req.word, p)
        form = normal_form(
            w, max_syllable=req.max_syllable, max_ops=req.max_ops, certify=req.certify
        )
        syllables = [
            SyllableModel(level=p.n - i, word=word_to_text(s))
            for i, s in enumerate(form.syllables)
        ]
        return NormalFormResponse(
            text=str(form),
            syllables=syllables,
            coset=form.coset.cycles_text(),
            trivial=form.is_trivial,
            word=word_to_text(form.to_word()),
        )

    @app.post("/trivial", response_model=TrivialResponse)
    async def trivial(req: WordRequest) -> TrivialResponse:
        p = req.params.to_params()
        w = parse_word(req.word, p)
        return TrivialResponse(
            trivial=is_trivial(
                w, max_syllable=req.max_syllable, max_ops=req.max_ops, certify=req.certify
            )
        )

    @app.post("/present", response_model=PresentResponse)
    async def present(req: PresentRequest) -> PresentResponse:
        p = req.params.to_params()
        pres = pure_presentation(p) if req.group == "pure" else full_presentation(p)
        return PresentResponse(
            group=req.group,
            format=req.format,
            generators=[letter_to_text(g) for g in pres.generators],
            relator_count=len(pres.relators),
            text=export_presentation(pres, req.format),
        )

    @app.post("/expand", response_model=WordResponse)
    async def expand(req: WordRequest) -> WordResponse:
        p = req.params.to_params()
        w = parse_word(req.word, p)
        return WordResponse(word=word_to_text(expand_word(w)), params=req.params)

    @app.post("/rewrite", response_model=WordResponse)
    async def rewrite(req: WordRequest) -> WordResponse:
        p = req.params.to_params()
        w = parse_word(req.word, p)
        return WordResponse(
            word=word_to_text(rewrite_pure(w, certify=req.certify)), params=req.params
        )

    @app.post("/push", response_model=WordResponse)
    async def push_route(req: WordRequest) -> WordResponse:
        p = req.params.to_params()
        w = parse_word(req.word, p)
        return WordResponse(word=word_to_text(push(w)), params=req.params)

    @app.post("/forget", response_model=WordResponse)
    async def forget_route(req: WordRequest) -> WordResponse:
        p = req.params.to_params()
        w = parse_word(req.word, p)
        out = forget(w)
        return WordResponse(
            word=word_to_text(out), params=ParamsModel.from_params(out.params)
        )

    @app.post("/section", response_model=WordResponse)
    async def section_route(req: WordRequest) -> WordResponse:
        p = req.params.to_params()
        w = parse_word(req.word, p)
        out = section(w)
        return WordResponse(
            word=word_to_text(out), params=ParamsModel.from_params(out.params)
        )

    @app.post("/perm", response_model=PermResponse)
    async def perm(req: WordRequest) -> PermResponse:
        p = req.params.to_params()
        w = parse_word(req.word, p)
        image = perm_image(w)
        return PermResponse(
            cycles=image.cycles_text(),
            images=list(image.images),
            identity=image.is_identity,
        )

    @app.post("/gamma/nf", response_model=GammaResponse)
    async def gamma_nf(req: GammaRequest) -> GammaResponse:
        p = req.params.to_params()
        g = gamma_from_text(req.text, p)
        return GammaResponse(text=gamma_to_text(g), identity=gamma_is_identity(g))

    @app.post("/gpath/normalize", response_model=GPathResponse)
    async def gpath_normalize_route(req: GPathRequest) -> GPathResponse:
        p = req.params.to_params()
        path = gpath_from_text(req.path, p)
        cf = gpath_normalize(path, p)
        return GPathResponse(
            continuous=continuous_to_text(cf), total=gamma_to_text(cf.g)
        )

    @app.post("/oracle/trivial", response_model=OracleResponse)
    async def oracle_trivial(req: WordRequest) -> OracleResponse:
        p = req.params.to_params()
        w = parse_word(req.word, p)
        report = validate_embedding(p)
        return OracleResponse(
            trivial=oracle_is_trivial(w), convention=report.convention
        )

    @app.post("/verify", response_model=VerifyResponse)
    async def verify(req: VerifyRequest) -> VerifyResponse:
        names = req.suites or None
        if names:
            unknown = [s for s in names if s not in suite_names()]
            if unknown:
                raise ValueError(
                    f"unknown suite {unknown[0]!r}, expected one of {', '.join(suite_names())}"
                )
        if req.grid or req.params is None:
            reports = run_grid(
                suites=names,
                max_n=req.max_n,
                max_L=req.max_L,
                max_N=req.max_N,
                count=req.count,
                seed=req.seed,
            )
        else:
            p = req.params.to_params()
            reports = [
                run_suite(name, p, count=req.count, seed=req.seed)
                for name in (names or ["relators", "embedding", "oracle-agreement"])
            ]
        models = [
            SuiteReportModel(
                suite=r.suite,
                params=ParamsModel.from_params(r.params),
                checked=r.checked,
                ok=r.ok,
                seconds=r.seconds,
                failures=list(r.failures),
            )
            for r in reports
        ]
        return VerifyResponse(ok=all(r.ok for r in reports), reports=models)

    @app.post("/bench", response_model=BenchResponse)
    async def bench(req: BenchRequest) -> BenchResponse:
        p = req.params.to_params()
        report = bench_normal_form(p, count=req.count, length=req.length, seed=req.seed)
        return BenchResponse(
            params=req.params,
            count=report.count,
            length=report.length,
            total_seconds=report.total_seconds,
            mean_ms=report.mean_ms,
            max_ms=report.max_ms,
            blowups=report.blowups,
            line=report.line(),
        )

    return app
