"""HTTP front end.  One POST endpoint per command; bodies are AnalysisRequest."""

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from . import __version__
from .schemas import AnalysisRequest, Report
from .service import COMMANDS, EXIT_DOMAIN, EXIT_OK, run

app = FastAPI(
    title="blowade",
    description="Blow-ADE certification, Newton numbers and monodromy zeta-functions of surface germs.",
    version=__version__,
)

STATUS = {EXIT_OK: 200, EXIT_DOMAIN: 422}


@app.exception_handler(RequestValidationError)
async def _bad_request(request: Request, exc: RequestValidationError):
    # 422 is reserved for domain errors; malformed bodies are plain 400s
    return JSONResponse(status_code=400, content={"detail": exc.errors()})


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__, "commands": list(COMMANDS)}


def _endpoint(command):
    def handler(req: AnalysisRequest):
        code, report = run(command, req)
        return JSONResponse(status_code=STATUS.get(code, 400), content=Report(**report).model_dump())

    handler.__name__ = "run_" + command.replace("-", "_")
    return handler


for _cmd in COMMANDS:
    app.post(f"/{_cmd}", response_model=Report, summary=f"run {_cmd}")(_endpoint(_cmd))
