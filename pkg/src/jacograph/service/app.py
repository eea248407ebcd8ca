"""FastAPI wiring around the plain api functions."""

from fastapi import FastAPI, HTTPException, Query

from . import api
from .schemas import (CheckRequest, CheckResponse, DomPathResponse,
                      GraphResponse, HealthResponse, SequenceResponse,
                      TableResponse)


def _run(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except LookupError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def create_app():
    app = FastAPI(
        title="jacograph",
        description="Linear Jaco graphs: parameter tables, dom-paths, "
                    "sequence terms, and conjecture checks.",
        version="0.1.0",
    )

    @app.get("/healthz", response_model=HealthResponse)
    def healthz():
        return api.health()

    @app.get("/table", response_model=TableResponse)
    def table(max_n: int = Query(default=32)):
        return _run(api.table, max_n)

    @app.get("/graph/{n}", response_model=GraphResponse)
    def graph(n: int):
        return _run(api.graph, n)

    @app.get("/dompath/{n}", response_model=DomPathResponse)
    def dompath(n: int, secondary: bool = Query(default=False)):
        return _run(api.dompath, n, secondary)

    @app.get("/sequence/{seq_id}", response_model=SequenceResponse)
    def sequence(seq_id: str, count: int = Query(default=10),
                 prepend_artificial: bool = Query(default=False)):
        return _run(api.sequence, seq_id, count, prepend_artificial)

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest):
        return _run(api.check, req)

    return app


app = create_app()
