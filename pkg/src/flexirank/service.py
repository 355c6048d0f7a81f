"""HTTP search service.

Thin stateless wrapper over the ranking pipeline: corpus and profiles
are loaded once at startup and never mutated, every /search request
recomputes the ranking (the corpus is small scale), so identical
requests produce identical results. Serves the bundled web console at /
when a UI directory is available.
"""

from __future__ import annotations

import os
import time
from pathlib import Path

from fastapi import FastAPI
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles

from .corpus import CorpusManifest, load_corpus
from .profiles import PAGE_TYPES, TypeProfile, load_profiles
from .ranking import rank
from .relevance import EmptyQueryError

MAX_RESULTS = 100

_PLACEHOLDER = """<!doctype html>
<html><head><title>flexirank</title></head>
<body><h1>flexirank search service</h1>
<p>No web console is bundled in this deployment. The API lives at
<code>/search?q=...&amp;type=...&amp;k=...</code>; page types are listed at
<code>/types</code>.</p></body></html>
"""


def create_app(
    corpus: CorpusManifest,
    profiles: dict[str, TypeProfile] | None = None,
    ui_dir: str | os.PathLike | None = None,
) -> FastAPI:
    if profiles is None:
        profiles = load_profiles()
    app = FastAPI(title="flexirank", docs_url=None, redoc_url=None)

    def error(status: int, message: str) -> JSONResponse:
        return JSONResponse(status_code=status, content={"error": message})

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "corpus_size": len(corpus)}

    @app.get("/types")
    def types():
        return {"types": list(PAGE_TYPES)}

    @app.get("/search")
    def search(q: str = "", type: str = "default", k: str = "10"):
        if not q.strip():
            return error(400, "empty query")
        if type not in profiles:
            valid = ", ".join(sorted(profiles))
            return error(400, f"unknown page type {type!r}; valid types: {valid}")
        try:
            count = int(k)
        except ValueError:
            return error(400, f"k must be an integer, got {k!r}")
        if not 1 <= count <= MAX_RESULTS:
            return error(400, f"k must be between 1 and {MAX_RESULTS}")
        started = time.perf_counter()
        try:
            results = rank(q, type, corpus, k=count, profiles=profiles)
        except EmptyQueryError:
            return error(400, "empty query")
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        return {
            "results": [
                {
                    "rank": r.rank,
                    "url": r.url,
                    "score": r.score,
                    "contributions": r.contributions,
                }
                for r in results
            ],
            "timing_ms": elapsed_ms,
            "corpus_size": len(corpus),
        }

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:
        @app.get("/", response_class=HTMLResponse)
        def index():
            return _PLACEHOLDER

    return app


def default_ui_dir() -> str | None:
    """FLEXIRANK_UI, falling back to a frontend/dist next to the CWD."""
    env = os.environ.get("FLEXIRANK_UI")
    if env:
        return env
    candidate = Path("frontend") / "dist"
    return str(candidate) if candidate.is_dir() else None


def serve(corpus_path, profiles_path=None, bind: str = "127.0.0.1:8080",
          ui_dir=None) -> None:
    """Load the corpus and profiles, then serve until interrupted.

    Startup failures (unreadable corpus, invalid profiles, bad bind
    address) raise; the CLI maps them to a nonzero exit.
    """
    import uvicorn

    corpus = load_corpus(corpus_path)
    profiles = load_profiles(profiles_path)
    host, _, port_text = bind.rpartition(":")
    if not host or not port_text.isdigit():
        raise ValueError(f"bind must look like host:port, got {bind!r}")
    app = create_app(corpus, profiles, ui_dir=ui_dir or default_ui_dir())
    uvicorn.run(app, host=host, port=int(port_text), log_level="warning")
