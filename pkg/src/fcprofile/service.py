"""JSON-over-HTTP facade for interactive clients (the tuning UI).

Stateless by design: profiles travel in the request body, identical
requests yield identical responses.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .examples import generate_example_profiles
from .fclang import FcParseError, feature_characterization
from .model import Profile, ProfileError
from .report import result_document

DEFAULT_POINT_LIMIT = 1_000_000


class CharacterizeRequest(BaseModel):
    z: list[float] = Field(description="ordinate values in µm")
    dx: float = Field(description="sampling interval in µm")
    spec: str = Field(description="FC convention string")


def create_app(point_limit: int | None = None, static_dir: str | None = None) -> FastAPI:
    limit = point_limit or int(os.environ.get("FCPROFILE_POINT_LIMIT", DEFAULT_POINT_LIMIT))
    app = FastAPI(title="fcprofile")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.post("/api/characterize")
    def characterize(req: CharacterizeRequest):
        if len(req.z) > limit:
            raise HTTPException(status_code=413,
                                detail=f"profile exceeds the {limit}-point limit")
        try:
            profile = Profile(z=req.z, dx=req.dx)
        except ProfileError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        try:
            result, mset, meta = feature_characterization(profile, req.spec)
        except FcParseError as exc:
            raise HTTPException(status_code=400,
                                detail={"field": exc.field, "message": str(exc)}) from exc
        return JSONResponse(result_document(result, mset, meta, profile))

    @app.get("/api/examples")
    def examples():
        return JSONResponse([
            {
                "name": ex.name,
                "description": ex.description,
                "dx": ex.profile.dx,
                "n": ex.profile.n,
                "z": [float(v) for v in ex.profile.z],
            }
            for ex in generate_example_profiles()
        ])

    static = static_dir or os.environ.get("FCPROFILE_STATIC_DIR")
    if static is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        static = str(candidate) if candidate.is_dir() else None
    if static and Path(static).is_dir():
        app.mount("/", StaticFiles(directory=static, html=True), name="ui")

    return app
