"""The HTTP service: health, validation, synthesis, WAV responses.

The engine loads in a background thread while the service is already
answering; both endpoints return 503 until the load completes (or fails).
Inference itself is serialized (one model instance, one utterance at a time)
while the protocol layer queues concurrent requests.
"""

from __future__ import annotations

import io
import threading
import wave
from contextlib import asynccontextmanager
from typing import Callable

import numpy as np
from fastapi import FastAPI, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .engine import SynthesisEngine
from .validation import validate_text


class SynthesisInput(BaseModel):
    text: str
    id: str = ""


def pcm_to_wav(sample_rate: int, pcm: np.ndarray) -> bytes:
    buf = io.BytesIO()
    with wave.open(buf, "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(sample_rate)
        w.writeframes(pcm.astype("<i2").tobytes())
    return buf.getvalue()


class _EngineSlot:
    def __init__(self):
        self.engine: SynthesisEngine | None = None
        self.error: str | None = None
        self.lock = threading.Lock()        # serializes inference
        self.loaded = threading.Event()


def create_app(load_engine: Callable[[], SynthesisEngine]) -> FastAPI:
    """Build the service around a deferred engine constructor."""
    slot = _EngineSlot()

    def _load():
        try:
            slot.engine = load_engine()
        except Exception as exc:  # surface the cause through /health
            slot.error = str(exc)
        finally:
            slot.loaded.set()

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        threading.Thread(target=_load, daemon=True).start()
        yield

    app = FastAPI(title="kazakh synthesis backend", lifespan=lifespan)

    def _unavailable() -> JSONResponse | None:
        if slot.engine is not None:
            return None
        status = {"status": "error", "error": slot.error} if slot.error else {"status": "loading"}
        return JSONResponse(status, status_code=503)

    @app.get("/health")
    def health():
        if (resp := _unavailable()) is not None:
            return resp
        return {
            "status": "ok",
            "sample_rate": slot.engine.sample_rate,
            "feature_dim": slot.engine.feature_dim,
        }

    @app.post("/synthesize")
    def synthesize(body: SynthesisInput):
        if (resp := _unavailable()) is not None:
            return resp
        problem = validate_text(body.text)
        if problem is not None:
            return JSONResponse({"detail": problem, "id": body.id}, status_code=400)
        try:
            with slot.lock:
                pcm = slot.engine.synthesize(body.text)
        except Exception as exc:
            return JSONResponse({"detail": f"inference failed: {exc}", "id": body.id},
                                status_code=500)
        return Response(
            content=pcm_to_wav(slot.engine.sample_rate, pcm),
            media_type="audio/wav",
            headers={"X-Request-Id": body.id},
        )

    return app
