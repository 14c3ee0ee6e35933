"""Synthesis backends: the HTTP wire protocol client and the deterministic mock.

Wire protocol (what any model server must implement):

* ``GET  /health``     → 200 JSON, at least ``{"status": "ok", "sample_rate": <Hz>}``
* ``POST /synthesize`` → body ``{"text": <sentence>, "id": <request id>}``,
  response WAV bytes (PCM 16-bit mono); the sample rate is read from the WAV
  header, never assumed.

Connection failures are retried once (transient); HTTP error statuses are not
(synthesis errors are deterministic).
"""

from __future__ import annotations

import hashlib
import wave
from typing import Protocol

import numpy as np
import requests

from .audio import AudioResult, read_wav_bytes
from .errors import BackendError, BackendTimeout, BackendUnavailable


class Backend(Protocol):
    def synthesize(self, text: str, request_id: str) -> AudioResult: ...
    def health(self) -> dict: ...


MOCK_SAMPLE_RATE = 22050
MOCK_SECONDS_PER_CHAR = 0.1
MOCK_HASH_SAMPLES = 8


def text_fingerprint(text: str) -> np.ndarray:
    """First 8 int16 values of the text's SHA-256 digest (stable across runs)."""
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return np.frombuffer(digest[: 2 * MOCK_HASH_SAMPLES], dtype="<i2").copy()


class MockBackend:
    """In-process stand-in for a model server: silence, 0.1 s per character,
    at 22050 Hz, with the text's fingerprint in the first 8 samples."""

    sample_rate = MOCK_SAMPLE_RATE

    def synthesize(self, text: str, request_id: str) -> AudioResult:
        n = round(MOCK_SECONDS_PER_CHAR * len(text) * self.sample_rate)
        pcm = np.zeros(n, dtype=np.int16)
        fp = text_fingerprint(text)
        pcm[: len(fp)] = fp[:n]
        return AudioResult(request_id=request_id, sample_rate=self.sample_rate, pcm=pcm)

    def health(self) -> dict:
        return {"status": "ok", "sample_rate": self.sample_rate}


class HttpBackend:
    """Client for a server speaking the wire protocol above."""

    def __init__(self, base_url: str, timeout: float = 60.0):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self._session = requests.Session()

    def _post(self, path: str, payload: dict) -> requests.Response:
        url = self.base_url + path
        for attempt in (0, 1):
            try:
                return self._session.post(url, json=payload, timeout=self.timeout)
            except requests.exceptions.Timeout as exc:
                raise BackendTimeout(f"no answer from {url} within {self.timeout}s") from exc
            except requests.exceptions.ConnectionError as exc:
                if attempt == 1:
                    raise BackendUnavailable(f"cannot reach {url}: {exc}") from exc
        raise AssertionError("unreachable")

    def synthesize(self, text: str, request_id: str) -> AudioResult:
        resp = self._post("/synthesize", {"text": text, "id": request_id})
        if resp.status_code != 200:
            raise BackendError(resp.status_code, resp.text[:500])
        try:
            sample_rate, pcm = read_wav_bytes(resp.content)
        except (wave.Error, ValueError, EOFError) as exc:
            raise BackendError(resp.status_code, f"unparseable WAV response: {exc}") from exc
        return AudioResult(request_id=request_id, sample_rate=sample_rate, pcm=pcm)

    def health(self) -> dict:
        url = self.base_url + "/health"
        try:
            resp = self._session.get(url, timeout=self.timeout)
        except requests.exceptions.Timeout as exc:
            raise BackendTimeout(f"no answer from {url} within {self.timeout}s") from exc
        except requests.exceptions.ConnectionError as exc:
            raise BackendUnavailable(f"cannot reach {url}: {exc}") from exc
        if resp.status_code != 200:
            raise BackendError(resp.status_code, resp.text[:500])
        return resp.json()


def backend_from_url(url: str, timeout: float = 60.0) -> Backend:
    """`mock:` selects the in-process mock; anything else is an HTTP endpoint."""
    if url == "mock:" or url.startswith("mock://"):
        return MockBackend()
    return HttpBackend(url, timeout=timeout)
