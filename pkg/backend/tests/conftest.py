import json
import threading
import time
from pathlib import Path

import numpy as np
import pytest

VECTORS_PATH = Path(__file__).resolve().parents[2] / "conformance" / "closure_vectors.json"


def load_vectors():
    return json.loads(VECTORS_PATH.read_text(encoding="utf-8"))["vectors"]


class StubEngine:
    """Deterministic engine: a short ramp, 16 kHz, no model stack."""

    sample_rate = 16000
    feature_dim = 80

    def synthesize(self, text: str) -> np.ndarray:
        n = int(0.25 * self.sample_rate) + 400 * len(text)
        return (np.arange(n) % 2000 - 1000).astype(np.int16)


class FailingEngine(StubEngine):
    def synthesize(self, text: str) -> np.ndarray:
        raise RuntimeError("attention collapsed")


class GatedLoader:
    """Engine loader the test releases by hand, to observe the loading state."""

    def __init__(self, engine):
        self.engine = engine
        self.release = threading.Event()

    def __call__(self):
        self.release.wait(timeout=10)
        return self.engine


@pytest.fixture()
def client():
    from fastapi.testclient import TestClient

    from turkaz_backend.app import create_app

    with TestClient(create_app(StubEngine)) as c:
        wait_until_ready(c)
        yield c


def wait_until_ready(client, timeout=5.0):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        if client.get("/health").status_code == 200:
            return
        time.sleep(0.01)
    raise TimeoutError("backend never became ready")
