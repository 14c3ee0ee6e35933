"""Model loading and inference behind a minimal engine interface."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Protocol, runtime_checkable

import numpy as np


@dataclass(frozen=True)
class AdapterConfig:
    model_path: Path
    vocoder_path: Path
    host: str = "127.0.0.1"
    port: int = 8080
    device: str = "cpu"  # cpu | accelerator

    def __post_init__(self):
        for path in (self.model_path, self.vocoder_path):
            if not Path(path).exists():
                raise FileNotFoundError(f"model artifact not found: {path}")
        if self.device not in ("cpu", "accelerator"):
            raise ValueError(f"device must be cpu or accelerator, got {self.device!r}")


@runtime_checkable
class SynthesisEngine(Protocol):
    """What the HTTP layer needs from a model."""

    sample_rate: int
    feature_dim: int

    def synthesize(self, text: str) -> np.ndarray:
        """Render text as int16 mono samples at `sample_rate`."""
        ...


class EspnetEngine:
    """Wraps a pretrained ESPnet text-to-speech model plus neural vocoder.

    The checkpoints are the published Kazakh ones (see the README for the
    manual download step); nothing is fetched at runtime. Imports are lazy so
    the HTTP layer stays testable without the heavyweight ML stack.
    """

    feature_dim = 80  # log Mel-filterbank features

    def __init__(self, config: AdapterConfig):
        try:
            from espnet2.bin.tts_inference import Text2Speech
        except ImportError as exc:
            raise RuntimeError(
                "espnet2 is not installed; install this package with the "
                "[espnet] extra to serve real checkpoints"
            ) from exc
        device = "cuda" if config.device == "accelerator" else "cpu"
        self._tts = Text2Speech.from_pretrained(
            model_file=str(config.model_path),
            vocoder_file=str(config.vocoder_path),
            device=device,
        )
        self.sample_rate = int(self._tts.fs)

    def synthesize(self, text: str) -> np.ndarray:
        result = self._tts(text)
        features = result.get("feat_gen")
        if features is not None and features.shape[-1] != self.feature_dim:
            raise RuntimeError(
                f"acoustic features have dim {features.shape[-1]}, expected {self.feature_dim}"
            )
        wav = result["wav"].detach().cpu().numpy()
        return (np.clip(wav, -1.0, 1.0) * 32767).astype(np.int16)
