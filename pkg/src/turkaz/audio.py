"""PCM audio container and bit-exact WAV I/O (16-bit signed, mono)."""

from __future__ import annotations

import io
import wave
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


@dataclass(frozen=True)
class AudioResult:
    """One synthesized utterance."""

    request_id: str
    sample_rate: int
    pcm: np.ndarray = field(repr=False)  # int16 samples
    channels: int = 1

    def __post_init__(self):
        if self.channels != 1:
            raise ValueError("only mono audio is supported")
        if self.pcm.dtype != np.int16:
            raise ValueError(f"pcm must be int16, got {self.pcm.dtype}")
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")

    @property
    def duration(self) -> float:
        """Seconds of audio: sample count over sample rate."""
        return len(self.pcm) / self.sample_rate


def wav_bytes(audio: AudioResult) -> bytes:
    """Serialize as RIFF/WAVE, PCM 16-bit little-endian mono (44-byte header)."""
    buf = io.BytesIO()
    with wave.open(buf, "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(audio.sample_rate)
        w.writeframes(audio.pcm.astype("<i2").tobytes())
    return buf.getvalue()


def write_wav(audio: AudioResult, path: str | Path) -> Path:
    """Write the WAV file; raises OSError on unwritable paths."""
    path = Path(path)
    path.write_bytes(wav_bytes(audio))
    return path


def read_wav_bytes(data: bytes) -> tuple[int, np.ndarray]:
    """Parse WAV bytes into (sample_rate, int16 mono samples)."""
    with wave.open(io.BytesIO(data), "rb") as w:
        if w.getnchannels() != 1:
            raise ValueError(f"expected mono WAV, got {w.getnchannels()} channels")
        if w.getsampwidth() != 2:
            raise ValueError(f"expected 16-bit WAV, got {8 * w.getsampwidth()}-bit")
        frames = w.readframes(w.getnframes())
        return w.getframerate(), np.frombuffer(frames, dtype="<i2")


def read_wav(path: str | Path) -> tuple[int, np.ndarray]:
    return read_wav_bytes(Path(path).read_bytes())
