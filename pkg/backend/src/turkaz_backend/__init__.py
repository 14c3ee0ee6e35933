"""HTTP synthesis server wrapping a pretrained Kazakh TTS model and vocoder."""

from .app import create_app, pcm_to_wav
from .engine import AdapterConfig, EspnetEngine, SynthesisEngine
from .validation import INPUT_ALPHABET, KAZAKH_LETTERS, validate_text

__version__ = "0.1.0"

__all__ = [
    "AdapterConfig",
    "EspnetEngine",
    "INPUT_ALPHABET",
    "KAZAKH_LETTERS",
    "SynthesisEngine",
    "create_app",
    "pcm_to_wav",
    "validate_text",
]
