"""Turkic-to-Kazakh transliteration via IPA, with a TTS text frontend.

Ten Turkic languages (az, ba, kk, ky, sah, tt, tr, tk, ug, uz) are mapped into
the 42-letter Kazakh alphabet in two stages (letters to phonetic symbols,
symbols to Kazakh letters) so that a Kazakh-trained speech synthesizer can
voice all of them.

>>> import turkaz
>>> turkaz.transliterate("tr", "merhaba").output
'мэрһаба'
"""

from .analysis import fallback_exposure, inventory, overlap, overlap_matrix
from .audio import AudioResult, read_wav, write_wav
from .backends import HttpBackend, MockBackend, backend_from_url
from .errors import (
    BackendError,
    BackendTimeout,
    BackendUnavailable,
    EmptyInput,
    MalformedData,
    TurkazError,
    UnknownCharacter,
)
from .normalize import NormalizationReport, Replacement, normalize
from .pipeline import SynthesisRequest, split_sentences, synthesize
from .registry import (
    IpaSymbol,
    LanguageMeta,
    LANGUAGES,
    MappingTable,
    Registry,
    default_registry,
    load_registry,
    resolve_language,
)
from .tokenize import Token, TokenStream, segment_oracle, tokenize
from .translit import (
    IpaTranscription,
    KAZAKH_LETTERS,
    TransliterationResult,
    ipa_to_kazakh,
    is_closed,
    to_ipa,
    transcribe,
    transliterate,
)

__version__ = "0.1.0"

__all__ = [
    "AudioResult",
    "BackendError",
    "BackendTimeout",
    "BackendUnavailable",
    "EmptyInput",
    "HttpBackend",
    "IpaSymbol",
    "IpaTranscription",
    "KAZAKH_LETTERS",
    "LANGUAGES",
    "LanguageMeta",
    "MalformedData",
    "MappingTable",
    "MockBackend",
    "NormalizationReport",
    "Registry",
    "Replacement",
    "SynthesisRequest",
    "Token",
    "TokenStream",
    "TransliterationResult",
    "TurkazError",
    "UnknownCharacter",
    "backend_from_url",
    "default_registry",
    "fallback_exposure",
    "inventory",
    "ipa_to_kazakh",
    "is_closed",
    "load_registry",
    "normalize",
    "overlap",
    "overlap_matrix",
    "read_wav",
    "resolve_language",
    "segment_oracle",
    "split_sentences",
    "synthesize",
    "to_ipa",
    "tokenize",
    "transcribe",
    "transliterate",
    "write_wav",
]
