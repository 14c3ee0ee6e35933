"""From transliterated text to audio: sentence splitting and backend dispatch.

Text is cut at sentence terminators (``. ? !``, runs stay attached), then any
piece still over the length limit is cut again at its last comma before the
limit, else its last space, else hard at the limit. A piece that lost its
terminator gains a ``.`` so every request ends in a terminator; the models
read punctuation as intonation, so it must survive to the request.

Requests are dispatched with bounded concurrency; results come back in request
order regardless of completion order.
"""

from __future__ import annotations

import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .audio import AudioResult
from .backends import Backend
from .errors import EmptyInput
from .translit import is_closed

TERMINATORS = frozenset(".?!")
DEFAULT_MAX_LENGTH = 250
DEFAULT_PARALLELISM = 2


@dataclass(frozen=True)
class SynthesisRequest:
    text: str
    request_id: str

    def __post_init__(self):
        if not self.text:
            raise ValueError("empty request text")
        if not is_closed(self.text):
            bad = sorted({cp for cp in self.text if not is_closed(cp)})
            raise ValueError(f"request text outside the synthesis alphabet: {bad!r}")
        if self.text[-1] not in TERMINATORS:
            raise ValueError(f"request text must end with . ? or !, got {self.text[-1]!r}")


def _new_id() -> str:
    return uuid.uuid4().hex[:12]


def _split_sentences_raw(text: str) -> list[str]:
    """Cut at terminator runs, keeping each run with its sentence."""
    sentences = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in TERMINATORS:
            while i + 1 < n and text[i + 1] in TERMINATORS:
                i += 1
            sentences.append(text[start:i + 1].strip())
            start = i + 1
        i += 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return [s for s in sentences if s]


def _shorten(sentence: str, max_length: int) -> list[str]:
    """Cut one overlong sentence into limit-respecting fragments."""
    pieces = []
    rest = sentence
    while len(rest) > max_length:
        comma = rest.rfind(",", 0, max_length - 1)
        if comma > 0:
            head, rest = rest[:comma + 1], rest[comma + 1:]
        else:
            space = rest.rfind(" ", 0, max_length)
            if space > 0:
                head, rest = rest[:space], rest[space + 1:]
            else:
                head, rest = rest[:max_length - 1], rest[max_length - 1:]
        head = head.strip()
        if head:
            pieces.append(head)
        rest = rest.strip()
    if rest:
        pieces.append(rest)
    return pieces


def split_sentences(text: str, max_length: int = DEFAULT_MAX_LENGTH) -> list[SynthesisRequest]:
    """Cut closed Kazakh text into synthesis requests of at most `max_length`."""
    if max_length < 4:
        raise ValueError("max_length must be at least 4")
    if not text or not text.strip():
        raise EmptyInput("nothing to synthesize")
    if not is_closed(text):
        bad = sorted({cp for cp in text if not is_closed(cp)})
        raise ValueError(f"input is not closed over the synthesis alphabet: {bad!r}")

    requests = []
    for sentence in _split_sentences_raw(text):
        fragments = [sentence] if len(sentence) <= max_length else _shorten(sentence, max_length)
        for fragment in fragments:
            if fragment[-1] not in TERMINATORS:
                fragment += "."  # re-terminate a fragment that lost its ending
            requests.append(SynthesisRequest(text=fragment, request_id=_new_id()))
    if not requests:
        raise EmptyInput("nothing to synthesize")
    return requests


def synthesize(
    requests: list[SynthesisRequest],
    backend: Backend,
    parallelism: int = DEFAULT_PARALLELISM,
) -> list[AudioResult]:
    """One AudioResult per request, in request order."""
    if not requests:
        return []
    if parallelism < 1:
        raise ValueError("parallelism must be at least 1")
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        futures = [pool.submit(backend.synthesize, r.text, r.request_id) for r in requests]
        return [f.result() for f in futures]
