"""Language-aware input canonicalization.

Raw text is prepared for tokenization in four passes: Unicode NFC composition,
lowercasing (with the Turkic dotted/dotless-i rule for Turkish and Azerbaijani),
folding of Latin/Cyrillic lookalike characters into the language's script, and
unification of apostrophe variants in Uzbek and Uyghur. Punctuation and
whitespace pass through untouched.

Every change is reported against the position of the input code point it
replaced, so the report is a complete audit: re-applying the replacements to
the input reproduces the output exactly (see :func:`apply_replacements`).
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Mapping

from .errors import MalformedData
from .registry import Registry, default_registry

#: Apostrophe-like code points that real-world text uses interchangeably.
APOSTROPHE_VARIANTS = frozenset("'‘’ʼʻ")

#: The Uzbek letter-forming apostrophe (oʻ, gʻ) and the glottal-stop letter.
UZBEK_LETTER_APOSTROPHE = "ʻ"
UZBEK_GLOTTAL = "ʼ"

#: Uyghur Latin uses a plain apostrophe as a digraph separator.
UYGHUR_SEPARATOR = "'"


@dataclass(frozen=True)
class Replacement:
    position: int       # code point index into the raw input
    original: str       # the input code point at that position
    replacement: str    # what it became (may be empty or several code points)
    reason: str         # one of: nfc, case, homoglyph, apostrophe


@dataclass(frozen=True)
class NormalizationReport:
    output: str
    replacements: tuple[Replacement, ...]


def apply_replacements(raw: str, replacements: tuple[Replacement, ...]) -> str:
    """Replay a report's replacements over the raw input (audit helper)."""
    by_pos = {r.position: r.replacement for r in replacements}
    return "".join(by_pos.get(i, cp) for i, cp in enumerate(raw))


def load_confusables(path: str | Path | None = None) -> Mapping[str, Mapping[str, str]]:
    """Read the lookalike table; keys are the script the fold applies to."""
    if path is None:
        return _default_confusables()
    return _parse_confusables(Path(path).read_text(encoding="utf-8"), str(path))


@lru_cache(maxsize=1)
def _default_confusables() -> Mapping[str, Mapping[str, str]]:
    text = (resources.files("turkaz") / "data" / "confusables.tsv").read_text(encoding="utf-8")
    return _parse_confusables(text, "confusables.tsv")


def _parse_confusables(text: str, name: str) -> dict[str, dict[str, str]]:
    folds: dict[str, dict[str, str]] = {"Latin": {}, "Cyrillic": {}}
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.rstrip("\r").split("\t")
        if len(cols) != 3 or cols[2] not in folds or len(cols[0]) != 1 or len(cols[1]) != 1:
            raise MalformedData("bad confusable row", path=name, line=lineno)
        folds[cols[2]][cols[0]] = cols[1]
    return folds


class _Segment:
    """One input code point and what it has become so far."""

    __slots__ = ("position", "original", "text", "reason")

    def __init__(self, position: int, original: str):
        self.position = position
        self.original = original
        self.text = original
        self.reason: str | None = None

    def set(self, new_text: str, reason: str) -> None:
        if new_text != self.text:
            self.text = new_text
            self.reason = reason


def _nfc_pass(segments: list[_Segment]) -> None:
    # Compose within runs of (starter + combining marks). For Latin/Cyrillic
    # text this equals global NFC; compositions never cross starter boundaries.
    i = 0
    while i < len(segments):
        j = i + 1
        while j < len(segments) and unicodedata.combining(segments[j].original) > 0:
            j += 1
        group = segments[i:j]
        joined = "".join(seg.text for seg in group)
        composed = unicodedata.normalize("NFC", joined)
        if composed != joined:
            group[0].set(composed, "nfc")
            for seg in group[1:]:
                seg.set("", "nfc")
        i = j


def _lower(text: str, lang: str) -> str:
    if lang in ("tr", "az"):
        # Dotted/dotless opposition: İ→i and I→ı, unlike default Unicode casing.
        text = text.replace("İ", "i").replace("I", "ı")
    return text.lower()


def _case_pass(segments: list[_Segment], lang: str) -> None:
    for seg in segments:
        if seg.text:
            seg.set(_lower(seg.text, lang), "case")


def _homoglyph_pass(segments: list[_Segment], fold: Mapping[str, str]) -> None:
    for seg in segments:
        if seg.text:
            seg.set("".join(fold.get(cp, cp) for cp in seg.text), "homoglyph")


def _apostrophe_pass(segments: list[_Segment], lang: str) -> None:
    prev = ""  # last output code point seen so far
    for seg in segments:
        if not seg.text:
            continue
        if seg.text in APOSTROPHE_VARIANTS:
            if lang == "uz":
                target = UZBEK_LETTER_APOSTROPHE if prev in ("o", "g") else UZBEK_GLOTTAL
            else:
                target = UYGHUR_SEPARATOR
            seg.set(target, "apostrophe")
        prev = seg.text[-1]


def normalize(
    lang: str,
    raw: str,
    *,
    fold_homoglyphs: bool = True,
    registry: Registry | None = None,
    confusables: Mapping[str, Mapping[str, str]] | None = None,
) -> NormalizationReport:
    """Canonicalize raw text for `lang`. Total: never raises on text content."""
    reg = registry if registry is not None else default_registry()
    meta = reg.meta(lang)
    segments = [_Segment(i, cp) for i, cp in enumerate(raw)]

    _nfc_pass(segments)
    _case_pass(segments, lang)
    if fold_homoglyphs:
        folds = confusables if confusables is not None else load_confusables(None)
        _homoglyph_pass(segments, folds[meta.script])
    if lang in ("uz", "ug"):
        _apostrophe_pass(segments, lang)
    # Lowercasing and folding can create newly composable pairs (t+◌̈ exists
    # precomposed only in lowercase; а+◌̆ only after the fold), so compose again.
    _nfc_pass(segments)

    output = "".join(seg.text for seg in segments)
    replacements = tuple(
        Replacement(seg.position, seg.original, seg.text, seg.reason)
        for seg in segments
        if seg.text != seg.original
    )
    return NormalizationReport(output=output, replacements=replacements)
