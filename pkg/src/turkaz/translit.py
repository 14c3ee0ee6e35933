"""The two-stage converter: source letters → IPA sequence → Kazakh letters.

Stage one swaps each grapheme token for its phonetic symbol; stage two renders
each symbol as a Kazakh letter, falling back to the nearest Kazakh sound for
the five symbols Kazakh lacks (d͡ʒ, gʲ, θ, ð, ɲ) and accounting for every
fallback used. Output is closed over the synthesis input alphabet: the 42
Kazakh letters, the five punctuation marks ``. , - ? !``, and the space.

Characters that map to nothing (digits, foreign letters, other punctuation)
are handled per policy: ``strict`` raises, ``drop`` removes them, and
``keep-space`` turns each into a space; the latter two record what happened.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from .errors import UnknownCharacter
from .normalize import normalize
from .registry import IpaSymbol, Registry, default_registry
from .tokenize import PUNCTUATION, TokenStream, tokenize

#: The 42 letters of the Kazakh alphabet (the synthesis input letters).
KAZAKH_LETTERS = frozenset("аәбвгғдеёжзийкқлмнңоөпрстуұүфхһцчшщъыіьэюя")

#: Everything a transliteration may emit.
OUTPUT_ALPHABET = KAZAKH_LETTERS | PUNCTUATION | {" "}

POLICIES = ("strict", "drop", "keep-space")


def is_closed(text: str) -> bool:
    """True iff every character belongs to the synthesis input alphabet."""
    return all(cp in OUTPUT_ALPHABET for cp in text)


@dataclass(frozen=True)
class IpaItem:
    kind: str                       # symbol | punct | space | unknown
    text: str                       # the source text this item came from
    symbol: IpaSymbol | None = None


@dataclass(frozen=True)
class IpaTranscription:
    language: str
    items: tuple[IpaItem, ...]


@dataclass(frozen=True)
class TransliterationResult:
    output: str
    #: (index into the IPA item sequence, the non-Kazakh symbol rendered)
    used_fallbacks: tuple[tuple[int, IpaSymbol], ...]
    #: (index into the IPA item sequence, original text, unknown_char | disallowed_punct)
    dropped: tuple[tuple[int, str, str], ...]


def to_ipa(stream: TokenStream) -> IpaTranscription:
    """Replace each grapheme token by its symbol; carry everything else through."""
    items = []
    for token in stream.tokens:
        if token.kind == "grapheme":
            items.append(IpaItem("symbol", token.text, token.ipa))
        else:
            items.append(IpaItem(token.kind, token.text))
    return IpaTranscription(language=stream.language, items=tuple(items))


def ipa_line(ipa: IpaTranscription) -> str:
    """Space-separated IPA rendering (unknown characters shown verbatim)."""
    parts = []
    for item in ipa.items:
        if item.kind == "symbol":
            parts.append(item.symbol.ipa)
        elif item.kind in ("punct", "unknown"):
            parts.append(item.text)
    return " ".join(parts)


def unknown_reason(text: str) -> str:
    """Audit label for an unmappable character."""
    return "disallowed_punct" if unicodedata.category(text[0])[0] in ("P", "S") else "unknown_char"


def ipa_to_kazakh(
    ipa: IpaTranscription,
    policy: str = "strict",
    registry: Registry | None = None,
) -> TransliterationResult:
    """Render an IPA sequence in Kazakh letters, applying the unknown policy."""
    if policy not in POLICIES:
        raise ValueError(f"policy must be one of {POLICIES}, got {policy!r}")
    reg = registry if registry is not None else default_registry()
    out: list[str] = []
    fallbacks: list[tuple[int, IpaSymbol]] = []
    dropped: list[tuple[int, str, str]] = []
    for idx, item in enumerate(ipa.items):
        if item.kind == "symbol":
            out.append(reg.render_kazakh(item.symbol))
            if not item.symbol.in_kazakh:
                fallbacks.append((idx, item.symbol))
        elif item.kind == "punct":
            out.append(item.text)
        elif item.kind == "space":
            out.append(" " * len(item.text))  # tabs and friends become plain spaces
        else:
            reason = unknown_reason(item.text)
            if policy == "strict":
                raise UnknownCharacter(item.text, idx, reason)
            dropped.append((idx, item.text, reason))
            if policy == "keep-space":
                out.append(" ")
    return TransliterationResult(
        output="".join(out),
        used_fallbacks=tuple(fallbacks),
        dropped=tuple(dropped),
    )


def transliterate(
    lang: str,
    raw: str,
    policy: str = "strict",
    *,
    fold_homoglyphs: bool = True,
    registry: Registry | None = None,
    confusables=None,
) -> TransliterationResult:
    """Full pipeline: normalize, tokenize, map to IPA, render in Kazakh."""
    reg = registry if registry is not None else default_registry()
    normalized = normalize(
        lang, raw, fold_homoglyphs=fold_homoglyphs, registry=reg, confusables=confusables
    ).output
    stream = tokenize(lang, normalized, registry=reg)
    return ipa_to_kazakh(to_ipa(stream), policy=policy, registry=reg)


def transcribe(
    lang: str,
    raw: str,
    *,
    fold_homoglyphs: bool = True,
    registry: Registry | None = None,
    confusables=None,
) -> IpaTranscription:
    """Normalize and tokenize `raw`, stopping at the IPA stage."""
    reg = registry if registry is not None else default_registry()
    normalized = normalize(
        lang, raw, fold_homoglyphs=fold_homoglyphs, registry=reg, confusables=confusables
    ).output
    return to_ipa(tokenize(lang, normalized, registry=reg))
