"""Input validation mirroring the frontend's output closure.

The server accepts exactly what the transliteration frontend can emit: the 42
lowercase Kazakh letters, the punctuation ``. , - ? !``, and the space. The
rule is duplicated here on purpose (this package must not import the
frontend) and kept in lockstep by the shared conformance vectors in
``conformance/closure_vectors.json``.
"""

from __future__ import annotations

KAZAKH_LETTERS = frozenset("аәбвгғдеёжзийкқлмнңоөпрстуұүфхһцчшщъыіьэюя")
PUNCTUATION = frozenset(".,-?!")
INPUT_ALPHABET = KAZAKH_LETTERS | PUNCTUATION | {" "}


def validate_text(text: str) -> str | None:
    """None if the text is synthesizable, else a human-readable refusal."""
    if not text:
        return "empty text"
    bad = sorted({ch for ch in text if ch not in INPUT_ALPHABET})
    if bad:
        shown = ", ".join(f"U+{ord(ch):04X} {ch!r}" for ch in bad[:8])
        return f"text contains characters outside the 42-letter input alphabet: {shown}"
    return None
