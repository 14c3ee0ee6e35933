"""Segmentation of normalized text into graphemes, punctuation, and the rest.

Greedy longest-match over the language's grapheme inventory (at most two code
points per grapheme). Characters nobody claims become `unknown` tokens, one
per character; whitespace runs collapse into a single `space` token whose text
is the whole run. The Uyghur separating apostrophe is consumed silently: it
emits no token and keeps the surrounding letters from fusing into a digraph
("n'g" is n + g, never ŋ).
"""

from __future__ import annotations

from dataclasses import dataclass

from .normalize import UYGHUR_SEPARATOR
from .registry import IpaSymbol, Registry, default_registry

#: The only punctuation the synthesis input alphabet admits.
PUNCTUATION = frozenset(".,-?!")


@dataclass(frozen=True)
class Token:
    kind: str                   # grapheme | punct | space | unknown
    text: str
    ipa: IpaSymbol | None = None


@dataclass(frozen=True)
class TokenStream:
    language: str
    tokens: tuple[Token, ...]

    def texts(self) -> tuple[str, ...]:
        return tuple(t.text for t in self.tokens)


def tokenize(lang: str, normalized: str, registry: Registry | None = None) -> TokenStream:
    """Segment text already normalized for `lang`."""
    reg = registry if registry is not None else default_registry()
    inventory = reg.tables[lang].to_ipa
    tokens: list[Token] = []
    i, n = 0, len(normalized)
    while i < n:
        cp = normalized[i]
        if cp.isspace():
            j = i + 1
            while j < n and normalized[j].isspace():
                j += 1
            tokens.append(Token("space", normalized[i:j]))
            i = j
            continue
        if lang == "ug" and cp == UYGHUR_SEPARATOR:
            i += 1  # digraph breaker: no token
            continue
        pair = normalized[i:i + 2]
        if len(pair) == 2 and pair in inventory:
            tokens.append(Token("grapheme", pair, inventory[pair]))
            i += 2
        elif cp in inventory:
            tokens.append(Token("grapheme", cp, inventory[cp]))
            i += 1
        elif cp in PUNCTUATION:
            tokens.append(Token("punct", cp))
            i += 1
        else:
            tokens.append(Token("unknown", cp))
            i += 1
    return TokenStream(language=lang, tokens=tuple(tokens))


def segment_oracle(lang: str, normalized: str, registry: Registry | None = None) -> TokenStream:
    """Reference segmentation for tests: backward dynamic programming.

    Fills a parse table from the end of the string, choosing at each position
    the longest grapheme that matches there (candidates found by scanning the
    full inventory, longest first). Kept deliberately independent of
    :func:`tokenize`'s forward scanner.
    """
    reg = registry if registry is not None else default_registry()
    table = reg.tables[lang].to_ipa
    by_length = sorted(table, key=lambda g: (-len(g), g))
    n = len(normalized)
    parses: list[tuple[Token, ...] | None] = [None] * (n + 1)
    parses[n] = ()
    for pos in range(n - 1, -1, -1):
        cp = normalized[pos]
        if cp.isspace():
            end = pos
            while end < n and normalized[end].isspace():
                end += 1
            chosen = (Token("space", normalized[pos:end]),) + parses[end]
        elif lang == "ug" and cp == UYGHUR_SEPARATOR:
            chosen = parses[pos + 1]
        else:
            grapheme = next(
                (g for g in by_length if normalized.startswith(g, pos)), None
            )
            if grapheme is not None:
                chosen = (Token("grapheme", grapheme, table[grapheme]),) + parses[pos + len(grapheme)]
            elif cp in PUNCTUATION:
                chosen = (Token("punct", cp),) + parses[pos + 1]
            else:
                chosen = (Token("unknown", cp),) + parses[pos + 1]
        parses[pos] = chosen
    return TokenStream(language=lang, tokens=parses[0])
