"""Cross-language phoneme-inventory measurements over the mapping data."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .registry import IpaSymbol, Registry, default_registry


def inventory(lang: str, registry: Registry | None = None) -> frozenset[IpaSymbol]:
    """The set of phonetic symbols a language's letters reach."""
    reg = registry if registry is not None else default_registry()
    return frozenset(reg.tables[lang].to_ipa.values())


def overlap(a: str, b: str, registry: Registry | None = None) -> int:
    """How many phonetic symbols two languages share."""
    reg = registry if registry is not None else default_registry()
    return len(inventory(a, reg) & inventory(b, reg))


def fallback_exposure(
    lang: str, registry: Registry | None = None
) -> tuple[tuple[IpaSymbol, str], ...]:
    """The language's graphemes whose sounds have no direct Kazakh letter.

    Returned in inventory row order; each entry pairs the symbol with the
    grapheme that reaches it.
    """
    reg = registry if registry is not None else default_registry()
    row_order = {s.id: i for i, s in enumerate(reg.symbols)}
    exposed = [
        (symbol, grapheme)
        for grapheme, symbol in reg.tables[lang].to_ipa.items()
        if not symbol.in_kazakh
    ]
    exposed.sort(key=lambda pair: (row_order[pair[0].id], pair[1]))
    return tuple(exposed)


@dataclass(frozen=True)
class OverlapMatrix:
    languages: tuple[str, ...]
    counts: np.ndarray  # shape (10, 10), symmetric, diagonal = inventory sizes

    def cell(self, a: str, b: str) -> int:
        i, j = self.languages.index(a), self.languages.index(b)
        return int(self.counts[i, j])

    def to_tsv(self) -> str:
        lines = ["lang\t" + "\t".join(self.languages)]
        for i, code in enumerate(self.languages):
            lines.append(code + "\t" + "\t".join(str(int(c)) for c in self.counts[i]))
        return "\n".join(lines) + "\n"


def overlap_matrix(registry: Registry | None = None) -> OverlapMatrix:
    reg = registry if registry is not None else default_registry()
    codes = tuple(m.code for m in reg.languages)
    sets = [inventory(code, reg) for code in codes]
    counts = np.array([[len(a & b) for b in sets] for a in sets], dtype=np.int64)
    return OverlapMatrix(languages=codes, counts=counts)


def summary(registry: Registry | None = None) -> str:
    """Human-readable per-language inventory/overlap/fallback digest."""
    reg = registry if registry is not None else default_registry()
    lines = []
    for meta in reg.languages:
        inv = len(inventory(meta.code, reg))
        shared = overlap(meta.code, "kk", reg)
        exposed = fallback_exposure(meta.code, reg)
        note = ""
        if exposed:
            note = "  needs fallback for " + ", ".join(
                f"{sym.ipa} ({grapheme})" for sym, grapheme in exposed
            )
        lines.append(
            f"{meta.code:3}  {meta.display_name:11}  letters {inv:2}  shared with kk {shared:2}{note}"
        )
    return "\n".join(lines) + "\n"
