"""Alphabet registry: the IPA inventory, per-language letter tables, and metadata.

Everything is loaded from TSV data files (embedded in the package, overridable
by directory path) into immutable structures, and validated on load:

* exactly 10 languages and 47 IPA symbols, 42 of them Kazakh;
* per-language grapheme counts match the alphabet sizes exactly
  (az 32, ba 42, kk 42, ky 36, sah 40, tt 39, tr 29, tk 30, ug 32, uz 30);
* the Kazakh column is a bijection between the 42 in-Kazakh symbols and the
  42 Kazakh letters;
* each of the 5 non-Kazakh symbols has a fallback rendering in Kazakh letters.

A loaded :class:`Registry` is immutable and safe for concurrent reads.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import MalformedData

#: Language codes in source-table column order.
LANGUAGES = ("az", "ba", "kk", "ky", "sah", "tt", "tr", "tk", "ug", "uz")

#: The source language whose alphabet is the output space.
SOURCE_LANGUAGE = "kk"

#: Letters (including digraphs) per language.
EXPECTED_COUNTS = {
    "az": 32, "ba": 42, "kk": 42, "ky": 36, "sah": 40,
    "tt": 39, "tr": 29, "tk": 30, "ug": 32, "uz": 30,
}

IPA_SYMBOL_COUNT = 47
KAZAKH_LETTER_COUNT = 42


@dataclass(frozen=True)
class LanguageMeta:
    """Per-language metadata (branch, scripts, display name)."""

    code: str
    display_name: str
    branch: str
    script: str                 # orthography this package parses: Latin or Cyrillic
    main_writing_system: str    # differs from `script` only for Uyghur (Perso-Arabic)


@dataclass(frozen=True)
class IpaSymbol:
    """One phonetic symbol of the 47-symbol inventory."""

    id: str          # stable ASCII identifier, the join key across data files
    ipa: str         # Unicode IPA rendering, for display only
    in_kazakh: bool  # True iff a Kazakh letter renders this symbol directly

    def __repr__(self) -> str:  # keep assertion output readable
        return f"IpaSymbol({self.id}/{self.ipa})"


@dataclass(frozen=True)
class MappingTable:
    """One language's grapheme → IPA symbol map."""

    language: str
    to_ipa: Mapping[str, IpaSymbol]

    def __len__(self) -> int:
        return len(self.to_ipa)


@dataclass(frozen=True)
class Registry:
    """Immutable bundle of all mapping tables, inventory, and metadata."""

    languages: tuple[LanguageMeta, ...]
    symbols: tuple[IpaSymbol, ...]
    tables: Mapping[str, MappingTable]
    kazakh_letters: Mapping[str, str]     # symbol id → Kazakh letter (the 42)
    fallback_letters: Mapping[str, str]   # symbol id → Kazakh sequence (the 5)
    _by_id: Mapping[str, IpaSymbol] = field(repr=False, default_factory=dict)

    def meta(self, lang: str) -> LanguageMeta:
        for m in self.languages:
            if m.code == lang:
                return m
        raise KeyError(lang)

    def symbol(self, symbol_id: str) -> IpaSymbol:
        return self._by_id[symbol_id]

    def table(self, lang: str) -> MappingTable:
        return self.tables[lang]

    def graphemes(self, lang: str) -> frozenset[str]:
        """All letters (and digraphs) of a language's alphabet, lowercase."""
        return frozenset(self.tables[lang].to_ipa)

    def lookup_ipa(self, lang: str, grapheme: str) -> IpaSymbol | None:
        """The unique symbol for a grapheme, or None if the language lacks it."""
        return self.tables[lang].to_ipa.get(grapheme)

    def render_kazakh(self, symbol: IpaSymbol) -> str:
        """Kazakh letters for a symbol, via the direct map or the fallback map."""
        if symbol.in_kazakh:
            return self.kazakh_letters[symbol.id]
        return self.fallback_letters[symbol.id]


def resolve_language(name: str) -> str:
    """Accept a short code or an English language name, case-insensitively."""
    key = name.strip().lower()
    if key in LANGUAGES:
        return key
    by_name = {m.display_name.lower(): m.code for m in default_registry().languages}
    if key in by_name:
        return by_name[key]
    raise KeyError(f"unknown language {name!r}; expected one of {', '.join(LANGUAGES)}")


def _read_tsv(path_or_trav, name: str, n_cols: int) -> Iterator[tuple[int, list[str]]]:
    """Yield (line_number, columns) from a TSV, skipping blanks and # comments."""
    text = path_or_trav.read_text(encoding="utf-8")
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.rstrip("\r").split("\t")
        if len(cols) != n_cols:
            raise MalformedData(
                f"expected {n_cols} tab-separated columns, got {len(cols)}",
                path=name, line=lineno,
            )
        yield lineno, cols


def _data_source(data_dir: str | Path | None):
    if data_dir is None:
        return resources.files("turkaz") / "data"
    return Path(data_dir)


def load_registry(data_dir: str | Path | None = None) -> Registry:
    """Load and validate the registry from `data_dir` (default: embedded files)."""
    root = _data_source(data_dir)

    metas: list[LanguageMeta] = []
    for lineno, cols in _read_tsv(root / "languages.tsv", "languages.tsv", 5):
        code, display, branch, script, main_ws = cols
        if script not in ("Latin", "Cyrillic"):
            raise MalformedData(f"unknown script {script!r}", path="languages.tsv", line=lineno)
        metas.append(LanguageMeta(code, display, branch, script, main_ws))
    if tuple(m.code for m in metas) != LANGUAGES:
        raise MalformedData(
            f"language set/order must be {LANGUAGES}, got {tuple(m.code for m in metas)}",
            path="languages.tsv",
        )

    symbols: list[IpaSymbol] = []
    for lineno, cols in _read_tsv(root / "ipa_inventory.tsv", "ipa_inventory.tsv", 3):
        sid, ipa, in_kk = cols
        if in_kk not in ("true", "false"):
            raise MalformedData(f"in_kazakh must be true/false, got {in_kk!r}",
                                path="ipa_inventory.tsv", line=lineno)
        symbols.append(IpaSymbol(sid, ipa, in_kk == "true"))
    by_id = {s.id: s for s in symbols}
    if len(by_id) != len(symbols):
        raise MalformedData("duplicate symbol id", path="ipa_inventory.tsv")
    if len(symbols) != IPA_SYMBOL_COUNT:
        raise MalformedData(f"expected {IPA_SYMBOL_COUNT} IPA symbols, got {len(symbols)}",
                            path="ipa_inventory.tsv")
    n_kazakh = sum(1 for s in symbols if s.in_kazakh)
    if n_kazakh != KAZAKH_LETTER_COUNT:
        raise MalformedData(f"expected {KAZAKH_LETTER_COUNT} in-Kazakh symbols, got {n_kazakh}",
                            path="ipa_inventory.tsv")

    to_ipa: dict[str, dict[str, IpaSymbol]] = {code: {} for code in LANGUAGES}
    for lineno, cols in _read_tsv(root / "mappings.tsv", "mappings.tsv", 3):
        sid, lang, grapheme = cols
        if sid not in by_id:
            raise MalformedData(f"unknown IPA id {sid!r}", path="mappings.tsv", line=lineno)
        if lang not in to_ipa:
            raise MalformedData(f"unknown language {lang!r}", path="mappings.tsv", line=lineno)
        if not 1 <= len(grapheme) <= 2:
            raise MalformedData(f"grapheme {grapheme!r} must be 1-2 code points",
                                path="mappings.tsv", line=lineno)
        if grapheme != unicodedata.normalize("NFC", grapheme) or grapheme != grapheme.lower():
            raise MalformedData(f"grapheme {grapheme!r} must be lowercase NFC",
                                path="mappings.tsv", line=lineno)
        if grapheme in to_ipa[lang]:
            raise MalformedData(f"duplicate grapheme {grapheme!r} for {lang}",
                                path="mappings.tsv", line=lineno)
        to_ipa[lang][grapheme] = by_id[sid]

    for code, expected in EXPECTED_COUNTS.items():
        if len(to_ipa[code]) != expected:
            raise MalformedData(
                f"{code} has {len(to_ipa[code])} graphemes, expected {expected}",
                path="mappings.tsv",
            )

    # The Kazakh column, inverted, is the rendering map for the 42 letters.
    kazakh_letters: dict[str, str] = {}
    for grapheme, sym in to_ipa[SOURCE_LANGUAGE].items():
        if not sym.in_kazakh:
            raise MalformedData(f"Kazakh grapheme {grapheme!r} maps to non-Kazakh symbol {sym.id}",
                                path="mappings.tsv")
        if len(grapheme) != 1:
            raise MalformedData(f"Kazakh letters are single code points, got {grapheme!r}",
                                path="mappings.tsv")
        if sym.id in kazakh_letters:
            raise MalformedData(f"symbol {sym.id} reached from two Kazakh letters",
                                path="mappings.tsv")
        kazakh_letters[sym.id] = grapheme
    if len(kazakh_letters) != KAZAKH_LETTER_COUNT:
        raise MalformedData("Kazakh column does not cover all 42 in-Kazakh symbols",
                            path="mappings.tsv")

    fallback_letters: dict[str, str] = {}
    kk_letter_set = set(kazakh_letters.values())
    for lineno, cols in _read_tsv(root / "fallbacks.tsv", "fallbacks.tsv", 2):
        sid, rendering = cols
        if sid not in by_id:
            raise MalformedData(f"unknown IPA id {sid!r}", path="fallbacks.tsv", line=lineno)
        if by_id[sid].in_kazakh:
            raise MalformedData(f"fallback given for in-Kazakh symbol {sid}",
                                path="fallbacks.tsv", line=lineno)
        if not 1 <= len(rendering) <= 2 or not set(rendering) <= kk_letter_set:
            raise MalformedData(f"fallback {rendering!r} is not 1-2 Kazakh letters",
                                path="fallbacks.tsv", line=lineno)
        if sid in fallback_letters:
            raise MalformedData(f"duplicate fallback for {sid}", path="fallbacks.tsv", line=lineno)
        fallback_letters[sid] = rendering

    # Every symbol reachable from any language must be renderable in Kazakh.
    reachable = {sym.id for table in to_ipa.values() for sym in table.values()}
    unrenderable = reachable - set(kazakh_letters) - set(fallback_letters)
    if unrenderable:
        raise MalformedData(f"no Kazakh rendering for reachable symbols {sorted(unrenderable)}",
                            path="fallbacks.tsv")
    missing_fallback = {s.id for s in symbols if not s.in_kazakh} - set(fallback_letters)
    if missing_fallback:
        raise MalformedData(f"missing fallback entries for {sorted(missing_fallback)}",
                            path="fallbacks.tsv")

    tables = {
        code: MappingTable(code, MappingProxyType(dict(table)))
        for code, table in to_ipa.items()
    }
    return Registry(
        languages=tuple(metas),
        symbols=tuple(symbols),
        tables=MappingProxyType(tables),
        kazakh_letters=MappingProxyType(kazakh_letters),
        fallback_letters=MappingProxyType(fallback_letters),
        _by_id=MappingProxyType(by_id),
    )


@lru_cache(maxsize=1)
def default_registry() -> Registry:
    """The registry built from the embedded data files (loaded once)."""
    return load_registry(None)
