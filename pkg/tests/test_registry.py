"""Mapping-table structure: counts, bijections, lookups, and load validation."""

from importlib import resources

import pytest

from turkaz.errors import MalformedData
from turkaz.registry import (
    EXPECTED_COUNTS,
    LANGUAGES,
    default_registry,
    load_registry,
    resolve_language,
)
from turkaz.translit import KAZAKH_LETTERS

from conftest import corrupt


@pytest.mark.parametrize("lang,expected", sorted(EXPECTED_COUNTS.items()))
def test_grapheme_counts_match_bottom_row(registry, lang, expected):
    assert len(registry.graphemes(lang)) == expected


def test_inventory_shape(registry):
    assert len(registry.symbols) == 47
    assert sum(1 for s in registry.symbols if s.in_kazakh) == 42
    non_kazakh = {s.id for s in registry.symbols if not s.in_kazakh}
    assert non_kazakh == {"dzh", "gj", "theta", "edh", "nj"}
    assert set(registry.fallback_letters) == non_kazakh


def test_language_metadata(registry):
    assert tuple(m.code for m in registry.languages) == LANGUAGES
    branches = {m.code: m.branch for m in registry.languages}
    assert branches["kk"] == "Kipchak"
    assert branches["sah"] == "Siberian"
    assert branches["ug"] == "Karluk"
    ug = registry.meta("ug")
    assert ug.script == "Latin" and ug.main_writing_system == "Perso-Arabic"
    assert registry.meta("ba").script == "Cyrillic"


def test_specific_lookups(registry):
    assert registry.lookup_ipa("az", "q").id == "g"
    assert registry.lookup_ipa("az", "g").id == "gj"
    assert registry.lookup_ipa("tk", "s").id == "theta"
    assert registry.lookup_ipa("tk", "z").id == "edh"
    assert registry.lookup_ipa("tr", "x") is None
    assert registry.lookup_ipa("ky", "ж").id == "dzh"  # affricate row, not ʒ
    assert registry.lookup_ipa("kk", "у").id == "uw"
    assert registry.lookup_ipa("kk", "ұ").id == "u_short"


def test_turkish_column(registry):
    graphemes = registry.graphemes("tr")
    assert {"ç", "ş", "ı"} <= graphemes
    assert "q" not in graphemes and "w" not in graphemes


def test_digraphs(registry):
    assert {"gh", "ng", "ch", "sh", "zh"} <= registry.graphemes("ug")
    assert {"дь", "нь"} <= registry.graphemes("sah")
    assert {"oʻ", "gʻ", "sh", "ch", "ng"} <= registry.graphemes("uz")


def test_uyghur_e_row_is_cyrillic_io(registry):
    # Uyghur's letter for the e sound is carried as Cyrillic ё in the data.
    sym = registry.lookup_ipa("ug", "ё")
    assert sym is not None and sym.id == "e"


def test_kazakh_column_is_a_bijection(registry):
    for letter in registry.graphemes("kk"):
        symbol = registry.lookup_ipa("kk", letter)
        assert symbol.in_kazakh
        assert registry.render_kazakh(symbol) == letter
    rendered = {registry.kazakh_letters[s.id] for s in registry.symbols if s.in_kazakh}
    assert rendered == registry.graphemes("kk")


def test_kazakh_letters_constant_matches_data(registry):
    assert registry.graphemes("kk") == KAZAKH_LETTERS
    assert len(KAZAKH_LETTERS) == 42


def test_fallbacks_are_kazakh_sequences(registry):
    for sid, rendering in registry.fallback_letters.items():
        assert 1 <= len(rendering) <= 2
        assert set(rendering) <= KAZAKH_LETTERS
    assert registry.fallback_letters["nj"] == "нь"


def test_no_grapheme_maps_twice(registry):
    for lang in LANGUAGES:
        texts = list(registry.tables[lang].to_ipa)
        assert len(texts) == len(set(texts))


def test_tables_are_immutable(registry):
    with pytest.raises(TypeError):
        registry.tables["kk"].to_ipa["х"] = None  # type: ignore[index]
    with pytest.raises(TypeError):
        registry.tables["xx"] = None  # type: ignore[index]


def test_load_from_directory_override(data_dir_copy):
    reg = load_registry(data_dir_copy)
    assert len(reg.symbols) == 47
    assert reg.graphemes("tr") == default_registry().graphemes("tr")


def test_missing_kazakh_row_rejected(data_dir_copy):
    corrupt(data_dir_copy / "mappings.tsv", "q\tkk\tқ\n", "")
    with pytest.raises(MalformedData, match="kk has 41"):
        load_registry(data_dir_copy)


def test_unknown_ipa_id_rejected(data_dir_copy):
    corrupt(data_dir_copy / "mappings.tsv", "q\tkk\tқ", "nope\tkk\tқ")
    with pytest.raises(MalformedData, match="unknown IPA id"):
        load_registry(data_dir_copy)


def test_duplicate_grapheme_rejected(data_dir_copy):
    corrupt(data_dir_copy / "mappings.tsv", "q\tkk\tқ", "q\tkk\tх")
    with pytest.raises(MalformedData, match="duplicate grapheme"):
        load_registry(data_dir_copy)


def test_bad_column_count_rejected(data_dir_copy):
    corrupt(data_dir_copy / "mappings.tsv", "q\tkk\tқ", "q\tkk")
    with pytest.raises(MalformedData, match="columns"):
        load_registry(data_dir_copy)


def test_missing_fallback_rejected(data_dir_copy):
    corrupt(data_dir_copy / "fallbacks.tsv", "nj\tнь\n", "")
    with pytest.raises(MalformedData, match="nj"):
        load_registry(data_dir_copy)


def test_inventory_count_enforced(data_dir_copy):
    corrupt(data_dir_copy / "ipa_inventory.tsv", "nj\tɲ\tfalse\n", "")
    with pytest.raises(MalformedData):
        load_registry(data_dir_copy)


def test_registry_agrees_with_raw_tsv(registry):
    # Independent parse of the data file, bypassing the loader.
    text = (resources.files("turkaz") / "data" / "mappings.tsv").read_text(encoding="utf-8")
    rows = [
        line.split("\t")
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    ]
    per_lang: dict[str, set[str]] = {}
    for sid, lang, grapheme in rows:
        per_lang.setdefault(lang, set()).add(grapheme)
    assert {k: len(v) for k, v in per_lang.items()} == EXPECTED_COUNTS
    for lang, graphemes in per_lang.items():
        assert graphemes == registry.graphemes(lang)


def test_resolve_language_names():
    assert resolve_language("tr") == "tr"
    assert resolve_language("Turkish") == "tr"
    assert resolve_language("SAKHA") == "sah"
    assert resolve_language(" kazakh ") == "kk"
    with pytest.raises(KeyError):
        resolve_language("klingon")
