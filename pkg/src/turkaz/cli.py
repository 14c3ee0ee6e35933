"""Command-line surface: translit, ipa, validate, overlap, speak.

Exit codes: 0 success, 1 I/O or empty input, 2 untransliterable input or data
validation failure, 3 backend failure. Data goes to stdout, diagnostics to
stderr. Options can be set through environment variables with the ``TURKAZ``
prefix (e.g. ``TURKAZ_SPEAK_BACKEND_URL``).
"""

from __future__ import annotations

import json as jsonlib
import sys
from pathlib import Path

import click

from . import analysis, pipeline
from .backends import backend_from_url
from .errors import (
    BackendError,
    BackendTimeout,
    BackendUnavailable,
    EmptyInput,
    MalformedData,
    UnknownCharacter,
)
from .normalize import load_confusables
from .registry import EXPECTED_COUNTS, Registry, load_registry, resolve_language
from .translit import POLICIES, transcribe, transliterate, unknown_reason

EXIT_IO = 1
EXIT_DATA = 2
EXIT_BACKEND = 3

_CONTEXT = dict(auto_envvar_prefix="TURKAZ", help_option_names=["-h", "--help"])


def _fail(code: int, message: str) -> None:
    click.echo(f"turkaz: {message}", err=True)
    sys.exit(code)


def _load(data_dir: str | None) -> Registry:
    try:
        return load_registry(data_dir)
    except MalformedData as exc:
        _fail(EXIT_DATA, f"bad data: {exc}")
    except OSError as exc:
        _fail(EXIT_IO, f"cannot read data files: {exc}")


def _lang(code: str) -> str:
    try:
        return resolve_language(code)
    except KeyError as exc:
        _fail(EXIT_DATA, str(exc.args[0]))


def _confusables(data_dir: str | None):
    """An overridden lookalike table, when the data dir carries one."""
    if data_dir is None:
        return None
    path = Path(data_dir) / "confusables.tsv"
    if not path.exists():
        return None
    try:
        return load_confusables(path)
    except MalformedData as exc:
        _fail(EXIT_DATA, f"bad data: {exc}")


def _read_lines(input_: str) -> list[str]:
    try:
        if input_ == "-":
            text = sys.stdin.buffer.read().decode("utf-8")
        else:
            text = Path(input_).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        _fail(EXIT_IO, f"cannot read input: {exc}")
    if text.startswith("﻿"):
        text = text[1:]
    return text.splitlines()


def _write_text(output: str, text: str) -> None:
    try:
        if output == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            with open(output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
    except OSError as exc:
        _fail(EXIT_IO, f"cannot write output: {exc}")


def _write_report(report: str | None, rows: list[tuple]) -> None:
    if report is None:
        return
    lines = ["line\tevent\tposition\tvalue\tdetail"]
    lines += ["\t".join(str(c) for c in row) for row in rows]
    body = "\n".join(lines) + "\n"
    if report == "-":
        sys.stderr.write(body)
    else:
        _write_text(report, body)


def _audit_rows(line_no: int, result) -> list[tuple]:
    rows = []
    for idx, symbol in result.used_fallbacks:
        rows.append((line_no, "fallback", idx, symbol.id, symbol.ipa))
    for idx, text, reason in result.dropped:
        rows.append((line_no, "dropped", idx, text, reason))
    return rows


@click.group(context_settings=_CONTEXT)
def main() -> None:
    """Turkic-to-Kazakh transliteration and speech-synthesis frontend."""


_lang_option = click.option("--lang", "-l", required=True, help="Language code or English name.")
_policy_option = click.option(
    "--policy", type=click.Choice(POLICIES), default="drop", show_default=True,
    help="What to do with untransliterable characters.",
)
_input_option = click.option("--input", "-i", "input_", default="-", show_default=True,
                             help="Input file, or - for stdin.")
_output_option = click.option("--output", "-o", default="-", show_default=True,
                              help="Output file, or - for stdout.")
_report_option = click.option("--report", default=None,
                              help="Write a TSV audit of fallbacks/drops (path, or - for stderr).")
_data_dir_option = click.option("--data-dir", default=None,
                                help="Directory with override TSV data files.")


@main.command("translit")
@_lang_option
@_policy_option
@_input_option
@_output_option
@_report_option
@_data_dir_option
def translit_cmd(lang, policy, input_, output, report, data_dir):
    """Transliterate text into the Kazakh alphabet, line by line."""
    reg = _load(data_dir)
    code = _lang(lang)
    folds = _confusables(data_dir)
    out_lines: list[str] = []
    audit: list[tuple] = []
    for line_no, line in enumerate(_read_lines(input_), start=1):
        try:
            result = transliterate(code, line, policy, registry=reg, confusables=folds)
        except UnknownCharacter as exc:
            _fail(EXIT_DATA, f"line {line_no}: {exc}")
        out_lines.append(result.output)
        audit += _audit_rows(line_no, result)
    _write_text(output, "".join(s + "\n" for s in out_lines))
    _write_report(report, audit)


@main.command("ipa")
@_lang_option
@_policy_option
@_input_option
@_output_option
@_report_option
@_data_dir_option
def ipa_cmd(lang, policy, input_, output, report, data_dir):
    """Emit the intermediate IPA transcription, space-separated, line by line."""
    reg = _load(data_dir)
    code = _lang(lang)
    folds = _confusables(data_dir)
    out_lines: list[str] = []
    audit: list[tuple] = []
    for line_no, line in enumerate(_read_lines(input_), start=1):
        ipa = transcribe(code, line, registry=reg, confusables=folds)
        parts: list[str] = []
        for idx, item in enumerate(ipa.items):
            if item.kind == "symbol":
                parts.append(item.symbol.ipa)
            elif item.kind == "punct":
                parts.append(item.text)
            elif item.kind == "unknown":
                if policy == "strict":
                    _fail(EXIT_DATA, f"line {line_no}: untransliterable {item.text!r} at item {idx}")
                audit.append((line_no, "dropped", idx, item.text, unknown_reason(item.text)))
        out_lines.append(" ".join(parts))
    _write_text(output, "".join(s + "\n" for s in out_lines))
    _write_report(report, audit)


@main.command("validate")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@_data_dir_option
def validate_cmd(as_json, data_dir):
    """Load the mapping data and verify every table invariant."""
    try:
        reg = load_registry(data_dir)
    except (MalformedData, OSError) as exc:
        if as_json:
            click.echo(jsonlib.dumps({"ok": False, "error": str(exc)}))
        else:
            click.echo(f"turkaz: bad data: {exc}", err=True)
        sys.exit(EXIT_DATA)

    counts = {m.code: len(reg.tables[m.code]) for m in reg.languages}
    problems = [
        f"{code}: {n} graphemes, expected {EXPECTED_COUNTS[code]}"
        for code, n in counts.items()
        if n != EXPECTED_COUNTS[code]
    ]
    # Round-trip: every Kazakh letter returns to itself through its symbol.
    for letter, symbol in reg.tables["kk"].to_ipa.items():
        if reg.kazakh_letters.get(symbol.id) != letter:
            problems.append(f"kk round-trip broken for {letter!r}")
    non_kazakh = [s for s in reg.symbols if not s.in_kazakh]
    if len(non_kazakh) != 5:
        problems.append(f"{len(non_kazakh)} symbols lack a Kazakh letter, expected 5")
    if set(reg.fallback_letters) != {s.id for s in non_kazakh}:
        problems.append("fallback map does not cover exactly the non-Kazakh symbols")

    if as_json:
        click.echo(jsonlib.dumps({
            "ok": not problems,
            "ipa_symbols": len(reg.symbols),
            "in_kazakh": sum(1 for s in reg.symbols if s.in_kazakh),
            "languages": counts,
            "fallback_symbols": sorted(reg.fallback_letters),
            "problems": problems,
        }, ensure_ascii=False))
    else:
        click.echo(f"ipa {len(reg.symbols)}")
        for code, n in counts.items():
            click.echo(f"{code} {n}")
        for p in problems:
            click.echo(f"turkaz: {p}", err=True)
    if problems:
        sys.exit(EXIT_DATA)


@main.command("overlap")
@_output_option
@_data_dir_option
def overlap_cmd(output, data_dir):
    """Emit the 10x10 shared-phoneme-count matrix as TSV."""
    reg = _load(data_dir)
    _write_text(output, analysis.overlap_matrix(reg).to_tsv())


@main.command("speak")
@_lang_option
@_policy_option
@_input_option
@click.option("--output", "-o", "out_dir", default=".", show_default=True,
              help="Directory to write WAV files into.")
@click.option("--stem", default="out", show_default=True, help="WAV filename stem.")
@click.option("--backend-url", required=True,
              help="Synthesis endpoint, e.g. http://127.0.0.1:8080 (or mock: for tests).")
@click.option("--max-length", type=int, default=pipeline.DEFAULT_MAX_LENGTH, show_default=True)
@click.option("--timeout", type=float, default=60.0, show_default=True)
@click.option("--parallelism", type=int, default=pipeline.DEFAULT_PARALLELISM, show_default=True)
@_report_option
@_data_dir_option
def speak_cmd(lang, policy, input_, out_dir, stem, backend_url, max_length,
              timeout, parallelism, report, data_dir):
    """Transliterate, split into sentences, synthesize, and write WAV files."""
    from .audio import write_wav

    reg = _load(data_dir)
    code = _lang(lang)
    text = "\n".join(_read_lines(input_))
    if not text.strip():
        _fail(EXIT_IO, "empty input")
    try:
        result = transliterate(code, text, policy, registry=reg,
                               confusables=_confusables(data_dir))
    except UnknownCharacter as exc:
        _fail(EXIT_DATA, str(exc))
    try:
        requests = pipeline.split_sentences(result.output, max_length=max_length)
    except EmptyInput:
        _fail(EXIT_IO, "nothing synthesizable after transliteration")

    backend = backend_from_url(backend_url, timeout=timeout)
    try:
        results = pipeline.synthesize(requests, backend, parallelism=parallelism)
    except (BackendUnavailable, BackendTimeout, BackendError) as exc:
        _fail(EXIT_BACKEND, str(exc))

    directory = Path(out_dir)
    try:
        directory.mkdir(parents=True, exist_ok=True)
        for i, (req, aud) in enumerate(zip(requests, results)):
            path = directory / f"{stem}_{i}.wav"
            write_wav(aud, path)
            click.echo(f"{req.text} → {path}")
    except OSError as exc:
        _fail(EXIT_IO, f"cannot write audio: {exc}")
    _write_report(report, _audit_rows(1, result))


if __name__ == "__main__":
    main()
