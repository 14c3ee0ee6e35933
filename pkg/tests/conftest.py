import random
import shutil
from importlib import resources
from pathlib import Path

import pytest

from turkaz.registry import default_registry

SEED = 20260810

#: Characters no Turkic alphabet claims, for noisy-input tests.
NOISE = list("0123456789;:()\"«»…~@#$%^&*+=/\\|<>[]{}№") + ["q", "w", "è", "Ω", "漢", "😀", "\t", "'"]

PUNCT = list(".,-?!")


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture()
def rng():
    return random.Random(SEED)


@pytest.fixture()
def data_dir_copy(tmp_path):
    """A writable copy of the embedded data files, for corruption tests."""
    src = resources.files("turkaz") / "data"
    for name in ("languages.tsv", "ipa_inventory.tsv", "mappings.tsv",
                 "fallbacks.tsv", "confusables.tsv"):
        shutil.copyfile(str(src / name), tmp_path / name)
    return tmp_path


def random_kazakh_text(rng, kazakh_letters, max_len=80):
    """A string over the 42 Kazakh letters, whitelist punctuation, and spaces."""
    pool = sorted(kazakh_letters) + PUNCT + [" "]
    return "".join(rng.choice(pool) for _ in range(rng.randint(0, max_len)))


def random_language_text(rng, registry, lang, max_len=60, noise_rate=0.0):
    """Concatenated graphemes of `lang`, optionally salted with noise characters."""
    graphemes = sorted(registry.graphemes(lang))
    parts = []
    for _ in range(rng.randint(0, max_len)):
        if noise_rate and rng.random() < noise_rate:
            parts.append(rng.choice(NOISE))
        elif rng.random() < 0.12:
            parts.append(rng.choice(PUNCT + [" ", " "]))
        else:
            parts.append(rng.choice(graphemes))
    return "".join(parts)


def corrupt(path: Path, old: str, new: str, count: int = 1):
    text = path.read_text(encoding="utf-8")
    assert old in text, f"{old!r} not found in {path.name}"
    path.write_text(text.replace(old, new, count), encoding="utf-8")
