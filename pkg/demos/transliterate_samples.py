#!/usr/bin/env python3
"""Walk a greeting through the two conversion stages for all ten languages.

Run:  python3 demos/transliterate_samples.py
"""

from turkaz import default_registry, transcribe, transliterate
from turkaz.translit import ipa_line

GREETINGS = {
    "az": "salam dünya",
    "ba": "һаумыһығыҙ",
    "kk": "сәлем әлем",
    "ky": "салам дүйнө",
    "sah": "дорообо дьон",
    "tt": "сәлам дөнья",
    "tr": "merhaba dünya",
    "tk": "salam dünýä",
    "ug": "yaxshimusiz",
    "uz": "salom dunyo",
}


def show(lang: str, text: str) -> None:
    meta = default_registry().meta(lang)
    ipa = ipa_line(transcribe(lang, text))
    result = transliterate(lang, text, "strict")
    print(f"{meta.display_name:11} {text}")
    print(f"{'':11}   phonetic : {ipa}")
    print(f"{'':11}   kazakh   : {result.output}")
    if result.used_fallbacks:
        subs = ", ".join(f"{sym.ipa} (item {i})" for i, sym in result.used_fallbacks)
        print(f"{'':11}   fallbacks: {subs}")
    print()


if __name__ == "__main__":
    print("Source text → IPA → Kazakh letters\n")
    for lang, text in GREETINGS.items():
        show(lang, text)
