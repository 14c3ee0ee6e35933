#!/usr/bin/env python3
"""Full frontend flow: transliterate, split, synthesize (mock), persist WAVs.

Run:  python3 demos/speak_with_mock.py
Writes the audio files into ./demo_audio/.
"""

from pathlib import Path

from turkaz import MockBackend, split_sentences, synthesize, transliterate, write_wav

TEXT = "merhaba dünya. bugün hava çok güzel! yarın görüşürüz."

if __name__ == "__main__":
    result = transliterate("tr", TEXT, "drop")
    print("kazakh text:", result.output)

    requests = split_sentences(result.output)
    results = synthesize(requests, MockBackend())

    out_dir = Path("demo_audio")
    out_dir.mkdir(exist_ok=True)
    for i, (req, audio) in enumerate(zip(requests, results)):
        path = write_wav(audio, out_dir / f"demo_{i}.wav")
        print(f"{req.text!r} → {path} ({audio.duration:.1f}s @ {audio.sample_rate} Hz)")
