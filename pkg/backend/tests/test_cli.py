"""serve command: config assembly and startup validation, with no model load."""

import json

from click.testing import CliRunner

from turkaz_backend.cli import main


def test_serve_requires_model_paths():
    result = CliRunner().invoke(main, ["serve"])
    assert result.exit_code != 0
    assert "--model and --vocoder are required" in result.output + result.stderr


def test_serve_rejects_missing_artifacts(tmp_path):
    result = CliRunner().invoke(main, [
        "serve", "--model", str(tmp_path / "nope.pth"),
        "--vocoder", str(tmp_path / "nope.pkl"),
    ])
    assert result.exit_code != 0
    assert "not found" in result.output + result.stderr


def test_serve_merges_config_file(tmp_path, monkeypatch):
    model = tmp_path / "model.pth"
    vocoder = tmp_path / "vocoder.pkl"
    model.touch()
    vocoder.touch()
    config = tmp_path / "serve.json"
    config.write_text(json.dumps({
        "model_path": str(model), "vocoder_path": str(vocoder),
        "port": 9911, "device": "cpu",
    }), encoding="utf-8")

    captured = {}

    def fake_run(app, host, port, log_level):
        captured.update(host=host, port=port)

    monkeypatch.setattr("uvicorn.run", fake_run)
    result = CliRunner().invoke(main, ["serve", "--config", str(config)])
    assert result.exit_code == 0, result.output
    assert captured == {"host": "127.0.0.1", "port": 9911}
