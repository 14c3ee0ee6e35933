"""`turkaz-backend serve`: stand up the synthesis service over real checkpoints."""

from __future__ import annotations

import json
from pathlib import Path

import click


@click.group(context_settings=dict(auto_envvar_prefix="TURKAZ_BACKEND"))
def main() -> None:
    """Synthesis backend for the Turkic-to-Kazakh frontend."""


@main.command("serve")
@click.option("--model", "model_path", type=click.Path(path_type=Path),
              help="Acoustic model checkpoint (.pth).")
@click.option("--vocoder", "vocoder_path", type=click.Path(path_type=Path),
              help="Vocoder checkpoint (.pkl).")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8080, show_default=True)
@click.option("--device", type=click.Choice(["cpu", "accelerator"]), default="cpu",
              show_default=True)
@click.option("--config", "config_file", type=click.Path(path_type=Path),
              help="JSON file with the same keys; flags win over file values.")
def serve(model_path, vocoder_path, host, port, device, config_file):
    """Load the checkpoints and answer /health and /synthesize."""
    import uvicorn

    from .app import create_app
    from .engine import AdapterConfig, EspnetEngine

    values = {}
    if config_file is not None:
        try:
            values = json.loads(Path(config_file).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise click.ClickException(f"cannot read config file: {exc}")
    if model_path is not None:
        values["model_path"] = model_path
    if vocoder_path is not None:
        values["vocoder_path"] = vocoder_path
    values.setdefault("host", host)
    values.setdefault("port", port)
    values.setdefault("device", device)
    if "model_path" not in values or "vocoder_path" not in values:
        raise click.ClickException("--model and --vocoder are required (flags or config file)")

    try:
        config = AdapterConfig(
            model_path=Path(values["model_path"]),
            vocoder_path=Path(values["vocoder_path"]),
            host=str(values["host"]),
            port=int(values["port"]),
            device=str(values["device"]),
        )
    except (FileNotFoundError, ValueError) as exc:
        raise click.ClickException(str(exc))

    app = create_app(lambda: EspnetEngine(config))
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")


if __name__ == "__main__":
    main()
