"""Run directories and the JSON/text artifacts written into them."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
import json
import os
import re
import secrets
from pathlib import Path
from typing import Any, Mapping, Optional

ROOT_DIR = Path(__file__).resolve().parent.parent
DATA_DIR = ROOT_DIR / "data"
PARAMS_DIR = ROOT_DIR / "params"
DATA_DIR_ENV = "UNPROJ_DATA_DIR"


@dataclass(slots=True)
class RunPaths:
    """Where one CLI invocation leaves its log and its JSON output."""

    run_id: str
    step_name: str
    base_dir: Path

    @property
    def summary_path(self) -> Path:
        return self.base_dir / f"{sanitize_filename(self.step_name)}.json"

    @property
    def log_path(self) -> Path:
        return self.base_dir / "unproj.log"


def data_dir_from_env(environ: Optional[Mapping[str, str]] = None) -> Path:
    """`UNPROJ_DATA_DIR` if set, else `data/` at the repository root."""
    environ = os.environ if environ is None else environ
    value = environ.get(DATA_DIR_ENV)
    return Path(value) if value else DATA_DIR


def generate_run_id() -> str:
    timestamp = datetime.now(timezone.utc).strftime("%Y%m%d-%H%M%S")
    suffix = secrets.token_hex(2)
    return f"{timestamp}-{suffix}"


def prepare_run_directories(run_id: str, step_name: str, data_dir: Optional[Path] = None) -> RunPaths:
    base_dir = (data_dir or data_dir_from_env()) / sanitize_filename(run_id)
    base_dir.mkdir(parents=True, exist_ok=True)
    return RunPaths(run_id=run_id, step_name=step_name, base_dir=base_dir)


def write_json(path: Path, payload: Any, sort_keys: bool = True) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=sort_keys, ensure_ascii=False)
    return path


def save_text(path: Path, content: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")
    return path


def sanitize_filename(text: str) -> str:
    cleaned = re.sub(r"[^A-Za-z0-9._-]+", "-", text.strip()).strip("-_")
    return cleaned or "artifact"


def relative_artifact_path(path: Path) -> str:
    try:
        return str(path.resolve().relative_to(ROOT_DIR))
    except ValueError:
        return str(path.resolve())
