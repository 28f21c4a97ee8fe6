"""Utilities for persisting verification runs and their artefacts."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.fgr import save_graph
from acr_workbench.models import VerificationRun


class ArchiveRepository:
    """Handle serialization and retrieval of verification runs."""

    def __init__(self, base_path: str | Path) -> None:
        self.base_path = Path(base_path)
        self.base_path.mkdir(parents=True, exist_ok=True)

    def _run_dir(self, run_id: str) -> Path:
        return self.base_path / run_id

    def save_run(self, run: VerificationRun) -> str:
        run_dir = self._run_dir(run.run_id)
        run_dir.mkdir(parents=True, exist_ok=True)
        data_path = run_dir / "run.json"
        with data_path.open("w", encoding="utf-8") as fh:
            json.dump(
                run.model_dump(mode="json"),
                fh,
                ensure_ascii=False,
                indent=2,
            )
        return run.run_id

    def list_runs(self) -> Iterable[str]:
        if not self.base_path.exists():
            return []
        return sorted(p.name for p in self.base_path.iterdir() if (p / "run.json").is_file())

    def load_run(self, run_id: str) -> VerificationRun:
        data_path = self._run_dir(run_id) / "run.json"
        if not data_path.is_file():
            raise FileNotFoundError(f"Run {run_id} not found in {self.base_path}")
        with data_path.open("r", encoding="utf-8") as fh:
            payload = json.load(fh)
        return VerificationRun.model_validate(payload)

    def write_text(self, name: str, text: str, run_id: str | None = None) -> Path:
        """Store a rendered artefact in the archive root or next to a run."""

        target_dir = self._run_dir(run_id) if run_id else self.base_path
        target_dir.mkdir(parents=True, exist_ok=True)
        path = target_dir / _slugify(name)
        path.write_text(text, "utf-8")
        return path

    def write_graph(self, name: str, graph: FeaturedGraph, run_id: str | None = None) -> Path:
        target_dir = self._run_dir(run_id) if run_id else self.base_path
        return save_graph(graph, target_dir / _slugify(name))


def _slugify(value: str) -> str:
    safe = value.strip().replace(" ", "-")
    safe = "".join(ch for ch in safe if ch.isalnum() or ch in {"-", "_", "."})
    return safe or "artefact"
