"""Configuration helpers for workbench runs and brute-force caps."""
from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict

BASE_DIR = Path(__file__).resolve().parents[1]
CONFIG_PATH = BASE_DIR / "storage" / "settings.json"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WorkbenchLimits:
    """Size caps for every exponential oracle."""

    # n*n + n*d; 16 admits every digraph up to n = 4 at d = 0
    enumeration_bits: int = 16
    isomorphism_vertices: int = 10
    hom_pattern_vertices: int = 6
    hom_target_vertices: int = 30
    ef_vertices: int = 10
    ef_rounds: int = 3
    sequence_length: int = 6
    family_product: int = 6
    game_vertices: int = 8

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WorkbenchLimits":
        defaults = cls()
        values = {}
        for item in fields(cls):
            parsed = _safe_int(data.get(item.name), default=None)
            values[item.name] = parsed if parsed is not None and parsed > 0 else getattr(defaults, item.name)
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


DEFAULT_LIMITS = WorkbenchLimits()


@dataclass
class WorkbenchSettings:
    """Run-level settings shared by the CLI and the verification workflow."""

    seed: int = 7
    jobs: int = 1
    report_format: str = "text"
    limits: WorkbenchLimits = field(default_factory=WorkbenchLimits)

    @classmethod
    def default(cls) -> "WorkbenchSettings":
        return cls()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WorkbenchSettings":
        seed = _safe_int(data.get("seed"), default=7)
        jobs = _safe_int(data.get("jobs"), default=1)
        report_format = data.get("report_format") or "text"
        if report_format not in {"text", "tsv"}:
            logger.warning("unknown report format %r, using text", report_format)
            report_format = "text"
        return cls(
            seed=seed if seed is not None else 7,
            jobs=max(1, jobs if jobs is not None else 1),
            report_format=report_format,
            limits=WorkbenchLimits.from_dict(data.get("limits") or {}),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "jobs": self.jobs,
            "report_format": self.report_format,
            "limits": self.limits.to_dict(),
        }


def load_settings(path: Path | None = None) -> WorkbenchSettings:
    """Load settings from disk or return defaults when missing or unreadable."""

    settings_path = path or CONFIG_PATH
    if not settings_path.exists():
        return WorkbenchSettings.default()
    try:
        data = json.loads(settings_path.read_text("utf-8"))
    except (json.JSONDecodeError, OSError) as exc:
        logger.warning("cannot read settings from %s (%s); using defaults", settings_path, exc)
        return WorkbenchSettings.default()
    if not isinstance(data, dict):
        return WorkbenchSettings.default()
    return WorkbenchSettings.from_dict(data)


def save_settings(settings: WorkbenchSettings, path: Path | None = None) -> Path:
    """Persist settings to disk as JSON."""

    settings_path = path or CONFIG_PATH
    settings_path.parent.mkdir(parents=True, exist_ok=True)
    payload = settings.to_dict()
    settings_path.write_text(json.dumps(payload, ensure_ascii=False, indent=2), "utf-8")
    return settings_path


def _safe_int(value: Any, default: int | None = None) -> int | None:
    if value is None or value == "":
        return default
    try:
        return int(value)
    except (TypeError, ValueError):
        return default


__all__ = [
    "DEFAULT_LIMITS",
    "WorkbenchLimits",
    "WorkbenchSettings",
    "load_settings",
    "save_settings",
]
