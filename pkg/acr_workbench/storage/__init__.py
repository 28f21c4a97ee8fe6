"""Storage helpers; ``settings.json`` and run archives live next to this file by default."""
from acr_workbench.utils.filesystem import ArchiveRepository

__all__ = ["ArchiveRepository"]
