"""Command-line interface."""

from acr_workbench.cli.app import build_parser, main

__all__ = ["build_parser", "main"]
