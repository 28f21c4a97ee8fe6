"""Configuration, persistence and report rendering helpers."""
