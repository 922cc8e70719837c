"""Renderers for human-facing output (stderr)."""
