"""Bundled problem files."""
