"""Sentence-embedding exporter for the canonical 108 instructions."""

__version__ = "0.1.0"
