"""Executable invariants for Chisini-type uniqueness questions about plane covers."""

__version__ = "0.1.0"
