"""Exact verification engine for synthetic-differential and cohesion constructions."""

__version__ = "0.1.0"
